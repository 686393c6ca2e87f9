/*
   Copyright 2026 The hopfneb Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
   Text formats for user instances.  '#' starts a comment.

   Hopf algebra instance:

       name     K[Z/2]
       field    q                 # or f:<p>
       basis    1 u
       unit     1
       mul      u u = 1           # products with a one-term unit are implied
       delta    u = u|u           # terms: [coef*]x|y joined by '+'
       eps      u = 1
       antipode u = u             # optional, one line per basis element
       commutative                # optional; the table is then checked symmetric

   Unlisted products are zero.  Coefficients are n, -n or n/d.

   Group (Cayley table, one row per left factor):

       label    Z/3
       elements e a b
       e: e a b
       a: a b e
       b: b e a
*/

#ifndef HOPFNEB_INSTANCE_HPP
#define HOPFNEB_INSTANCE_HPP

#include <string>
#include <string_view>

#include "hopfneb/hopf.hpp"

namespace hopfneb {

/// Throws ParseError (with line and column), or InvalidTable from the algebra check.
TableHopfData parse_instance(std::string_view text, Field default_field = Field::rationals());
TableHopfData load_instance(const std::string& path, Field default_field = Field::rationals());

/// Throws ParseError, or InvalidGroupTable.
GroupTable parse_group(std::string_view text);
GroupTable load_group(const std::string& path);

/// "q" or "f:<p>".  Throws InvalidArgument.
Field parse_field(std::string_view text);

}  // namespace hopfneb

#endif

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

#ifndef HOPFNEB_CHECK_HPP
#define HOPFNEB_CHECK_HPP

#include <string>
#include <vector>

#include "hopfneb/algebra.hpp"
#include "hopfneb/ideal.hpp"
#include "hopfneb/report.hpp"

namespace hopfneb {

struct CheckOutcome {
    Status status = Status::Pass;
    std::string witness;
    std::vector<CertificateTerm> certificate;
    std::string level;
    std::string note;
};

/// Witnesses list at most this many leading terms, then the term count.
inline constexpr std::size_t kWitnessTerms = 12;

/// lhs == rhs exactly ("free" or "table" level), else rhs - lhs in the
/// relation ideal ("ideal"), else Fail with witness rhs - lhs.
CheckOutcome compare_tensors(const TensorElement& lhs, const TensorElement& rhs,
                             IdealOracle* oracle);

/// Coordinatewise comparison of module vectors; the witness lists the
/// nonzero coordinates of rhs - lhs as "e<p>: ...".
CheckOutcome compare_vectors(const std::vector<TensorElement>& lhs,
                             const std::vector<TensorElement>& rhs, IdealOracle* oracle);

ReportEntry make_entry(const std::string& scenario, const std::string& check,
                       const std::string& element, const CheckOutcome& outcome,
                       std::size_t degree_bound, bool expect_pass = true);

}  // namespace hopfneb

#endif

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
   Convolution of linear maps H -> B:  (f * g) = mu_B o (f (x) g) o Delta,
   with unit eta_B o eps, and the action (v . phi) = mu_B o (v (x) phi) o delta
   of such maps on linear maps A -> B through a coaction delta.
*/

#ifndef HOPFNEB_CONVOLUTION_HPP
#define HOPFNEB_CONVOLUTION_HPP

#include <optional>
#include <string>

#include "hopfneb/hopf.hpp"
#include "hopfneb/linear_map.hpp"

namespace hopfneb {

/// eta_B o eps.
LinearMapSpec convolution_unit(const HopfDescriptor& h, const AlgebraRef& b);
/// The zero map H -> B.
LinearMapSpec zero_map(const AlgebraRef& domain, const AlgebraRef& b);

/// Evaluated lazily per basis key, so it also works on free H.
LinearMapSpec convolution(const HopfDescriptor& h, const AlgebraRef& b, const LinearMapSpec& f,
                          const LinearMapSpec& g);

/// x |-> mu_B((v (x) phi)(delta(x))).
LinearMapSpec star_action(const LinearMapSpec& v, const LinearMapSpec& phi,
                          const LinearMapSpec& delta);

/// f o g for maps with one codomain factor.
LinearMapSpec compose(const LinearMapSpec& f, const LinearMapSpec& g);

/// Exhaustive equality on the basis of a table domain.  Throws InfiniteBasis.
bool maps_equal_on_basis(const LinearMapSpec& f, const LinearMapSpec& g);

struct ConvolutionInverse {
    std::optional<LinearMapSpec> inverse;
    /// Describes the singular system when there is no inverse.
    std::string certificate;

    bool invertible() const noexcept { return inverse.has_value(); }
};

/// Solves f * g = g * f = eta o eps exactly.  Throws InfiniteBasis unless H
/// and B are table algebras.
ConvolutionInverse convolution_inverse(const HopfDescriptor& h, const AlgebraRef& b,
                                       const LinearMapSpec& f);

}  // namespace hopfneb

#endif

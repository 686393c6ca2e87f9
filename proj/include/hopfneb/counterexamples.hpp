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
   The two rank-2 examples over the free Hopf algebra H on the 2x2 matrix
   coalgebra (A = H, delta = Delta, M = H + H), the partial algebra map
   w: H -> R into the free algebra R on {y, z}, and the designed mutations.
*/

#ifndef HOPFNEB_COUNTEREXAMPLES_HPP
#define HOPFNEB_COUNTEREXAMPLES_HPP

#include <utility>

#include "hopfneb/equivariance.hpp"

namespace hopfneb {

/// Free Hopf algebra on the 2x2 matrix coalgebra, generators a[r;i,j].
HopfDescriptor matrix_free_hopf(Field field = Field::rationals());

/// Generator a[r;i,j].
GenId matrix_generator(int r, int i, int j);

/// T[p][q] = a[0;p,q] (x) 1.
NebMatrix build_example_ex(const HopfDescriptor& h);

/// D[p][q] = a[0;p,q] (x) 1, read as dbar(e_q) = sum_p a[0;p,q] (x) e_p.
HopfModuleMatrix build_example_exhopf(const HopfDescriptor& h);

/// Algebra map defined on level-0 generators only:
/// a[0;0,0] -> 1, a[0;0,1] -> y, a[0;1,0] -> z, a[0;1,1] -> yz.
struct PartialW {
    AlgebraRef R;
    LinearMapSpec w;
    /// w (x) eps: H (x) H -> R.
    RingHom w_eps;

    static PartialW make(const HopfDescriptor& h);

    Element y() const;
    Element z() const;
    /// Level-0 word of H mapped by w onto the given word in y, z.
    Element lift(const Word& r_word) const;
};

/// Words of R of degree <= max_degree.
std::vector<Element> r_spanning_words(const PartialW& pw, std::size_t max_degree = 2);

/// (x0 + x1 y, x0 z + x1 yz).
std::pair<Element, Element> theta_R_direct(const PartialW& pw, const Element& x0, const Element& x1);

/// The same map as the extension of scalars of Theta along w (x) eps: each
/// word of x_q is lifted to (h (x) 1) e_q, Theta is applied over H (x) H and
/// the result is pushed to R^2 through w (x) eps.  Throws
/// MissingGeneratorImage if a generator of level > 0 is reached.
std::pair<Element, Element> theta_R_extended(const PartialW& pw, const ModuleMatrix& Theta,
                                             const Element& x0, const Element& x1);

/// Applies the matrix extend_scalars(w (x) eps, m) to (x0, x1).
std::pair<Element, Element> apply_extended(const PartialW& pw, const ModuleMatrix& m,
                                           const Element& x0, const Element& x1);

/// Example Ex with T[0][1] and T[1][0] set to zero.
NebMatrix mutate_example_ex(const NebMatrix& ex);

/// Example ExHopf with dbar(e_1) = 0.
HopfModuleMatrix truncate_example_exhopf(const HopfModuleMatrix& exhopf);

/// K[Z/2] with delta(g1) = g1 (x) 1 in place of g1 (x) g1.
Coaction corrupted_coaction(Field field = Field::rationals());

}  // namespace hopfneb

#endif

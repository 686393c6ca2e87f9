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
   Coactions delta: A -> H (x) A and the maps built on them, for a free left
   A-module M = A^n.

   theta: M -> delta^* M is stored as a matrix T over H (x) A with
   theta(e_q) = sum_p T[p][q] (x) e_p; theta(a m) = (1 (x) a) theta(m).  The
   same matrix is the (H (x) A)-linear Theta from eta^* M = H (x) M.

   A relative Hopf module coaction dbar: M -> H (x) M is a matrix D over
   H (x) A with dbar(e_q) = sum_p D[p][q] (x) e_p; dbar(a m) = delta(a) dbar(m).

   Every condition is checked on a . e_q for a in a spanning set of A, by
   evaluating both sides on the normal form of theta(a e_q) or dbar(a e_q).
*/

#ifndef HOPFNEB_EQUIVARIANCE_HPP
#define HOPFNEB_EQUIVARIANCE_HPP

#include <functional>
#include <string>
#include <vector>

#include "hopfneb/hopf.hpp"
#include "hopfneb/ideal.hpp"
#include "hopfneb/report.hpp"
#include "hopfneb/tensor.hpp"

namespace hopfneb {

struct Coaction {
    std::string name;
    HopfDescriptor hopf;
    AlgebraRef algebra;
    /// Algebra map A -> H (x) A.
    LinearMapSpec delta;

    Ring ring() const { return {hopf.algebra, algebra}; }
    Ring ring3() const { return {hopf.algebra, hopf.algebra, algebra}; }

    TensorElement coact(const Element& a) const { return delta.apply(a); }
    /// 1 (x) a
    TensorElement nu(const Element& a) const;
    /// (Delta (x) id) delta(a)
    TensorElement gamma(const Element& a) const;
    /// 1 (x) 1 (x) a
    TensorElement nu3(const Element& a) const;

    RingHom delta_hom() const;
    RingHom nu_hom() const;

    /// A = H, delta = Delta.
    static Coaction regular(const HopfDescriptor& h);
    /// delta(a) = 1 (x) a.
    static Coaction trivial(const HopfDescriptor& h, const AlgebraRef& a);
};

/// Spanning set of A for condition checks.  Table algebras: the basis.  Free
/// algebras: words of degree <= min(D, 2) over generators of level <= 1,
/// together with words of degree <= D over level-0 generators.
std::vector<Element> spanning_words(const AlgebraRef& a, std::size_t degree);

/// Table algebras: the basis.  Free algebras: 1 and the generators of level <= max_level.
std::vector<Element> spanning_generators(const AlgebraRef& a, int max_level = 1);

/// "a*e<q>" with the instance name in front.
std::string module_element_label(const std::string& instance, const Element& a, std::size_t q);

Report check_coaction(const Coaction& c, std::size_t degree, IdealOracle* oracle,
                      const std::string& scenario);

struct NebMatrix {
    std::string name;
    Coaction coaction;
    ModuleMatrix T;

    std::size_t rank() const noexcept { return T.rank(); }
    /// theta(a e_q), normalized.
    TwistedModuleElement theta(const Element& a, std::size_t q) const;
    ModuleMapOverPhi as_map_over_nu() const { return {coaction.nu_hom(), T}; }
};

/// Coordinates over H (x) H (x) A of the two sides of the neb coassociativity
/// condition, for x = theta(m).
TwistedModuleElement neb_coassociativity_lhs(const NebMatrix& th, const TwistedModuleElement& x);
TwistedModuleElement neb_coassociativity_rhs(const NebMatrix& th, const TwistedModuleElement& x);
/// sum_p (eps (x) id)(x_p) e_p, over A.
TwistedModuleElement neb_counit_value(const NebMatrix& th, const TwistedModuleElement& x);

/// (1 (x) 1 (x) a) v, coordinatewise.
TwistedModuleElement transport(const Coaction& c, const Element& a, const TwistedModuleElement& v);

/// "neb-coassociativity" and "neb-counit" on the spanning set.
Report check_neb(const NebMatrix& th, std::size_t degree, IdealOracle* oracle,
                 const std::string& scenario);

struct HopfModuleMatrix {
    std::string name;
    Coaction coaction;
    ModuleMatrix D;

    std::size_t rank() const noexcept { return D.rank(); }
    /// dbar(a e_q) = delta(a) dbar(e_q).
    TwistedModuleElement coact(const Element& a, std::size_t q) const;
    ModuleMapOverPhi as_map_over_delta() const { return {coaction.delta_hom(), D}; }
};

/// "hopfmodule-coassociativity", "hopfmodule-counit" and "hopfmodule-linearity".
Report check_hopfmodule(const HopfModuleMatrix& d, std::size_t degree, IdealOracle* oracle,
                        const std::string& scenario);

/// sigma(h (x) a) = S(h) a_(-1) (x) a_(0).  Throws NoAntipode.
RingHom sigma(const Coaction& c);

/// "sigma-delta": sigma(delta(a)) = 1 (x) a, and "sigma-unit": sigma(1 (x) a) = delta(a).
Report check_isigma(const Coaction& c, std::size_t degree, IdealOracle* oracle,
                    const std::string& scenario);

/// rho = sigma^* Theta, read as a Hopf module matrix.  Throws NotCommutative.
HopfModuleMatrix rho_from_theta_commutative(const NebMatrix& th);
/// Theta = sigma^* rho.  Throws NotCommutative.
NebMatrix rho_from_hopfmodule_commutative(const HopfModuleMatrix& d);

/// "inverse-left": inv o m = id and "inverse-right": m o inv = id.
Report check_inverse_pair(const ModuleMatrix& m, const ModuleMatrix& inv, const std::string& label,
                          const std::string& scenario);

/// dbar corresponding to Theta^-1 via delta.  Throws NoCertifiedInverse.
HopfModuleMatrix correspond_theta_hopfmodule(const NebMatrix& th);
/// theta corresponding to rho^-1.  Throws NoCertifiedInverse.
NebMatrix correspond_hopfmodule_theta(const HopfModuleMatrix& d);

using VectorMap = std::function<TwistedModuleElement(const TwistedModuleElement&)>;

/// A comonad on left A-modules evaluated on M = A^n.  T(M) has coordinates
/// over H (x) A, TT(M) over H (x) H (x) A.
struct ComonadStructure {
    std::string name;
    VectorMap comultiply;
    VectorMap counit;
    /// a . x on T(M) and on TT(M).
    std::function<TwistedModuleElement(const Element&, const TwistedModuleElement&)> act;
    std::function<TwistedModuleElement(const Element&, const TwistedModuleElement&)> act2;
};

struct Comonads {
    ComonadStructure G;
    ComonadStructure H;
    Report report;
};

/// G(M) = H (x) M with A acting through delta, and H(M) = delta^* M with A
/// acting through nu; both with comultiplication Delta (x) id and counit
/// eps (x) id.  The report checks coassociativity, both counit laws and
/// linearity of the structure maps.
Comonads comonad_structures(const Coaction& c, std::size_t rank, std::size_t degree,
                            IdealOracle* oracle, const std::string& scenario);

/// Value of H(theta) o theta on a e_q through the identification
/// (h (x) a) (x) (h' (x) a') = h' (x) h a'_(-1) (x) a a'_(0).
TwistedModuleElement comodule_lift(const NebMatrix& th, const Element& a, std::size_t q);

/// "comodule-counit" and "comodule-coassociativity" on the spanning set,
/// plus "neb-agreement": each element has the same status and witness as
/// the corresponding check_neb entry.
Report check_comodule_equivalence(const NebMatrix& th, std::size_t degree, IdealOracle* oracle,
                                  const std::string& scenario);

}  // namespace hopfneb

#endif

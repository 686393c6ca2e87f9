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
   Free modules over tensor rings.

   All modules are free of finite rank n with basis e_0..e_{n-1}.  For a ring
   map phi: A -> N, the balanced product N_phi (x)_A A^n is identified with
   N^n through x (x) (a e_p) = x phi(a) (x) e_p, so its elements are n-vectors
   over N.

   A matrix M over N stores the images of the basis: M(e_q) = sum_p M[p][q] e_p.
   Scalars act from the left, so a left N-linear map sends sum_q x_q e_q to
   sum_p (sum_q x_q M[p][q]) e_p.
*/

#ifndef HOPFNEB_TENSOR_HPP
#define HOPFNEB_TENSOR_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopfneb/algebra.hpp"
#include "hopfneb/linear_map.hpp"

namespace hopfneb {

using Ring = std::vector<AlgebraRef>;

/// A map between tensor rings, applied to whole tensors.
class RingHom {
   public:
    using Fn = std::function<TensorElement(const TensorElement&)>;

    RingHom(std::string name, Ring domain, Ring codomain, Fn fn)
        : name_(std::move(name)),
          domain_(std::move(domain)),
          codomain_(std::move(codomain)),
          fn_(std::move(fn)) {}

    static RingHom identity(const Ring& r);
    /// f_1 (x) ... (x) f_k, with base-field slots of the result dropped.
    static RingHom slotwise(std::string name, const std::vector<const LinearMapSpec*>& maps);
    /// A map defined on a single algebra.
    static RingHom from_map(const LinearMapSpec& f);

    const std::string& name() const noexcept { return name_; }
    const Ring& domain() const noexcept { return domain_; }
    const Ring& codomain() const noexcept { return codomain_; }

    /// Throws FactorMismatch if x is not in the domain.
    TensorElement operator()(const TensorElement& x) const;
    TensorElement operator()(const Element& x) const { return (*this)(TensorElement::from(x)); }

   private:
    std::string name_;
    Ring domain_;
    Ring codomain_;
    Fn fn_;
};

/// psi o phi.
RingHom compose(const RingHom& psi, const RingHom& phi);

using TwistedModuleElement = std::vector<TensorElement>;

TwistedModuleElement zero_vector(const Ring& r, std::size_t n);
TwistedModuleElement unit_vector(const Ring& r, std::size_t n, std::size_t p);
bool is_zero_vector(const TwistedModuleElement& v);
std::string vector_to_string(const TwistedModuleElement& v);

/// x (x) (a . e_slot), before normalization.
struct BalancedTerm {
    TensorElement x;
    TensorElement a;
    std::size_t slot;
};

/// Applies x (x) a e_p = x phi(a) (x) e_p to every term and sums.
TwistedModuleElement balanced_normalize(const std::vector<BalancedTerm>& terms, const RingHom& phi,
                                        std::size_t rank);

class ModuleMatrix {
   public:
    ModuleMatrix(Ring ring, std::size_t n);

    static ModuleMatrix identity(const Ring& ring, std::size_t n);
    /// Columns are the images of e_0..e_{n-1}.
    static ModuleMatrix from_columns(const Ring& ring, const std::vector<TwistedModuleElement>& cols);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t rank() const noexcept { return n_; }
    const TensorElement& at(std::size_t p, std::size_t q) const { return m_[p][q]; }
    void set(std::size_t p, std::size_t q, TensorElement v);

    TwistedModuleElement column(std::size_t q) const;
    /// Left-linear application to coordinates x.
    TwistedModuleElement apply(const TwistedModuleElement& x) const;

    friend bool operator==(const ModuleMatrix& a, const ModuleMatrix& b);
    std::string to_string() const;

   private:
    Ring ring_;
    std::size_t n_;
    std::vector<std::vector<TensorElement>> m_;
};

/// phi o psi for left-linear maps over the same ring.
ModuleMatrix compose(const ModuleMatrix& phi, const ModuleMatrix& psi);

/// Two-sided inverse by an exact linear solve over the finite basis of the
/// ring.  nullopt if there is none.  Throws InfiniteBasis for free factors.
std::optional<ModuleMatrix> invert_matrix(const ModuleMatrix& m);

/// Entrywise image under phi: the matrix of phi^* f.
ModuleMatrix extend_scalars(const RingHom& phi, const ModuleMatrix& m);

/// f: A^n -> B^n over phi: A -> B, given by f(e_q).  f(a e_q) = phi(a) f(e_q).
struct ModuleMapOverPhi {
    RingHom phi;
    ModuleMatrix values;

    /// f(sum_q a_q e_q).
    TwistedModuleElement apply(const TwistedModuleElement& a) const;
};

/// The B-linear map phi^* M -> N corresponding to f.
ModuleMatrix correspond_via(const ModuleMapOverPhi& f);
/// The map over phi corresponding to a B-linear F: phi^* M -> N.
ModuleMapOverPhi correspond_back(const RingHom& phi, const ModuleMatrix& F);

}  // namespace hopfneb

#endif

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
   Degree-bounded two-sided ideal membership in a free algebra.

   span_ideal collects every product u*r*v (r a relation, u, v words over a
   finite alphabet, total degree <= D) and echelonizes them exactly.  A
   Member answer comes with the combination of products that proves it.  A
   NotFoundUpTo(D) answer only says no proof exists inside the bound.

   For tensors, membership in I(x)B + B(x)I is decided by reducing each free
   slot in turn to its canonical remainder.
*/

#ifndef HOPFNEB_IDEAL_HPP
#define HOPFNEB_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hopfneb/algebra.hpp"
#include "hopfneb/hopf.hpp"
#include "hopfneb/linalg.hpp"
#include "hopfneb/report.hpp"

namespace hopfneb {

struct IdealProduct {
    Word left;
    std::size_t relation = 0;
    Word right;
};

class IdealSpan {
   public:
    /// Throws BoundTooSmall if a relation has degree > D.
    IdealSpan(AlgebraRef algebra, std::vector<Element> relations, std::vector<GenId> alphabet,
              std::size_t degree_bound);

    const AlgebraRef& algebra() const noexcept { return algebra_; }
    const std::vector<Element>& relations() const noexcept { return relations_; }
    const std::vector<GenId>& alphabet() const noexcept { return alphabet_; }
    std::size_t degree_bound() const noexcept { return degree_bound_; }
    std::size_t rank() const noexcept { return echelon_.rank(); }
    std::size_t product_count() const noexcept { return products_.size(); }
    const IdealProduct& product(std::size_t i) const { return products_.at(i); }
    Element product_value(std::size_t i) const;

    struct Reduction {
        Element remainder;
        std::vector<std::pair<std::size_t, Scalar>> combination;
    };

    /// x = remainder + sum coef * product.  Throws DegreeExceedsBound.
    Reduction reduce(const Element& x) const;

   private:
    AlgebraRef algebra_;
    std::vector<Element> relations_;
    std::vector<GenId> alphabet_;
    std::size_t degree_bound_;
    std::vector<IdealProduct> products_;
    Echelon<Word> echelon_;
};

IdealSpan span_ideal(const AlgebraRef& algebra, const std::vector<Element>& relations,
                     const std::vector<GenId>& alphabet, std::size_t degree_bound);

struct CertificateItem {
    std::size_t slot = 0;
    TensorElement::Key cofactor;
    std::size_t product = 0;
    Scalar coef;
};

struct MembershipResult {
    bool member = false;
    std::size_t degree_bound = 0;
    std::vector<CertificateItem> certificate;
};

/// Element membership; the certificate lives in slot 0.
MembershipResult member(const IdealSpan& span, const Element& x);
/// Membership of x in sum_i B(x)..(x)I(x)..(x)B over the slots owned by the
/// span's algebra.  Throws DegreeExceedsBound.
MembershipResult member(const IdealSpan& span, const TensorElement& x);

/// sum coef * (cofactor with u*r*v placed in its slot); equals x for a
/// Member answer.
TensorElement expand_certificate(const IdealSpan& span, const MembershipResult& m,
                                 const std::vector<AlgebraRef>& factors);

std::vector<CertificateTerm> render_certificate(const IdealSpan& span, const MembershipResult& m,
                                                const std::vector<AlgebraRef>& factors);

/// Lazily builds and caches spans of a Hopf descriptor's relation ideal.
/// The alphabet is chosen from the generators occurring in the queried
/// element: generators of level <= m + 1 and relations of level <= m, where
/// m is the largest level present.
class IdealOracle {
   public:
    IdealOracle(const HopfDescriptor& h, std::size_t degree_bound);

    std::size_t degree_bound() const noexcept { return degree_bound_; }
    const AlgebraRef& algebra() const noexcept { return algebra_; }

    struct Answer {
        MembershipResult result;
        std::vector<CertificateTerm> rendered;
        int alphabet_level = 0;
    };

    /// Throws DegreeExceedsBound.
    Answer member(const TensorElement& x);
    std::shared_ptr<const IdealSpan> span_for_level(int alphabet_level);

   private:
    AlgebraRef algebra_;
    std::shared_ptr<const RelationSet> relations_;
    std::size_t degree_bound_;
    std::mutex mu_;
    std::map<int, std::shared_ptr<const IdealSpan>> spans_;
};

}  // namespace hopfneb

#endif

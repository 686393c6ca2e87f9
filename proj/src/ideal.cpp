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

#include "hopfneb/ideal.hpp"

#include <algorithm>

#include "hopfneb/errors.hpp"

namespace hopfneb {

namespace {

std::map<Word, Scalar> as_word_vector(const Element& x) {
    std::map<Word, Scalar> v;
    for (const auto& [k, c] : x.terms()) v.emplace(std::get<Word>(k), c);
    return v;
}

}  // namespace

IdealSpan::IdealSpan(AlgebraRef algebra, std::vector<Element> relations,
                     std::vector<GenId> alphabet, std::size_t degree_bound)
    : algebra_(std::move(algebra)),
      relations_(std::move(relations)),
      alphabet_(std::move(alphabet)),
      degree_bound_(degree_bound),
      echelon_(algebra_->field()) {
    if (!algebra_->is_free())
        throw Error(ErrorCode::InvalidArgument, "ideal spans need a free algebra");
    std::sort(alphabet_.begin(), alphabet_.end());
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        if (relations_[i].owner() != algebra_)
            throw Error(ErrorCode::OwnerMismatch, "relation outside " + algebra_->name());
        if (relations_[i].degree() > degree_bound_)
            throw Error(ErrorCode::BoundTooSmall,
                        "relation " + std::to_string(i) + " has degree " +
                            std::to_string(relations_[i].degree()) + " > " +
                            std::to_string(degree_bound_));
    }
    const Scalar one = algebra_->scalar(1);
    for (std::size_t ri = 0; ri < relations_.size(); ++ri) {
        const Element& r = relations_[ri];
        if (r.is_zero()) continue;
        const std::size_t slack = degree_bound_ - r.degree();
        const auto words = words_up_to(alphabet_, slack);
        for (const auto& u : words) {
            if (u.degree() > slack) continue;
            for (const auto& v : words) {
                if (u.degree() + v.degree() > slack) break;
                std::map<Word, Scalar> vec;
                for (const auto& [k, c] : r.terms()) {
                    Word w = u * std::get<Word>(k) * v;
                    accumulate(vec, w, c);
                }
                products_.push_back({u, ri, v});
                echelon_.insert(std::move(vec), products_.size() - 1);
            }
        }
    }
}

Element IdealSpan::product_value(std::size_t i) const {
    const IdealProduct& p = products_.at(i);
    return Element::word(algebra_, p.left) * relations_[p.relation] *
           Element::word(algebra_, p.right);
}

IdealSpan::Reduction IdealSpan::reduce(const Element& x) const {
    if (x.owner() != algebra_) throw Error(ErrorCode::OwnerMismatch, "reduce: wrong algebra");
    if (x.degree() > degree_bound_)
        throw Error(ErrorCode::DegreeExceedsBound, "element of degree " +
                                                       std::to_string(x.degree()) +
                                                       " exceeds bound " +
                                                       std::to_string(degree_bound_));
    Echelon<Word>::Combination comb;
    auto rest = echelon_.remainder(as_word_vector(x), comb);
    Reduction r{Element(algebra_), {}};
    for (auto& [w, c] : rest) r.remainder.add_term(w, c);
    for (auto& [i, c] : comb) r.combination.emplace_back(i, c);
    return r;
}

IdealSpan span_ideal(const AlgebraRef& algebra, const std::vector<Element>& relations,
                     const std::vector<GenId>& alphabet, std::size_t degree_bound) {
    return IdealSpan(algebra, relations, alphabet, degree_bound);
}

MembershipResult member(const IdealSpan& span, const Element& x) {
    return member(span, TensorElement::from(x));
}

MembershipResult member(const IdealSpan& span, const TensorElement& x) {
    MembershipResult out;
    out.degree_bound = span.degree_bound();
    TensorElement current = x;
    const auto& factors = x.factors();
    for (std::size_t slot = 0; slot < factors.size(); ++slot) {
        if (factors[slot] != span.algebra()) continue;
        if (current.slot_degree(slot) > span.degree_bound())
            throw Error(ErrorCode::DegreeExceedsBound,
                        "slot " + std::to_string(slot) + " has degree " +
                            std::to_string(current.slot_degree(slot)) + " > " +
                            std::to_string(span.degree_bound()));
        // Group by the keys of the other slots.
        std::map<TensorElement::Key, Element> groups;
        for (const auto& [key, c] : current.terms()) {
            TensorElement::Key rest = key;
            rest[slot] = Word{};
            auto it = groups.try_emplace(rest, Element(span.algebra())).first;
            it->second.add_term(key[slot], c);
        }
        TensorElement next(factors);
        for (const auto& [rest, elem] : groups) {
            auto red = span.reduce(elem);
            for (const auto& [k, c] : red.remainder.terms()) {
                TensorElement::Key nk = rest;
                nk[slot] = k;
                next.add_term(nk, c);
            }
            for (const auto& [pi, c] : red.combination)
                out.certificate.push_back({slot, rest, pi, c});
        }
        current = std::move(next);
    }
    out.member = current.is_zero();
    if (!out.member) out.certificate.clear();
    return out;
}

TensorElement expand_certificate(const IdealSpan& span, const MembershipResult& m,
                                 const std::vector<AlgebraRef>& factors) {
    TensorElement total(factors);
    for (const auto& item : m.certificate) {
        const Element value = span.product_value(item.product);
        TensorElement::TermMap terms;
        for (const auto& [k, c] : value.terms()) {
            TensorElement::Key key = item.cofactor;
            key[item.slot] = k;
            accumulate(terms, key, c * item.coef);
        }
        total += TensorElement(factors, std::move(terms));
    }
    return total;
}

std::vector<CertificateTerm> render_certificate(const IdealSpan& span, const MembershipResult& m,
                                                const std::vector<AlgebraRef>& factors) {
    std::vector<CertificateTerm> out;
    for (const auto& item : m.certificate) {
        const IdealProduct& p = span.product(item.product);
        CertificateTerm t;
        t.slot = item.slot;
        if (factors.size() > 1) {
            t.cofactor = "(";
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) t.cofactor += '|';
                t.cofactor += i == item.slot ? "*" : factors[i]->key_to_string(item.cofactor[i]);
            }
            t.cofactor += ")";
        }
        t.left = p.left.to_string();
        t.relation = p.relation;
        t.relation_text = span.relations()[p.relation].to_string();
        t.right = p.right.to_string();
        t.coefficient = item.coef.to_string();
        out.push_back(std::move(t));
    }
    return out;
}

IdealOracle::IdealOracle(const HopfDescriptor& h, std::size_t degree_bound)
    : algebra_(h.algebra), relations_(h.relations), degree_bound_(degree_bound) {
    if (!relations_) throw Error(ErrorCode::InvalidArgument, h.name + " has no relation set");
}

std::shared_ptr<const IdealSpan> IdealOracle::span_for_level(int alphabet_level) {
    std::lock_guard lock(mu_);
    auto& slot = spans_[alphabet_level];
    if (!slot) {
        std::vector<Element> rels;
        for (const auto& r : relations_->up_to_level(alphabet_level - 1)) rels.push_back(r.value);
        slot = std::make_shared<const IdealSpan>(algebra_, std::move(rels),
                                                 algebra_->generators_up_to(alphabet_level),
                                                 degree_bound_);
    }
    return slot;
}

IdealOracle::Answer IdealOracle::member(const TensorElement& x) {
    const int level = std::max(max_level(x), 0) + 1;
    auto span = span_for_level(level);
    Answer a;
    a.alphabet_level = level;
    a.result = hopfneb::member(*span, x);
    if (a.result.member) a.rendered = render_certificate(*span, a.result, x.factors());
    return a;
}

}  // namespace hopfneb

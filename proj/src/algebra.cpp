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

#include "hopfneb/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "hopfneb/errors.hpp"

namespace hopfneb {

GenId GenId::make(std::string_view family, std::initializer_list<int> indices) {
    GenId g;
    if (family.empty() || family.size() > g.tag.size())
        throw Error(ErrorCode::InvalidArgument, "generator family tag must have 1..8 characters");
    if (indices.size() > g.idx.size())
        throw Error(ErrorCode::InvalidArgument, "at most three generator indices");
    std::copy(family.begin(), family.end(), g.tag.begin());
    std::copy(indices.begin(), indices.end(), g.idx.begin());
    g.arity = static_cast<std::uint8_t>(indices.size());
    return g;
}

std::string_view GenId::family() const noexcept {
    const auto end = std::find(tag.begin(), tag.end(), '\0');
    return std::string_view(tag.data(), static_cast<std::size_t>(end - tag.begin()));
}

std::string GenId::to_string() const {
    std::string s(family());
    if (arity == 0) return s;
    s += '[';
    s += std::to_string(idx[0]);
    for (std::size_t i = 1; i < arity; ++i) {
        s += (i == 1) ? ';' : ',';
        s += std::to_string(idx[i]);
    }
    s += ']';
    return s;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters.size() <=> b.letters.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.letters.begin(), a.letters.end(),
                                                  b.letters.begin(), b.letters.end());
}

Word Word::operator*(const Word& other) const {
    Word w;
    w.letters.reserve(letters.size() + other.letters.size());
    w.letters.insert(w.letters.end(), letters.begin(), letters.end());
    w.letters.insert(w.letters.end(), other.letters.begin(), other.letters.end());
    return w;
}

std::string Word::to_string() const {
    if (letters.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) s += '.';
        s += letters[i].to_string();
    }
    return s;
}

FreeAlphabet FreeAlphabet::finite(std::vector<GenId> generators) {
    std::sort(generators.begin(), generators.end());
    auto gens = std::make_shared<const std::vector<GenId>>(std::move(generators));
    FreeAlphabet a;
    a.contains = [gens](const GenId& g) {
        return std::binary_search(gens->begin(), gens->end(), g);
    };
    a.enumerate = [gens](int) { return *gens; };
    a.level = [](const GenId&) { return 0; };
    return a;
}

AlgebraRef Algebra::free(std::string name, Field field, FreeAlphabet alphabet) {
    auto* a = new Algebra();
    a->name_ = std::move(name);
    a->field_ = field;
    a->kind_ = Presentation::Free;
    a->alphabet_ = std::move(alphabet);
    return AlgebraRef(a);
}

AlgebraRef Algebra::table(std::string name, Field field, std::vector<std::string> labels,
                          TableTerms unit, std::vector<std::vector<TableTerms>> mul,
                          bool commutative) {
    const std::size_t n = labels.size();
    if (n == 0) throw Error(ErrorCode::InvalidTable, name + ": empty basis");
    if (mul.size() != n)
        throw Error(ErrorCode::InvalidTable, name + ": multiplication table has wrong size");
    for (const auto& row : mul)
        if (row.size() != n)
            throw Error(ErrorCode::InvalidTable, name + ": multiplication table has wrong size");
    auto check_terms = [&](const TableTerms& t) {
        for (const auto& [k, c] : t) {
            if (k >= n) throw Error(ErrorCode::InvalidTable, name + ": basis index out of range");
            if (!(c.field() == field))
                throw Error(ErrorCode::FieldMismatch, name + ": structure constant field");
        }
    };
    check_terms(unit);
    for (auto& row : mul)
        for (auto& t : row) {
            check_terms(t);
            std::erase_if(t, [](const auto& kv) { return kv.second.is_zero(); });
        }
    std::erase_if(unit, [](const auto& kv) { return kv.second.is_zero(); });

    auto* a = new Algebra();
    a->name_ = std::move(name);
    a->field_ = field;
    a->kind_ = Presentation::Table;
    a->labels_ = std::move(labels);
    a->unit_ = std::move(unit);
    a->mul_ = std::move(mul);
    a->commutative_ = commutative;
    AlgebraRef ref(a);

    // Exhaustive checks: unit, associativity, and commutativity when claimed.
    const Element one = Element::one(ref);
    for (std::size_t i = 0; i < n; ++i) {
        const Element b = Element::basis(ref, i);
        if (!(one * b == b) || !(b * one == b))
            throw Error(ErrorCode::InvalidTable,
                        ref->name_ + ": unit is not two-sided on " + ref->labels_[i]);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Element bi = Element::basis(ref, i), bj = Element::basis(ref, j);
            if (commutative && !(bi * bj == bj * bi))
                throw Error(ErrorCode::InvalidTable, ref->name_ + ": claimed commutative but " +
                                                         ref->labels_[i] + "*" + ref->labels_[j] +
                                                         " differs");
            for (std::size_t k = 0; k < n; ++k) {
                const Element bk = Element::basis(ref, k);
                if (!((bi * bj) * bk == bi * (bj * bk)))
                    throw Error(ErrorCode::InvalidTable,
                                ref->name_ + ": not associative on (" + ref->labels_[i] + "," +
                                    ref->labels_[j] + "," + ref->labels_[k] + ")");
            }
        }
    return ref;
}

AlgebraRef Algebra::scalars(Field field) {
    static std::mutex mu;
    static std::map<std::uint32_t, AlgebraRef> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[field.characteristic()];
    if (!slot) {
        auto* a = new Algebra();
        a->name_ = "K";
        a->field_ = field;
        a->kind_ = Presentation::Table;
        a->labels_ = {"1"};
        a->unit_ = {{0, Scalar(1, field)}};
        a->mul_ = {{TableTerms{{0, Scalar(1, field)}}}};
        a->commutative_ = true;
        a->is_scalars_ = true;
        slot = AlgebraRef(a);
    }
    return slot;
}

std::size_t Algebra::dim() const {
    if (!is_table()) throw Error(ErrorCode::InfiniteBasis, name_ + " has no finite basis");
    return labels_.size();
}

const TableTerms& Algebra::product_terms(std::size_t i, std::size_t j) const {
    return mul_.at(i).at(j);
}

bool Algebra::has_generator(const GenId& g) const {
    return is_free() && alphabet_.contains && alphabet_.contains(g);
}

std::vector<GenId> Algebra::generators_up_to(int max_level) const {
    if (!is_free()) return {};
    auto gens = alphabet_.enumerate(max_level);
    std::sort(gens.begin(), gens.end());
    return gens;
}

int Algebra::level_of(const GenId& g) const { return alphabet_.level ? alphabet_.level(g) : 0; }

bool Algebra::valid_key(const BasisKey& k) const {
    if (is_table()) {
        const auto* i = std::get_if<std::size_t>(&k);
        return i && *i < labels_.size();
    }
    const auto* w = std::get_if<Word>(&k);
    if (!w) return false;
    return std::all_of(w->letters.begin(), w->letters.end(),
                       [&](const GenId& g) { return alphabet_.contains(g); });
}

void Algebra::multiply_keys(const BasisKey& k1, const BasisKey& k2, const Scalar& coef,
                            std::map<BasisKey, Scalar>& into) const {
    if (is_free()) {
        accumulate(into, BasisKey(std::get<Word>(k1) * std::get<Word>(k2)), coef);
        return;
    }
    for (const auto& [k, c] : mul_[std::get<std::size_t>(k1)][std::get<std::size_t>(k2)])
        accumulate(into, BasisKey(k), coef * c);
}

std::string Algebra::key_to_string(const BasisKey& k) const {
    if (const auto* w = std::get_if<Word>(&k)) return w->to_string();
    const auto i = std::get<std::size_t>(k);
    return i < labels_.size() ? labels_[i] : "#" + std::to_string(i);
}

// ---------------------------------------------------------------------------
// Element

Element::Element(AlgebraRef owner, TermMap terms) : owner_(std::move(owner)) {
    for (auto& [k, c] : terms) add_term(k, c);
}

Element Element::one(AlgebraRef owner) {
    Element e(owner);
    if (owner->is_free())
        e.add_term(Word{}, owner->scalar(1));
    else
        for (const auto& [k, c] : owner->unit_terms()) e.add_term(k, c);
    return e;
}

Element Element::scalar(AlgebraRef owner, const Scalar& c) { return one(std::move(owner)).scaled(c); }

Element Element::basis(AlgebraRef owner, std::size_t index) {
    if (!owner->is_table() || index >= owner->dim())
        throw Error(ErrorCode::InvalidArgument, "basis index out of range for " + owner->name());
    Element e(owner);
    e.add_term(index, owner->scalar(1));
    return e;
}

Element Element::word(AlgebraRef owner, Word w) {
    Element e(owner);
    e.add_term(BasisKey(std::move(w)), owner->scalar(1));
    return e;
}

Element Element::generator(AlgebraRef owner, const GenId& g) {
    if (!owner->has_generator(g))
        throw Error(ErrorCode::InvalidArgument, g.to_string() + " is not a generator of " + owner->name());
    return word(std::move(owner), Word({g}));
}

std::size_t Element::degree() const {
    std::size_t d = 0;
    for (const auto& [k, c] : terms_)
        if (const auto* w = std::get_if<Word>(&k)) d = std::max(d, w->degree());
    return d;
}

Scalar Element::coefficient(const BasisKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? owner_->scalar(0) : it->second;
}

void Element::add_term(const BasisKey& k, const Scalar& c) {
    if (!owner_->valid_key(k))
        throw Error(ErrorCode::InvalidArgument, "invalid basis key for " + owner_->name());
    accumulate(terms_, k, c);
}

Element& Element::operator+=(const Element& o) {
    if (owner_ != o.owner_)
        throw Error(ErrorCode::OwnerMismatch, owner_->name() + " vs " + o.owner_->name());
    for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (owner_ != o.owner_)
        throw Error(ErrorCode::OwnerMismatch, owner_->name() + " vs " + o.owner_->name());
    for (const auto& [k, c] : o.terms_) accumulate(terms_, k, -c);
    return *this;
}

Element Element::operator-() const { return scaled(owner_->scalar(-1)); }

Element Element::scaled(const Scalar& c) const {
    Element r(owner_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

Element operator*(const Element& a, const Element& b) {
    if (a.owner_ != b.owner_)
        throw Error(ErrorCode::OwnerMismatch, a.owner_->name() + " vs " + b.owner_->name());
    Element r(a.owner_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) a.owner_->multiply_keys(ka, kb, ca * cb, r.terms_);
    return r;
}

bool operator==(const Element& a, const Element& b) {
    return a.owner_ == b.owner_ && a.terms_ == b.terms_;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += c.to_string() + "*" + owner_->key_to_string(k);
    }
    return s;
}

std::string element_label(const Element& x) {
    if (x.terms().size() == 1 && x.terms().begin()->second.is_one())
        return x.owner()->key_to_string(x.terms().begin()->first);
    return x.to_string();
}

Element elem_add(const Element& x, const Element& y) { return x + y; }
Element elem_mul(const Element& x, const Element& y) { return x * y; }

// ---------------------------------------------------------------------------
// TensorElement

bool same_factors(const std::vector<AlgebraRef>& a, const std::vector<AlgebraRef>& b) {
    return a == b;
}

std::string factors_to_string(const std::vector<AlgebraRef>& f) {
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += "(x)";
        s += f[i]->name();
    }
    return s;
}

TensorElement::TensorElement(std::vector<AlgebraRef> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw Error(ErrorCode::InvalidArgument, "tensor with no factors");
}

TensorElement::TensorElement(std::vector<AlgebraRef> factors, TermMap terms)
    : TensorElement(std::move(factors)) {
    for (auto& [k, c] : terms) add_term(k, c);
}

TensorElement TensorElement::one(std::vector<AlgebraRef> factors) {
    std::vector<Element> parts;
    for (const auto& f : factors) parts.push_back(Element::one(f));
    return pure(parts);
}

TensorElement TensorElement::from(const Element& x) {
    TensorElement t({x.owner()});
    for (const auto& [k, c] : x.terms()) t.terms_.emplace(Key{k}, c);
    return t;
}

TensorElement TensorElement::pure(const std::vector<Element>& parts) {
    if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "tensor with no factors");
    TensorElement acc = from(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) acc = acc.otimes(from(parts[i]));
    return acc;
}

Field TensorElement::field() const { return factors_.front()->field(); }

std::size_t TensorElement::slot_degree(std::size_t i) const {
    std::size_t d = 0;
    for (const auto& [k, c] : terms_)
        if (const auto* w = std::get_if<Word>(&k[i])) d = std::max(d, w->degree());
    return d;
}

void TensorElement::add_term(const Key& k, const Scalar& c) {
    if (k.size() != factors_.size())
        throw Error(ErrorCode::FactorMismatch, "tensor key has wrong arity");
    for (std::size_t i = 0; i < k.size(); ++i)
        if (!factors_[i]->valid_key(k[i]))
            throw Error(ErrorCode::InvalidArgument, "invalid basis key for " + factors_[i]->name());
    accumulate(terms_, k, c);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    if (!same_factors(factors_, o.factors_))
        throw Error(ErrorCode::FactorMismatch,
                    factors_to_string(factors_) + " vs " + factors_to_string(o.factors_));
    for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    if (!same_factors(factors_, o.factors_))
        throw Error(ErrorCode::FactorMismatch,
                    factors_to_string(factors_) + " vs " + factors_to_string(o.factors_));
    for (const auto& [k, c] : o.terms_) accumulate(terms_, k, -c);
    return *this;
}

TensorElement TensorElement::operator-() const { return scaled(Scalar(-1, field())); }

TensorElement TensorElement::scaled(const Scalar& c) const {
    TensorElement r(factors_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) { return tensor_mul(a, b); }

TensorElement tensor_mul(const TensorElement& x, const TensorElement& y) {
    if (!same_factors(x.factors(), y.factors()))
        throw Error(ErrorCode::FactorMismatch,
                    factors_to_string(x.factors()) + " vs " + factors_to_string(y.factors()));
    const auto& fs = x.factors();
    const std::size_t k = fs.size();
    TensorElement r(fs);
    TensorElement::TermMap out;
    std::vector<std::vector<std::pair<BasisKey, Scalar>>> slot_products(k);
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            for (std::size_t i = 0; i < k; ++i) {
                std::map<BasisKey, Scalar> prod;
                fs[i]->multiply_keys(kx[i], ky[i], Scalar(1, fs[i]->field()), prod);
                slot_products[i].assign(prod.begin(), prod.end());
            }
            // Cartesian expansion of the slotwise products.
            std::vector<std::size_t> pos(k, 0);
            bool empty = std::any_of(slot_products.begin(), slot_products.end(),
                                     [](const auto& v) { return v.empty(); });
            if (empty) continue;
            TensorElement::Key key(k);
            while (true) {
                Scalar c = cx * cy;
                for (std::size_t i = 0; i < k; ++i) {
                    key[i] = slot_products[i][pos[i]].first;
                    c *= slot_products[i][pos[i]].second;
                }
                accumulate(out, key, c);
                std::size_t i = 0;
                while (i < k && ++pos[i] == slot_products[i].size()) pos[i++] = 0;
                if (i == k) break;
            }
        }
    return TensorElement(fs, std::move(out));
}

bool operator==(const TensorElement& a, const TensorElement& b) {
    return same_factors(a.factors_, b.factors_) && a.terms_ == b.terms_;
}

TensorElement TensorElement::otimes(const TensorElement& other) const {
    std::vector<AlgebraRef> fs = factors_;
    fs.insert(fs.end(), other.factors_.begin(), other.factors_.end());
    TensorElement r(fs);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : other.terms_) {
            Key k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            accumulate(r.terms_, k, ca * cb);
        }
    return r;
}

Element TensorElement::to_element() const {
    if (factors_.size() != 1)
        throw Error(ErrorCode::FactorMismatch, "expected a single tensor factor, have " +
                                                   factors_to_string(factors_));
    Element e(factors_[0]);
    for (const auto& [k, c] : terms_) e.add_term(k[0], c);
    return e;
}

std::string TensorElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += c.to_string() + "*(";
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i) s += '|';
            s += factors_[i]->key_to_string(k[i]);
        }
        s += ')';
    }
    return s;
}

std::vector<Word> words_up_to(const std::vector<GenId>& alphabet, std::size_t max_degree) {
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    std::vector<GenId> sorted = alphabet;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t d = 1; d <= max_degree; ++d) {
        std::vector<Word> next;
        next.reserve(layer.size() * sorted.size());
        for (const auto& w : layer)
            for (const auto& g : sorted) {
                Word n = w;
                n.letters.push_back(g);
                next.push_back(std::move(n));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace hopfneb

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
   Exact noncommutative algebras over Q or F_p.

   Two presentations are supported: the free algebra on a (possibly infinite,
   lazily enumerated) alphabet, whose monomial basis is the set of words, and
   finite-dimensional algebras given by structure constants on a numbered
   basis.  Elements are finite maps basis key -> nonzero scalar, so equality
   of elements is equality of maps.
*/

#ifndef HOPFNEB_ALGEBRA_HPP
#define HOPFNEB_ALGEBRA_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hopfneb/scalar.hpp"

namespace hopfneb {

/// Generator of a free algebra: a short family tag plus up to three indices,
/// e.g. a[r;i,j] or y.  Ordered by tag, then indices.
struct GenId {
    std::array<char, 8> tag{};
    std::array<int, 3> idx{};
    std::uint8_t arity = 0;

    static GenId make(std::string_view family, std::initializer_list<int> indices = {});

    std::string_view family() const noexcept;
    int index(std::size_t i) const noexcept { return idx[i]; }

    auto operator<=>(const GenId&) const = default;
    std::string to_string() const;
};

/// Monomial of a free algebra.  The empty word is the unit.  Ordered by
/// degree, then lexicographically on generators.
struct Word {
    std::vector<GenId> letters;

    Word() = default;
    explicit Word(std::vector<GenId> l) : letters(std::move(l)) {}

    std::size_t degree() const noexcept { return letters.size(); }
    bool empty() const noexcept { return letters.empty(); }

    friend std::strong_ordering operator<=>(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) = default;

    Word operator*(const Word& other) const;
    std::string to_string() const;
};

using BasisKey = std::variant<Word, std::size_t>;
using TableTerms = std::map<std::size_t, Scalar>;

enum class Presentation { Free, Table };

/// Alphabet of a free algebra.  Generators carry a level so that infinite
/// alphabets can be enumerated up to a bound.
struct FreeAlphabet {
    std::function<bool(const GenId&)> contains;
    std::function<std::vector<GenId>(int max_level)> enumerate;
    std::function<int(const GenId&)> level;

    static FreeAlphabet finite(std::vector<GenId> generators);
};

class Algebra;
using AlgebraRef = std::shared_ptr<const Algebra>;

class Algebra {
   public:
    /// Free algebra; multiplication is concatenation and the unit is the empty word.
    static AlgebraRef free(std::string name, Field field, FreeAlphabet alphabet);

    /// Finite-dimensional algebra from structure constants mul[i][j].  The
    /// table is checked exhaustively for associativity and two-sided unit;
    /// when `commutative` is set, symmetry of the table is checked too.
    /// Throws InvalidTable.
    static AlgebraRef table(std::string name, Field field, std::vector<std::string> labels,
                            TableTerms unit, std::vector<std::vector<TableTerms>> mul,
                            bool commutative);

    /// The base field as a one-dimensional algebra (one shared instance per field).
    static AlgebraRef scalars(Field field);

    const std::string& name() const noexcept { return name_; }
    Field field() const noexcept { return field_; }
    Presentation presentation() const noexcept { return kind_; }
    bool is_free() const noexcept { return kind_ == Presentation::Free; }
    bool is_table() const noexcept { return kind_ == Presentation::Table; }
    bool is_scalars() const noexcept { return is_scalars_; }
    bool commutative() const noexcept { return commutative_; }

    std::size_t dim() const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const TableTerms& unit_terms() const noexcept { return unit_; }
    const TableTerms& product_terms(std::size_t i, std::size_t j) const;

    bool has_generator(const GenId& g) const;
    std::vector<GenId> generators_up_to(int max_level) const;
    int level_of(const GenId& g) const;

    Scalar scalar(long n) const { return Scalar(n, field_); }

    /// Accumulates coef * (k1 * k2) into `into`.
    void multiply_keys(const BasisKey& k1, const BasisKey& k2, const Scalar& coef,
                       std::map<BasisKey, Scalar>& into) const;
    bool valid_key(const BasisKey& k) const;
    std::string key_to_string(const BasisKey& k) const;

   private:
    Algebra() = default;

    std::string name_;
    Field field_{};
    Presentation kind_ = Presentation::Free;
    bool commutative_ = false;
    bool is_scalars_ = false;
    FreeAlphabet alphabet_;
    std::vector<std::string> labels_;
    TableTerms unit_;
    std::vector<std::vector<TableTerms>> mul_;
};

/// Adds coef to the coefficient of key, erasing it if it becomes zero.
template <class Map, class Key>
void accumulate(Map& m, const Key& key, const Scalar& coef) {
    if (coef.is_zero()) return;
    auto [it, inserted] = m.try_emplace(key, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) m.erase(it);
    }
}

class Element {
   public:
    using TermMap = std::map<BasisKey, Scalar>;

    explicit Element(AlgebraRef owner) : owner_(std::move(owner)) {}
    Element(AlgebraRef owner, TermMap terms);

    static Element zero(AlgebraRef owner) { return Element(std::move(owner)); }
    static Element one(AlgebraRef owner);
    static Element scalar(AlgebraRef owner, const Scalar& c);
    static Element basis(AlgebraRef owner, std::size_t index);
    static Element word(AlgebraRef owner, Word w);
    static Element generator(AlgebraRef owner, const GenId& g);

    const AlgebraRef& owner() const noexcept { return owner_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t degree() const;
    Scalar coefficient(const BasisKey& k) const;

    void add_term(const BasisKey& k, const Scalar& c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element operator-() const;
    Element scaled(const Scalar& c) const;

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const Scalar& c, const Element& a) { return a.scaled(c); }
    friend bool operator==(const Element& a, const Element& b);

    /// Terms in canonical order as `coef*g1.g2`, joined by " + "; zero is "0".
    std::string to_string() const;

   private:
    AlgebraRef owner_;
    TermMap terms_;
};

Element elem_add(const Element& x, const Element& y);
/// The basis key for a single basis vector, otherwise to_string().
std::string element_label(const Element& x);
Element elem_mul(const Element& x, const Element& y);

/// Element of a k-fold tensor product A_1 (x) ... (x) A_k over the base field.
class TensorElement {
   public:
    using Key = std::vector<BasisKey>;
    using TermMap = std::map<Key, Scalar>;

    explicit TensorElement(std::vector<AlgebraRef> factors);
    TensorElement(std::vector<AlgebraRef> factors, TermMap terms);

    static TensorElement zero(std::vector<AlgebraRef> factors) {
        return TensorElement(std::move(factors));
    }
    static TensorElement one(std::vector<AlgebraRef> factors);
    static TensorElement from(const Element& x);
    /// x_1 (x) x_2 (x) ... (x) x_k
    static TensorElement pure(const std::vector<Element>& parts);

    const std::vector<AlgebraRef>& factors() const noexcept { return factors_; }
    std::size_t arity() const noexcept { return factors_.size(); }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Field field() const;
    /// Largest word length occurring in slot i (0 for table slots).
    std::size_t slot_degree(std::size_t i) const;

    void add_term(const Key& k, const Scalar& c);

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement operator-() const;
    TensorElement scaled(const Scalar& c) const;

    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
    friend bool operator==(const TensorElement& a, const TensorElement& b);

    /// this (x) other, concatenating factor lists.
    TensorElement otimes(const TensorElement& other) const;
    /// Only valid when arity() == 1.
    Element to_element() const;

    /// Terms as `coef*(w1|w2|w3)` joined by " + "; zero is "0".
    std::string to_string() const;

   private:
    std::vector<AlgebraRef> factors_;
    TermMap terms_;
};

/// Componentwise product (x1 (x) y1)(x2 (x) y2) = x1 x2 (x) y1 y2.  Throws FactorMismatch.
TensorElement tensor_mul(const TensorElement& x, const TensorElement& y);

bool same_factors(const std::vector<AlgebraRef>& a, const std::vector<AlgebraRef>& b);
std::string factors_to_string(const std::vector<AlgebraRef>& f);

/// All words over `alphabet` of degree <= max_degree, in canonical order.
std::vector<Word> words_up_to(const std::vector<GenId>& alphabet, std::size_t max_degree);

}  // namespace hopfneb

#endif

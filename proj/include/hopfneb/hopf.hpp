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
   Bialgebra / Hopf algebra descriptors and the concrete instances: group
   algebras K[G], function algebras K^G, algebras from explicit tables, and
   the free Hopf algebra on a finite-dimensional coalgebra.

   The free Hopf algebra is modelled on leveled generators a[r;b] standing
   for S^r(a_b).  Even levels carry the comultiplication of the coalgebra,
   odd levels its opposite.  The carrier is the free algebra; the antipode
   relations are kept as a lazily generated RelationSet and are never used
   to rewrite, only to decide membership.
*/

#ifndef HOPFNEB_HOPF_HPP
#define HOPFNEB_HOPF_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopfneb/algebra.hpp"
#include "hopfneb/linear_map.hpp"
#include "hopfneb/report.hpp"

namespace hopfneb {

/// Finite-dimensional coalgebra with basis labelled by index tuples.
struct CoalgebraDescriptor {
    struct CoTerm {
        std::size_t left;
        std::size_t right;
        Scalar coef;
    };

    Field field;
    std::vector<std::vector<int>> basis;
    std::vector<std::vector<CoTerm>> delta;
    std::vector<Scalar> eps;

    std::size_t dim() const noexcept { return basis.size(); }
    std::string label(std::size_t i) const;
};

/// Throws InvalidTable unless coassociativity and both counit laws hold on
/// every basis vector.
void verify_coalgebra(const CoalgebraDescriptor& c);

/// Dual of the n x n matrix algebra: Delta(a_ij) = sum_k a_ik (x) a_kj,
/// eps(a_ij) = [i == j].
CoalgebraDescriptor make_matrix_coalgebra(int n, Field field = Field::rationals());

struct Relation {
    Element value;
    GenId generator;
    /// 0 for mu(S (x) id)Delta(g) - eps(g), 1 for mu(id (x) S)Delta(g) - eps(g).
    int side = 0;

    std::string label() const;
};

/// Generators of a two-sided ideal of a free algebra, produced level by level.
class RelationSet {
   public:
    using LevelGenerator = std::function<std::vector<Relation>(int level)>;

    RelationSet(AlgebraRef algebra, LevelGenerator generator)
        : algebra_(std::move(algebra)), generator_(std::move(generator)) {}

    static std::shared_ptr<RelationSet> from_list(AlgebraRef algebra, std::vector<Element> rels);

    const AlgebraRef& algebra() const noexcept { return algebra_; }
    /// Relations attached to generators of level 0..max_level, in a fixed order.
    std::vector<Relation> up_to_level(int max_level) const;

   private:
    AlgebraRef algebra_;
    LevelGenerator generator_;
    mutable std::mutex mu_;
    mutable std::map<int, std::vector<Relation>> levels_;
};

struct HopfDescriptor {
    std::string name;
    AlgebraRef algebra;
    LinearMapSpec delta;
    LinearMapSpec eps;
    std::optional<LinearMapSpec> antipode;
    bool cocommutative = false;
    std::shared_ptr<const RelationSet> relations;

    bool commutative() const noexcept { return algebra->commutative(); }
    bool is_free() const noexcept { return algebra->is_free(); }
    AlgebraRef scalars() const { return Algebra::scalars(algebra->field()); }

    Element unit() const { return Element::one(algebra); }
    TensorElement coproduct(const Element& x) const { return delta.apply(x); }
    Scalar counit(const Element& x) const { return to_scalar(eps.apply(x)); }
    /// Throws NoAntipode.
    const LinearMapSpec& S() const;
    Element apply_S(const Element& x) const { return S().apply_element(x); }

    /// Spanning elements used by the axiom checks: the basis for table
    /// algebras, generators of level <= max_level for free ones.
    std::vector<Element> generators(int max_level = 1) const;
};

HopfDescriptor make_free_hopf(const CoalgebraDescriptor& c, std::string name = "H");

/// Level of a generator a[r;...] of the free Hopf algebra (its r index).
int generator_level(const GenId& g);
/// Largest generator level occurring in x, or -1 if x has no generators.
int max_level(const TensorElement& x);

class GroupTable {
   public:
    /// Throws InvalidGroupTable unless the table is a group law.
    explicit GroupTable(std::vector<std::vector<std::size_t>> mul,
                        std::vector<std::string> names = {});

    static GroupTable cyclic(std::size_t n);
    static GroupTable klein_four();

    std::size_t order() const noexcept { return mul_.size(); }
    std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a][b]; }
    std::size_t identity() const noexcept { return identity_; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    const std::string& name(std::size_t a) const { return names_[a]; }
    bool abelian() const;
    const std::string& label() const noexcept { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

   private:
    std::vector<std::vector<std::size_t>> mul_;
    std::vector<std::string> names_;
    std::vector<std::size_t> inverse_;
    std::size_t identity_ = 0;
    std::string label_ = "G";
};

/// K[G]: Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1.
HopfDescriptor make_group_hopf(const GroupTable& g, Field field = Field::rationals());
/// K^G on delta functions d_g.
HopfDescriptor make_function_hopf(const GroupTable& g, Field field = Field::rationals());

/// Finite-dimensional Hopf algebra from explicit structure maps.
struct TableHopfData {
    std::string name;
    AlgebraRef algebra;
    std::vector<TensorElement> delta;
    std::vector<Scalar> eps;
    std::optional<std::vector<Element>> antipode;
};
HopfDescriptor make_table_hopf(const TableHopfData& data);

class IdealOracle;

/// Coassociativity, counit, multiplicativity of Delta and eps on products of
/// spanning elements up to degree D, and the antipode laws (exact, or modulo
/// the relation ideal when an oracle is supplied).
Report check_hopf_axioms(const HopfDescriptor& h, std::size_t degree, IdealOracle* oracle,
                         const std::string& scenario = "hopf-axioms");

/// Delta o S == (S (x) S) o flip o Delta and eps o S == eps on the given elements.
Report check_antipode_compatibility(const HopfDescriptor& h, const std::vector<Element>& elements,
                                    const std::string& scenario);

}  // namespace hopfneb

#endif

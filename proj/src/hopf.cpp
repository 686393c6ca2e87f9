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

#include "hopfneb/hopf.hpp"

#include <algorithm>

#include "hopfneb/check.hpp"
#include "hopfneb/errors.hpp"
#include "hopfneb/ideal.hpp"

namespace hopfneb {

// ---------------------------------------------------------------------------
// Coalgebras

std::string CoalgebraDescriptor::label(std::size_t i) const {
    std::string s = "a[";
    for (std::size_t k = 0; k < basis[i].size(); ++k) {
        if (k) s += ',';
        s += std::to_string(basis[i][k]);
    }
    return s + "]";
}

void verify_coalgebra(const CoalgebraDescriptor& c) {
    using Vec1 = std::map<std::size_t, Scalar>;
    using Vec3 = std::map<std::array<std::size_t, 3>, Scalar>;
    const std::size_t n = c.dim();
    if (c.delta.size() != n || c.eps.size() != n)
        throw Error(ErrorCode::InvalidTable, "coalgebra: structure maps have wrong size");
    for (std::size_t b = 0; b < n; ++b)
        for (const auto& t : c.delta[b])
            if (t.left >= n || t.right >= n)
                throw Error(ErrorCode::InvalidTable, "coalgebra: index out of range");
    for (std::size_t b = 0; b < n; ++b) {
        Vec3 lhs, rhs;
        for (const auto& t : c.delta[b]) {
            for (const auto& u : c.delta[t.left])
                accumulate(lhs, std::array<std::size_t, 3>{u.left, u.right, t.right}, t.coef * u.coef);
            for (const auto& u : c.delta[t.right])
                accumulate(rhs, std::array<std::size_t, 3>{t.left, u.left, u.right}, t.coef * u.coef);
        }
        if (lhs != rhs)
            throw Error(ErrorCode::InvalidTable, "coalgebra: not coassociative on " + c.label(b));
        Vec1 left, right, self{{b, Scalar(1, c.field)}};
        for (const auto& t : c.delta[b]) {
            accumulate(left, t.right, c.eps[t.left] * t.coef);
            accumulate(right, t.left, c.eps[t.right] * t.coef);
        }
        if (left != self || right != self)
            throw Error(ErrorCode::InvalidTable, "coalgebra: counit fails on " + c.label(b));
    }
}

CoalgebraDescriptor make_matrix_coalgebra(int n, Field field) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "matrix coalgebra needs n >= 1");
    CoalgebraDescriptor c{field, {}, {}, {}};
    const auto idx = [n](int i, int j) { return static_cast<std::size_t>(i * n + j); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            c.basis.push_back({i, j});
            std::vector<CoalgebraDescriptor::CoTerm> d;
            for (int k = 0; k < n; ++k) d.push_back({idx(i, k), idx(k, j), Scalar(1, field)});
            c.delta.push_back(std::move(d));
            c.eps.push_back(Scalar(i == j ? 1 : 0, field));
        }
    verify_coalgebra(c);
    return c;
}

// ---------------------------------------------------------------------------
// Relations

std::string Relation::label() const {
    return (side == 0 ? "mu(S|id)Delta(" : "mu(id|S)Delta(") + generator.to_string() + ")-eps";
}

std::shared_ptr<RelationSet> RelationSet::from_list(AlgebraRef algebra, std::vector<Element> rels) {
    auto shared = std::make_shared<const std::vector<Element>>(std::move(rels));
    return std::make_shared<RelationSet>(std::move(algebra), [shared](int level) {
        std::vector<Relation> out;
        if (level == 0)
            for (const auto& r : *shared) out.push_back({r, GenId::make("r"), 0});
        return out;
    });
}

std::vector<Relation> RelationSet::up_to_level(int max_level) const {
    std::vector<Relation> out;
    for (int level = 0; level <= max_level; ++level) {
        std::lock_guard lock(mu_);
        auto it = levels_.find(level);
        if (it == levels_.end()) it = levels_.emplace(level, generator_(level)).first;
        out.insert(out.end(), it->second.begin(), it->second.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Descriptors

const LinearMapSpec& HopfDescriptor::S() const {
    if (!antipode) throw Error(ErrorCode::NoAntipode, name + " has no antipode");
    return *antipode;
}

std::vector<Element> HopfDescriptor::generators(int max_level) const {
    std::vector<Element> out;
    if (algebra->is_table()) {
        for (std::size_t i = 0; i < algebra->dim(); ++i) out.push_back(Element::basis(algebra, i));
    } else {
        for (const auto& g : algebra->generators_up_to(max_level))
            out.push_back(Element::generator(algebra, g));
    }
    return out;
}

int generator_level(const GenId& g) { return g.family() == "a" && g.arity > 0 ? g.index(0) : 0; }

int max_level(const TensorElement& x) {
    int m = -1;
    for (const auto& [key, c] : x.terms())
        for (const auto& k : key)
            if (const auto* w = std::get_if<Word>(&k))
                for (const auto& g : w->letters) m = std::max(m, generator_level(g));
    return m;
}

namespace {

GenId leveled(int r, const std::vector<int>& tuple) {
    GenId g;
    g.tag[0] = 'a';
    g.idx[0] = r;
    for (std::size_t k = 0; k < tuple.size(); ++k) g.idx[k + 1] = tuple[k];
    g.arity = static_cast<std::uint8_t>(tuple.size() + 1);
    return g;
}

}  // namespace

HopfDescriptor make_free_hopf(const CoalgebraDescriptor& c, std::string name) {
    verify_coalgebra(c);
    if (c.basis.empty() || c.basis.front().size() > 2)
        throw Error(ErrorCode::InvalidArgument, "free Hopf: basis tuples must have 1 or 2 indices");
    auto coalg = std::make_shared<const CoalgebraDescriptor>(c);
    auto index_of = std::make_shared<std::map<std::vector<int>, std::size_t>>();
    for (std::size_t b = 0; b < c.dim(); ++b) (*index_of)[c.basis[b]] = b;

    FreeAlphabet alphabet;
    alphabet.contains = [coalg, index_of](const GenId& g) {
        if (g.family() != "a" || g.arity != coalg->basis.front().size() + 1 || g.index(0) < 0)
            return false;
        std::vector<int> t(g.idx.begin() + 1, g.idx.begin() + g.arity);
        return index_of->count(t) > 0;
    };
    alphabet.enumerate = [coalg](int max_level) {
        std::vector<GenId> out;
        for (int r = 0; r <= max_level; ++r)
            for (const auto& b : coalg->basis) out.push_back(leveled(r, b));
        return out;
    };
    alphabet.level = [](const GenId& g) { return g.index(0); };

    AlgebraRef H = Algebra::free(name, c.field, std::move(alphabet));
    AlgebraRef K = Algebra::scalars(c.field);

    auto basis_of = [coalg, index_of](const GenId& g) {
        std::vector<int> t(g.idx.begin() + 1, g.idx.begin() + g.arity);
        return index_of->at(t);
    };

    LinearMapSpec delta("Delta", H, {H, H}, Extension::AlgebraHom);
    delta.set_generator_rule([H, coalg, basis_of](const GenId& g) -> std::optional<TensorElement> {
        if (!H->has_generator(g)) return std::nullopt;
        const int r = g.index(0);
        TensorElement t({H, H});
        for (const auto& term : coalg->delta[basis_of(g)]) {
            Word l({leveled(r, coalg->basis[term.left])});
            Word rr({leveled(r, coalg->basis[term.right])});
            if (r % 2 == 0)
                t.add_term({l, rr}, term.coef);
            else
                t.add_term({rr, l}, term.coef);
        }
        return t;
    });

    LinearMapSpec eps("eps", H, {K}, Extension::AlgebraHom);
    eps.set_generator_rule([H, K, coalg, basis_of](const GenId& g) -> std::optional<TensorElement> {
        if (!H->has_generator(g)) return std::nullopt;
        return TensorElement::from(Element::scalar(K, coalg->eps[basis_of(g)]));
    });

    LinearMapSpec S("S", H, {H}, Extension::AlgebraAntiHom);
    S.set_generator_rule([H, coalg, basis_of](const GenId& g) -> std::optional<TensorElement> {
        if (!H->has_generator(g)) return std::nullopt;
        return TensorElement::from(
            Element::generator(H, leveled(g.index(0) + 1, coalg->basis[basis_of(g)])));
    });

    auto relations = std::make_shared<RelationSet>(
        H, [H, coalg, delta, S, eps](int level) {
            std::vector<Relation> out;
            const LinearMapSpec id = LinearMapSpec::identity(H);
            for (const auto& b : coalg->basis) {
                const GenId g = leveled(level, b);
                const Element x = Element::generator(H, g);
                const TensorElement d = delta.apply(x);
                const Element e = Element::scalar(H, to_scalar(eps.apply(x)));
                const Element left = multiply_slots(tensor_map({&S, &id}, d), 0).to_element() - e;
                const Element right = multiply_slots(tensor_map({&id, &S}, d), 0).to_element() - e;
                out.push_back({left, g, 0});
                out.push_back({right, g, 1});
            }
            return out;
        });

    HopfDescriptor h{std::move(name), H, delta, eps, S, false, relations};
    return h;
}

// ---------------------------------------------------------------------------
// Groups

GroupTable::GroupTable(std::vector<std::vector<std::size_t>> mul, std::vector<std::string> names)
    : mul_(std::move(mul)), names_(std::move(names)) {
    const std::size_t n = mul_.size();
    if (n == 0) throw Error(ErrorCode::InvalidGroupTable, "empty group");
    for (const auto& row : mul_) {
        if (row.size() != n) throw Error(ErrorCode::InvalidGroupTable, "table is not square");
        for (auto v : row)
            if (v >= n) throw Error(ErrorCode::InvalidGroupTable, "entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                    throw Error(ErrorCode::InvalidGroupTable,
                                "not associative on (" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) + ")");
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = mul_[e][a] == a && mul_[a][e] == a;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) throw Error(ErrorCode::InvalidGroupTable, "no identity element");
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (mul_[a][b] == identity_ && mul_[b][a] == identity_) inverse_[a] = b;
    for (std::size_t a = 0; a < n; ++a)
        if (inverse_[a] == n)
            throw Error(ErrorCode::InvalidGroupTable, "element " + std::to_string(a) + " has no inverse");
    if (names_.empty())
        for (std::size_t a = 0; a < n; ++a) names_.push_back("g" + std::to_string(a));
    if (names_.size() != n) throw Error(ErrorCode::InvalidGroupTable, "wrong number of names");
}

GroupTable GroupTable::cyclic(std::size_t n) {
    std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    GroupTable g(std::move(mul));
    g.set_label("Z/" + std::to_string(n));
    return g;
}

GroupTable GroupTable::klein_four() {
    std::vector<std::vector<std::size_t>> mul(4, std::vector<std::size_t>(4));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) mul[a][b] = a ^ b;
    GroupTable g(std::move(mul));
    g.set_label("Z/2xZ/2");
    return g;
}

bool GroupTable::abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = 0; b < order(); ++b)
            if (mul_[a][b] != mul_[b][a]) return false;
    return true;
}

HopfDescriptor make_group_hopf(const GroupTable& G, Field field) {
    const std::size_t n = G.order();
    std::vector<std::string> labels;
    std::vector<std::vector<TableTerms>> mul(n, std::vector<TableTerms>(n));
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(G.name(a));
        for (std::size_t b = 0; b < n; ++b) mul[a][b] = {{G.mul(a, b), Scalar(1, field)}};
    }
    AlgebraRef A = Algebra::table("K[" + G.label() + "]", field, labels,
                                  {{G.identity(), Scalar(1, field)}}, std::move(mul), G.abelian());
    AlgebraRef K = Algebra::scalars(field);
    LinearMapSpec delta("Delta", A, {A, A}, Extension::AlgebraHom);
    LinearMapSpec eps("eps", A, {K}, Extension::AlgebraHom);
    LinearMapSpec S("S", A, {A}, Extension::AlgebraAntiHom);
    for (std::size_t a = 0; a < n; ++a) {
        const Element g = Element::basis(A, a);
        delta.set_basis_image(a, TensorElement::pure({g, g}));
        eps.set_basis_image(a, Element::one(K));
        S.set_basis_image(a, Element::basis(A, G.inverse(a)));
    }
    return HopfDescriptor{A->name(), A, delta, eps, S, true, nullptr};
}

HopfDescriptor make_function_hopf(const GroupTable& G, Field field) {
    const std::size_t n = G.order();
    std::vector<std::string> labels;
    std::vector<std::vector<TableTerms>> mul(n, std::vector<TableTerms>(n));
    TableTerms unit;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back("d" + G.name(a));
        mul[a][a] = {{a, Scalar(1, field)}};
        unit.emplace(a, Scalar(1, field));
    }
    AlgebraRef A = Algebra::table("K^" + G.label(), field, labels, unit, std::move(mul), true);
    AlgebraRef K = Algebra::scalars(field);
    LinearMapSpec delta("Delta", A, {A, A}, Extension::AlgebraHom);
    LinearMapSpec eps("eps", A, {K}, Extension::AlgebraHom);
    LinearMapSpec S("S", A, {A}, Extension::AlgebraAntiHom);
    for (std::size_t g = 0; g < n; ++g) {
        TensorElement d({A, A});
        for (std::size_t h = 0; h < n; ++h)
            d.add_term({BasisKey(h), BasisKey(G.mul(G.inverse(h), g))}, Scalar(1, field));
        delta.set_basis_image(g, d);
        eps.set_basis_image(g, Element::scalar(K, Scalar(g == G.identity() ? 1 : 0, field)));
        S.set_basis_image(g, Element::basis(A, G.inverse(g)));
    }
    return HopfDescriptor{A->name(), A, delta, eps, S, G.abelian(), nullptr};
}

HopfDescriptor make_table_hopf(const TableHopfData& data) {
    const AlgebraRef& A = data.algebra;
    if (!A->is_table()) throw Error(ErrorCode::InvalidArgument, "make_table_hopf needs a table algebra");
    const std::size_t n = A->dim();
    if (data.delta.size() != n || data.eps.size() != n)
        throw Error(ErrorCode::InvalidTable, data.name + ": structure maps have wrong size");
    AlgebraRef K = Algebra::scalars(A->field());
    LinearMapSpec delta("Delta", A, {A, A}, Extension::AlgebraHom);
    LinearMapSpec eps("eps", A, {K}, Extension::AlgebraHom);
    for (std::size_t i = 0; i < n; ++i) {
        delta.set_basis_image(i, data.delta[i]);
        eps.set_basis_image(i, Element::scalar(K, data.eps[i]));
    }
    std::optional<LinearMapSpec> S;
    if (data.antipode) {
        if (data.antipode->size() != n)
            throw Error(ErrorCode::InvalidTable, data.name + ": antipode has wrong size");
        S.emplace("S", A, std::vector<AlgebraRef>{A}, Extension::AlgebraAntiHom);
        for (std::size_t i = 0; i < n; ++i) S->set_basis_image(i, (*data.antipode)[i]);
    }
    bool cocommutative = true;
    for (std::size_t i = 0; i < n && cocommutative; ++i)
        cocommutative = flip_slots(data.delta[i], 0) == data.delta[i];
    return HopfDescriptor{data.name, A, delta, eps, S, cocommutative, nullptr};
}

// ---------------------------------------------------------------------------
// Axiom checks

Report check_antipode_compatibility(const HopfDescriptor& h, const std::vector<Element>& elements,
                                    const std::string& scenario) {
    Report rep;
    const LinearMapSpec& S = h.S();
    for (const auto& x : elements) {
        const TensorElement lhs = h.delta.apply(h.apply_S(x));
        const TensorElement rhs = tensor_map({&S, &S}, flip_slots(h.coproduct(x), 0));
        rep.add(make_entry(scenario, "delta-antipode-compat", element_label(x),
                           compare_tensors(lhs, rhs, nullptr), 0));
        const TensorElement el = h.eps.apply(h.apply_S(x));
        const TensorElement er = h.eps.apply(x);
        rep.add(make_entry(scenario, "eps-antipode-compat", element_label(x),
                           compare_tensors(el, er, nullptr), 0));
    }
    return rep;
}

Report check_hopf_axioms(const HopfDescriptor& h, std::size_t degree, IdealOracle* oracle,
                         const std::string& scenario) {
    Report rep;
    const std::string prefix = h.name + ": ";
    const LinearMapSpec id = LinearMapSpec::identity(h.algebra);
    const auto spanning = h.generators(1);

    for (const auto& x : spanning) {
        const std::string el = prefix + element_label(x);
        const TensorElement d = h.coproduct(x);
        rep.add(make_entry(scenario, "coassociativity", el,
                           compare_tensors(tensor_map({&h.delta, &id}, d),
                                           tensor_map({&id, &h.delta}, d), nullptr),
                           degree));
        const TensorElement xt = TensorElement::from(x);
        rep.add(make_entry(scenario, "counit-left", el,
                           compare_tensors(drop_scalar_slots(tensor_map({&h.eps, &id}, d)), xt,
                                           nullptr),
                           degree));
        rep.add(make_entry(scenario, "counit-right", el,
                           compare_tensors(drop_scalar_slots(tensor_map({&id, &h.eps}, d)), xt,
                                           nullptr),
                           degree));
    }

    // Multiplicativity on products.
    std::vector<std::pair<Element, Element>> pairs;
    if (h.algebra->is_table()) {
        for (const auto& x : spanning)
            for (const auto& y : spanning) pairs.emplace_back(x, y);
    } else {
        const std::size_t cap = std::min<std::size_t>(degree, 3);
        const auto level0 = h.algebra->generators_up_to(0);
        for (const auto& x : spanning)
            for (const auto& w : words_up_to(level0, cap > 0 ? cap - 1 : 0))
                pairs.emplace_back(x, Element::word(h.algebra, w));
    }
    for (const auto& [x, y] : pairs) {
        const std::string el = prefix + element_label(x) + " * " + element_label(y);
        rep.add(make_entry(scenario, "delta-multiplicative", el,
                           compare_tensors(h.coproduct(x * y),
                                           tensor_mul(h.coproduct(x), h.coproduct(y)), nullptr),
                           degree));
        const Scalar exy = h.counit(x * y);
        const Scalar ex = h.counit(x), ey = h.counit(y);
        CheckOutcome c;
        if (exy == ex * ey) {
            c.level = h.algebra->is_free() ? "free" : "table";
        } else {
            c.status = Status::Fail;
            c.witness = (ex * ey - exy).to_string();
        }
        rep.add(make_entry(scenario, "eps-multiplicative", el, c, degree));
    }

    if (h.antipode) {
        for (const auto& x : spanning) {
            const std::string el = prefix + element_label(x);
            const TensorElement d = h.coproduct(x);
            const TensorElement unit_eps =
                TensorElement::from(Element::scalar(h.algebra, h.counit(x)));
            rep.add(make_entry(
                scenario, "antipode-left", el,
                compare_tensors(multiply_slots(tensor_map({&*h.antipode, &id}, d), 0), unit_eps,
                                oracle),
                degree));
            rep.add(make_entry(
                scenario, "antipode-right", el,
                compare_tensors(multiply_slots(tensor_map({&id, &*h.antipode}, d), 0), unit_eps,
                                oracle),
                degree));
        }
        Report compat = check_antipode_compatibility(h, spanning, scenario);
        for (auto e : compat.entries()) {
            e.element = prefix + e.element;
            e.degree_bound = degree;
            rep.add(std::move(e));
        }
    }
    return rep;
}

}  // namespace hopfneb

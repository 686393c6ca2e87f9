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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfneb/convolution.hpp"
#include "hopfneb/counterexamples.hpp"
#include "hopfneb/errors.hpp"
#include "hopfneb/hopf.hpp"
#include "hopfneb/ideal.hpp"
#include "hopfneb/scenarios.hpp"

using namespace hopfneb;

namespace {

bool all_pass(const Report& r) {
    for (const auto& e : r.entries())
        if (!e.passed()) return false;
    return !r.entries().empty();
}

Element gen(const HopfDescriptor& h, int r, int i, int j) {
    return Element::generator(h.algebra, matrix_generator(r, i, j));
}

LinearMapSpec evaluation(const HopfDescriptor& h, std::size_t g) {
    const AlgebraRef k = h.scalars();
    LinearMapSpec f("ev" + std::to_string(g), h.algebra, {k}, Extension::Linear);
    for (std::size_t y = 0; y < h.algebra->dim(); ++y)
        f.set_basis_image(y, Element::scalar(k, Scalar(y == g ? 1 : 0, h.algebra->field())));
    return f;
}

}  // namespace

TEST_CASE("group tables are validated") {
    CHECK_NOTHROW(GroupTable::cyclic(5));
    CHECK_NOTHROW(symmetric_group_3());
    CHECK_FALSE(symmetric_group_3().abelian());
    // A Latin square without an identity.
    CHECK_THROWS_AS(GroupTable({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}), Error);
    // Identity and inverses, but not associative (a loop of order 5).
    CHECK_THROWS_AS(GroupTable({{0, 1, 2, 3, 4},
                                {1, 0, 3, 4, 2},
                                {2, 4, 0, 1, 3},
                                {3, 2, 4, 0, 1},
                                {4, 3, 1, 2, 0}}),
                    Error);
}

TEST_CASE("K[G] and K^G satisfy the Hopf axioms exhaustively") {
    for (const auto& g : {GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::cyclic(4),
                          GroupTable::klein_four(), symmetric_group_3()}) {
        for (const Field f : {Field::rationals(), Field::prime(5)}) {
            CHECK(all_pass(check_hopf_axioms(make_group_hopf(g, f), 2, nullptr, "t")));
            CHECK(all_pass(check_hopf_axioms(make_function_hopf(g, f), 2, nullptr, "t")));
        }
    }
}

TEST_CASE("K^G comultiplication sums over factorizations") {
    const GroupTable g = symmetric_group_3();
    const HopfDescriptor h = make_function_hopf(g);
    for (std::size_t x = 0; x < g.order(); ++x) {
        TensorElement want({h.algebra, h.algebra});
        for (std::size_t a = 0; a < g.order(); ++a)
            for (std::size_t b = 0; b < g.order(); ++b)
                if (g.mul(a, b) == x) want += TensorElement::pure({Element::basis(h.algebra, a),
                                                                   Element::basis(h.algebra, b)});
        CHECK(h.coproduct(Element::basis(h.algebra, x)) == want);
        CHECK(h.apply_S(Element::basis(h.algebra, x)) ==
              Element::basis(h.algebra, g.inverse(x)));
    }
}

TEST_CASE("K[G] group elements are group-like with S(g) = g^-1") {
    const GroupTable g = symmetric_group_3();
    const HopfDescriptor h = make_group_hopf(g);
    for (std::size_t x = 0; x < g.order(); ++x) {
        const Element e = Element::basis(h.algebra, x);
        CHECK(h.coproduct(e) == TensorElement::pure({e, e}));
        CHECK(h.counit(e).is_one());
        CHECK(h.apply_S(e) * e == Element::one(h.algebra));
    }
}

TEST_CASE("free Hopf algebra: matrix comultiplication alternates by level") {
    const HopfDescriptor h = matrix_free_hopf();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            TensorElement even({h.algebra, h.algebra}), odd({h.algebra, h.algebra});
            for (int k = 0; k < 2; ++k) {
                even += TensorElement::pure({gen(h, 0, i, k), gen(h, 0, k, j)});
                odd += TensorElement::pure({gen(h, 1, k, j), gen(h, 1, i, k)});
            }
            CHECK(h.coproduct(gen(h, 0, i, j)) == even);
            CHECK(h.coproduct(gen(h, 1, i, j)) == odd);
            CHECK(h.counit(gen(h, 0, i, j)) == Scalar(i == j ? 1 : 0));
            CHECK(h.counit(gen(h, 3, i, j)) == Scalar(i == j ? 1 : 0));
            CHECK(h.apply_S(gen(h, 2, i, j)) == gen(h, 3, i, j));
        }
    const Element w = gen(h, 0, 0, 1) * gen(h, 1, 1, 0);
    CHECK(h.apply_S(w) == gen(h, 2, 1, 0) * gen(h, 1, 0, 1));
}

TEST_CASE("free Hopf algebra relations are the antipode identities") {
    const HopfDescriptor h = matrix_free_hopf();
    const auto rels = h.relations->up_to_level(0);
    CHECK(rels.size() == 8);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const Element delta_ij = Element::scalar(h.algebra, Scalar(i == j ? 1 : 0));
            Element left = -delta_ij, right = -delta_ij;
            for (int k = 0; k < 2; ++k) {
                left += gen(h, 1, i, k) * gen(h, 0, k, j);
                right += gen(h, 0, i, k) * gen(h, 1, k, j);
            }
            bool found_left = false, found_right = false;
            for (const auto& r : rels) {
                found_left = found_left || r.value == left;
                found_right = found_right || r.value == right;
            }
            CHECK(found_left);
            CHECK(found_right);
        }
}

TEST_CASE("free Hopf axioms hold modulo the relations at degree 2") {
    const HopfDescriptor h = matrix_free_hopf();
    IdealOracle oracle(h, 2);
    const Report r = check_hopf_axioms(h, 2, &oracle, "t");
    CHECK(all_pass(r));
    bool some_ideal = false;
    for (const auto& e : r.entries())
        if (e.status == Status::PassModIdeal) {
            some_ideal = true;
            CHECK_FALSE(e.certificate.empty());
        }
    CHECK(some_ideal);
    CHECK(all_pass(check_antipode_compatibility(h, spanning_generators(h.algebra, 2), "t")));
}

TEST_CASE("coalgebra validation rejects a broken counit") {
    CoalgebraDescriptor c = make_matrix_coalgebra(2);
    CHECK_NOTHROW(verify_coalgebra(c));
    c.eps[0] = Scalar(2);
    CHECK_THROWS_AS(verify_coalgebra(c), Error);
}

TEST_CASE("convolution of evaluations on K^G is evaluation at the product") {
    const GroupTable g = symmetric_group_3();
    const HopfDescriptor h = make_function_hopf(g);
    const AlgebraRef k = h.scalars();
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            CHECK(maps_equal_on_basis(convolution(h, k, evaluation(h, a), evaluation(h, b)),
                                      evaluation(h, g.mul(a, b))));
}

TEST_CASE("convolution inverse of id is the antipode") {
    for (const auto& h : {make_group_hopf(symmetric_group_3()), make_function_hopf(GroupTable::cyclic(4))}) {
        const ConvolutionInverse inv = convolution_inverse(h, h.algebra, LinearMapSpec::identity(h.algebra));
        REQUIRE(inv.invertible());
        CHECK(maps_equal_on_basis(*inv.inverse, h.S()));
    }
}

TEST_CASE("inverse of an algebra map into K is f o S") {
    const GroupTable g = GroupTable::cyclic(3);
    const HopfDescriptor h = make_function_hopf(g);
    for (std::size_t a = 0; a < g.order(); ++a) {
        const ConvolutionInverse inv = convolution_inverse(h, h.scalars(), evaluation(h, a));
        REQUIRE(inv.invertible());
        CHECK(maps_equal_on_basis(*inv.inverse, evaluation(h, g.inverse(a))));
        CHECK(maps_equal_on_basis(*inv.inverse, compose(evaluation(h, a), h.S())));
    }
}

TEST_CASE("the zero map has no convolution inverse") {
    const HopfDescriptor h = make_group_hopf(GroupTable::cyclic(3));
    const ConvolutionInverse inv = convolution_inverse(h, h.scalars(), zero_map(h.algebra, h.scalars()));
    CHECK_FALSE(inv.invertible());
    CHECK_FALSE(inv.certificate.empty());
    const HopfDescriptor free = matrix_free_hopf();
    CHECK_THROWS_AS(convolution_inverse(free, free.algebra, LinearMapSpec::identity(free.algebra)),
                    Error);
}

TEST_CASE("property: convolution is associative with unit on random maps") {
    std::mt19937_64 rng(3);
    const HopfDescriptor h = make_group_hopf(symmetric_group_3());
    const AlgebraRef a = h.algebra;
    const auto random_map = [&](const char* name) {
        LinearMapSpec f(name, a, {a}, Extension::Linear);
        for (std::size_t i = 0; i < a->dim(); ++i) {
            Element img(a);
            for (std::size_t t = 0; t < a->dim(); ++t)
                img.add_term(t, Scalar(static_cast<long>(rng() % 5) - 2));
            f.set_basis_image(i, img);
        }
        return f;
    };
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = random_map("f"), g = random_map("g"), m = random_map("m");
        CHECK(maps_equal_on_basis(convolution(h, a, convolution(h, a, f, g), m),
                                  convolution(h, a, f, convolution(h, a, g, m))));
        CHECK(maps_equal_on_basis(convolution(h, a, convolution_unit(h, a), f), f));
    }
}

TEST_CASE("group characters are counted by gcd") {
    CHECK(group_characters(GroupTable::cyclic(3), Field::rationals()).size() == 1);
    CHECK(group_characters(GroupTable::cyclic(4), Field::rationals()).size() == 2);
    CHECK(group_characters(GroupTable::klein_four(), Field::rationals()).size() == 4);
    CHECK(group_characters(GroupTable::cyclic(3), Field::prime(7)).size() == 3);
    CHECK(group_characters(GroupTable::cyclic(4), Field::prime(7)).size() == 2);
    CHECK(group_characters(symmetric_group_3(), Field::rationals()).size() == 2);
    for (const auto& chi : group_characters(symmetric_group_3(), Field::prime(13))) {
        const GroupTable g = symmetric_group_3();
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t b = 0; b < 6; ++b) CHECK(chi[g.mul(a, b)] == chi[a] * chi[b]);
    }
}

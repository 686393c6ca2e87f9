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

#include "hopfneb/counterexamples.hpp"
#include "hopfneb/errors.hpp"
#include "hopfneb/ideal.hpp"

using namespace hopfneb;

namespace {

struct Fixture {
    HopfDescriptor h = matrix_free_hopf();
    std::vector<Element> rels;
    std::vector<GenId> alphabet = h.algebra->generators_up_to(1);

    Fixture() {
        for (const auto& r : h.relations->up_to_level(0)) rels.push_back(r.value);
    }
    Element g(int r, int i, int j) const {
        return Element::generator(h.algebra, matrix_generator(r, i, j));
    }
};

}  // namespace

TEST_CASE("relations and their two-sided multiples are members") {
    Fixture f;
    const IdealSpan span = span_ideal(f.h.algebra, f.rels, f.alphabet, 4);
    for (const auto& r : f.rels) {
        const auto m = member(span, r);
        CHECK(m.member);
        CHECK(expand_certificate(span, m, {f.h.algebra}) == TensorElement::from(r));
    }
    const Element x = f.g(0, 0, 1) * f.rels[2] * f.g(1, 1, 1) - f.rels[5] * f.g(0, 1, 0);
    const auto m = member(span, x);
    CHECK(m.member);
    CHECK(expand_certificate(span, m, {f.h.algebra}) == TensorElement::from(x));
}

TEST_CASE("generators and the unit are not found") {
    Fixture f;
    const IdealSpan span = span_ideal(f.h.algebra, f.rels, f.alphabet, 3);
    CHECK_FALSE(member(span, f.g(0, 0, 0)).member);
    CHECK_FALSE(member(span, Element::one(f.h.algebra)).member);
    CHECK_FALSE(member(span, f.rels[0] + f.g(1, 0, 1)).member);
}

TEST_CASE("degree bound errors") {
    Fixture f;
    CHECK_THROWS_AS(span_ideal(f.h.algebra, f.rels, f.alphabet, 1), Error);
    const IdealSpan span = span_ideal(f.h.algebra, f.rels, f.alphabet, 2);
    CHECK_THROWS_AS(member(span, f.rels[0] * f.g(0, 0, 0)), Error);
}

TEST_CASE("tensor membership in I (x) H + H (x) I") {
    Fixture f;
    const IdealSpan span = span_ideal(f.h.algebra, f.rels, f.alphabet, 3);
    const std::vector<AlgebraRef> factors{f.h.algebra, f.h.algebra};
    const TensorElement x = TensorElement::pure({f.rels[1], f.g(0, 1, 1)}) +
                            TensorElement::pure({f.g(1, 0, 0) * f.g(0, 0, 1), f.rels[3]});
    const auto m = member(span, x);
    CHECK(m.member);
    CHECK(expand_certificate(span, m, factors) == x);
    const TensorElement y = x + TensorElement::pure({f.g(0, 0, 0), f.g(0, 0, 0)});
    CHECK_FALSE(member(span, y).member);
}

TEST_CASE("property: random ideal combinations are members with valid certificates") {
    Fixture f;
    const IdealSpan span = span_ideal(f.h.algebra, f.rels, f.alphabet, 4);
    std::mt19937_64 rng(5);
    const auto random_word = [&](std::size_t max_len) {
        Element w = Element::one(f.h.algebra);
        const std::size_t len = rng() % (max_len + 1);
        for (std::size_t i = 0; i < len; ++i)
            w = w * Element::generator(f.h.algebra, f.alphabet[rng() % f.alphabet.size()]);
        return w;
    };
    for (int trial = 0; trial < 30; ++trial) {
        Element x(f.h.algebra);
        for (int t = 0; t < 3; ++t) {
            const Element u = random_word(1), v = random_word(1);
            x += Scalar(static_cast<long>(rng() % 5) + 1) * (u * f.rels[rng() % f.rels.size()] * v);
        }
        const auto m = member(span, x);
        CHECK(m.member);
        CHECK(expand_certificate(span, m, {f.h.algebra}) == TensorElement::from(x));
        // Adding a lone generator leaves the ideal (generators are independent
        // of the relations, which have no linear terms).
        CHECK_FALSE(member(span, x + f.g(0, 1, 0)).member);
    }
}

TEST_CASE("oracle chooses the alphabet from the largest level present") {
    Fixture f;
    IdealOracle oracle(f.h, 3);
    const auto a0 = oracle.member(TensorElement::from(f.rels[0]));
    CHECK(a0.result.member);
    CHECK(a0.alphabet_level == 2);
    Element shifted(f.h.algebra);
    for (const auto& r : f.h.relations->up_to_level(1))
        if (r.generator.index(0) == 1) {
            shifted = r.value;
            break;
        }
    REQUIRE_FALSE(shifted.is_zero());
    const auto a1 = oracle.member(TensorElement::from(shifted));
    CHECK(a1.result.member);
    CHECK(a1.alphabet_level == 3);
    CHECK_FALSE(a1.rendered.empty());
}

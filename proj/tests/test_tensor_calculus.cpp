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
#include "hopfneb/scenarios.hpp"
#include "hopfneb/tensor.hpp"

using namespace hopfneb;

namespace {

Element random_element(const AlgebraRef& a, std::mt19937_64& rng) {
    Element e(a);
    for (std::size_t t = 0; t < a->dim(); ++t)
        if (rng() % 2) e.add_term(t, Scalar(static_cast<long>(rng() % 5) - 2, a->field()));
    return e;
}

ModuleMatrix random_matrix(const Ring& ring, std::size_t n, std::mt19937_64& rng) {
    ModuleMatrix m(ring, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            std::vector<Element> parts;
            for (const auto& f : ring) parts.push_back(random_element(f, rng));
            m.set(p, q, TensorElement::pure(parts));
        }
    return m;
}

TwistedModuleElement random_vector(const Ring& ring, std::size_t n, std::mt19937_64& rng) {
    TwistedModuleElement v;
    for (std::size_t p = 0; p < n; ++p) {
        std::vector<Element> parts;
        for (const auto& f : ring) parts.push_back(random_element(f, rng));
        v.push_back(TensorElement::pure(parts));
    }
    return v;
}

/// Elementary matrix 1 + c E_{pq}, p != q.
ModuleMatrix elementary(const Ring& ring, std::size_t n, std::size_t p, std::size_t q,
                        const TensorElement& c) {
    ModuleMatrix m = ModuleMatrix::identity(ring, n);
    m.set(p, q, c);
    return m;
}

}  // namespace

TEST_CASE("matrix application follows M(e_q) = sum_p M[p][q] e_p") {
    const HopfDescriptor h = make_group_hopf(GroupTable::cyclic(3));
    const Ring ring{h.algebra};
    const auto c = [&](std::size_t i) { return TensorElement::from(Element::basis(h.algebra, i)); };
    ModuleMatrix m(ring, 2);
    m.set(0, 0, c(0));
    m.set(0, 1, c(1));
    m.set(1, 0, c(2));
    const auto y = m.apply({c(1), c(2)});
    CHECK(y[0] == c(1) + c(0));
    CHECK(y[1] == c(0));
    CHECK(m.column(1) == TwistedModuleElement{c(1), TensorElement(ring)});
    CHECK_THROWS_AS(m.set(0, 0, TensorElement::pure({Element::one(h.algebra), Element::one(h.algebra)})),
                    Error);
}

TEST_CASE("property: compose(phi, psi) applies psi first over a noncommutative ring") {
    std::mt19937_64 rng(17);
    const HopfDescriptor h = make_group_hopf(symmetric_group_3());
    const Ring ring{h.algebra, h.algebra};
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        const ModuleMatrix phi = random_matrix(ring, n, rng), psi = random_matrix(ring, n, rng);
        const auto x = random_vector(ring, n, rng);
        CHECK(compose(phi, psi).apply(x) == phi.apply(psi.apply(x)));
    }
}

TEST_CASE("property: invert_matrix finds two-sided inverses of elementary products") {
    std::mt19937_64 rng(23);
    const HopfDescriptor h = make_group_hopf(symmetric_group_3());
    const Ring ring{h.algebra};
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t n = 2;
        ModuleMatrix m = ModuleMatrix::identity(ring, n);
        for (int k = 0; k < 3; ++k) {
            const std::size_t p = rng() % n, q = (p + 1) % n;
            m = compose(m, elementary(ring, n, p, q,
                                      TensorElement::from(random_element(h.algebra, rng))));
        }
        // A group-like diagonal factor keeps the matrix invertible.
        ModuleMatrix d = ModuleMatrix::identity(ring, n);
        d.set(0, 0, TensorElement::from(Element::basis(h.algebra, 1 + rng() % 5)));
        m = compose(d, m);
        const auto inv = invert_matrix(m);
        REQUIRE(inv);
        CHECK(compose(*inv, m) == ModuleMatrix::identity(ring, n));
        CHECK(compose(m, *inv) == ModuleMatrix::identity(ring, n));
    }
}

TEST_CASE("invert_matrix: singular matrices and free factors") {
    const HopfDescriptor h = make_group_hopf(GroupTable::cyclic(2));
    const Ring ring{h.algebra};
    CHECK_FALSE(invert_matrix(ModuleMatrix(ring, 2)));
    // 1 + u is a zero divisor in K[Z/2].
    ModuleMatrix m(ring, 1);
    m.set(0, 0, TensorElement::from(Element::one(h.algebra) + Element::basis(h.algebra, 1)));
    CHECK_FALSE(invert_matrix(m));
    const HopfDescriptor free = matrix_free_hopf();
    CHECK_THROWS_AS(invert_matrix(ModuleMatrix::identity({free.algebra}, 1)), Error);
}

TEST_CASE("ring maps compose and check their factors") {
    const HopfDescriptor h = make_group_hopf(GroupTable::cyclic(3));
    const RingHom delta = RingHom::from_map(h.delta);
    const RingHom eps = RingHom::from_map(h.eps);
    const LinearMapSpec id = LinearMapSpec::identity(h.algebra);
    const RingHom delta_eps = RingHom::slotwise("id.eps", {&id, &h.eps});
    const Element g = Element::basis(h.algebra, 2);
    // (id (x) eps) o Delta = id.
    CHECK(compose(delta_eps, delta)(g) == TensorElement::from(g));
    CHECK(eps(g) == TensorElement::from(Element::one(h.scalars())));
    CHECK_THROWS_AS(compose(delta, delta), Error);
    CHECK_THROWS_AS(delta(TensorElement::pure({g, g})), Error);
}

TEST_CASE("balanced normal form moves scalars through phi") {
    const HopfDescriptor h = make_group_hopf(GroupTable::cyclic(3));
    const RingHom delta = RingHom::from_map(h.delta);
    const Ring r2{h.algebra, h.algebra};
    const Element g = Element::basis(h.algebra, 1);
    const TensorElement x = TensorElement::pure({g, Element::one(h.algebra)});
    const auto v = balanced_normalize({{x, TensorElement::from(g), 1}}, delta, 2);
    CHECK(v[0].is_zero());
    CHECK(v[1] == TensorElement::pure({g * g, g}));
    CHECK_THROWS_AS(balanced_normalize({{x, TensorElement::from(g), 2}}, delta, 2), Error);
}

TEST_CASE("property: maps over phi and their extensions correspond") {
    std::mt19937_64 rng(29);
    const HopfDescriptor h = make_group_hopf(symmetric_group_3());
    const RingHom delta = RingHom::from_map(h.delta);
    const Ring src{h.algebra}, dst{h.algebra, h.algebra};
    for (int trial = 0; trial < 10; ++trial) {
        const ModuleMapOverPhi f{delta, random_matrix(dst, 2, rng)};
        const ModuleMatrix F = correspond_via(f);
        CHECK(F == f.values);
        const auto a = random_vector(src, 2, rng);
        TwistedModuleElement pushed;
        for (const auto& x : a) pushed.push_back(delta(x));
        CHECK(F.apply(pushed) == f.apply(a));
        CHECK(correspond_back(delta, F).apply(a) == f.apply(a));
    }
}

TEST_CASE("property: extension of scalars along an algebra map preserves composition") {
    std::mt19937_64 rng(31);
    const HopfDescriptor h = make_group_hopf(symmetric_group_3());
    const RingHom delta = RingHom::from_map(h.delta);
    const Ring src{h.algebra};
    for (int trial = 0; trial < 10; ++trial) {
        const ModuleMatrix m = random_matrix(src, 2, rng), n = random_matrix(src, 2, rng);
        CHECK(extend_scalars(delta, compose(m, n)) ==
              compose(extend_scalars(delta, m), extend_scalars(delta, n)));
    }
    const RingHom id = RingHom::identity(src);
    CHECK_THROWS_AS(extend_scalars(id, ModuleMatrix::identity({h.algebra, h.algebra}, 1)), Error);
}

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

#include <set>

#include "hopfneb/counterexamples.hpp"
#include "hopfneb/errors.hpp"
#include "hopfneb/scenarios.hpp"

using namespace hopfneb;

namespace {

bool all_pass(const Report& r) {
    for (const auto& e : r.entries())
        if (!e.passed()) return false;
    return !r.entries().empty();
}

bool all_exact(const Report& r) {
    for (const auto& e : r.entries())
        if (e.status != Status::Pass) return false;
    return !r.entries().empty();
}

std::set<std::string> failing_elements(const Report& r, const std::string& check) {
    std::set<std::string> out;
    for (const ReportEntry* e : r.find(check))
        if (!e->passed()) out.insert(e->element);
    return out;
}

Element gen(const HopfDescriptor& h, int r, int i, int j) {
    return Element::generator(h.algebra, matrix_generator(r, i, j));
}

TensorElement pure2(const Element& a, const Element& b) { return TensorElement::pure({a, b}); }

}  // namespace

TEST_CASE("theta(e_0) of the rank-2 example") {
    const HopfDescriptor h = matrix_free_hopf();
    const NebMatrix ex = build_example_ex(h);
    const Element one = Element::one(h.algebra);
    const auto x = ex.theta(one, 0);
    REQUIRE(x.size() == 2);
    CHECK(x[0] == pure2(gen(h, 0, 0, 0), one));
    CHECK(x[1] == pure2(gen(h, 0, 1, 0), one));
}

TEST_CASE("neb counit on e_1 is e_1 by Kronecker deltas") {
    const HopfDescriptor h = matrix_free_hopf();
    const NebMatrix ex = build_example_ex(h);
    const Element one = Element::one(h.algebra);
    const auto v = neb_counit_value(ex, ex.theta(one, 1));
    CHECK(v[0].is_zero());
    CHECK(v[1] == TensorElement::from(one));
}

TEST_CASE("property: condition values transport along 1 (x) 1 (x) a") {
    const HopfDescriptor h = matrix_free_hopf();
    const NebMatrix ex = build_example_ex(h);
    const Element one = Element::one(h.algebra);
    for (const NebMatrix& th : {ex, mutate_example_ex(ex)}) {
        for (std::size_t q = 0; q < 2; ++q) {
            const auto base = th.theta(one, q);
            const auto lhs0 = neb_coassociativity_lhs(th, base), rhs0 = neb_coassociativity_rhs(th, base);
            for (const auto& a : spanning_words(h.algebra, 3)) {
                const auto x = th.theta(a, q);
                CHECK(neb_coassociativity_lhs(th, x) == transport(th.coaction, a, lhs0));
                CHECK(neb_coassociativity_rhs(th, x) == transport(th.coaction, a, rhs0));
            }
        }
    }
}

TEST_CASE("coactions: regular and trivial pass, corrupted fails on g1 only") {
    const HopfDescriptor h = make_group_hopf(GroupTable::cyclic(3));
    CHECK(all_exact(check_coaction(Coaction::regular(h), 2, nullptr, "t")));
    const HopfDescriptor f = make_function_hopf(symmetric_group_3());
    CHECK(all_exact(check_coaction(Coaction::trivial(h, f.algebra), 2, nullptr, "t")));
    const HopfDescriptor free = matrix_free_hopf();
    CHECK(all_exact(check_coaction(Coaction::trivial(free, free.algebra), 2, nullptr, "t")));

    const Coaction bad = corrupted_coaction();
    const Report r = check_coaction(bad, 2, nullptr, "t");
    const std::set<std::string> g1{bad.name + ": g1"};
    CHECK(failing_elements(r, "coaction-counit") == g1);
    CHECK(failing_elements(r, "coaction-coassociativity") == g1);
    CHECK(failing_elements(r, "coaction-multiplicative").empty());
    CHECK(failing_elements(r, "coaction-unit").empty());
}

TEST_CASE("sigma on K[Z/2]") {
    const HopfDescriptor h = make_group_hopf(GroupTable::cyclic(2));
    const Coaction c = Coaction::regular(h);
    const RingHom s = sigma(c);
    const Element one = Element::one(h.algebra), u = Element::basis(h.algebra, 1);
    CHECK(s(pure2(one, u)) == pure2(u, u));
    CHECK(s(pure2(u, u)) == pure2(one, u));
    CHECK(s(pure2(one, one)) == pure2(one, one));
}

TEST_CASE("sigma identities: exact on tables, certified on the free instance") {
    for (const auto& h : {make_function_hopf(GroupTable::cyclic(3)), make_group_hopf(symmetric_group_3())})
        CHECK(all_exact(check_isigma(Coaction::regular(h), 2, nullptr, "t")));
    const HopfDescriptor free = matrix_free_hopf();
    CHECK(all_exact(check_isigma(Coaction::trivial(free, free.algebra), 2, nullptr, "t")));
    IdealOracle oracle(free, 2);
    const Report r = check_isigma(Coaction::regular(free), 2, &oracle, "t");
    CHECK(all_pass(r));
    for (const ReportEntry* e : r.find("sigma-delta")) {
        if (e->element.find("1") == e->element.size() - 1) continue;
        if (e->status == Status::PassModIdeal) CHECK_FALSE(e->certificate.empty());
    }
    CHECK_FALSE(r.find("sigma-delta").empty());
    const HopfDescriptor noS = make_table_hopf(TableHopfData{
        "no antipode", free.scalars(), {TensorElement::one({free.scalars(), free.scalars()})},
        {Scalar(1)}, std::nullopt});
    CHECK_THROWS_AS(sigma(Coaction::regular(noS)), Error);
}

TEST_CASE("rho = sigma^* Theta inverts Theta on commutative instances") {
    const SuiteInstance z2 = function_instance(GroupTable::cyclic(2), Field::rationals());
    for (const auto& th : theta_families(z2)) {
        const HopfModuleMatrix rho = rho_from_theta_commutative(th);
        CHECK(all_exact(check_inverse_pair(th.T, rho.D, th.name, "t")));
    }
    const SuiteInstance z3 = group_instance(GroupTable::cyclic(3), Field::rationals());
    const Element one = Element::one(z3.hopf.algebra);
    for (std::size_t g = 0; g < 3; ++g) {
        ModuleMatrix t(Coaction::regular(z3.hopf).ring(), 1);
        t.set(0, 0, pure2(Element::basis(z3.hopf.algebra, g), one));
        const NebMatrix th{"g", Coaction::regular(z3.hopf), t};
        const HopfModuleMatrix rho = rho_from_theta_commutative(th);
        CHECK(rho.D.at(0, 0) == pure2(Element::basis(z3.hopf.algebra, (3 - g) % 3), one));
        const HopfModuleMatrix dbar = correspond_theta_hopfmodule(th);
        CHECK(dbar.D == rho.D);
        CHECK(correspond_hopfmodule_theta(dbar).T == th.T);
    }
}

TEST_CASE("commutativity and invertibility are required") {
    const HopfDescriptor free = matrix_free_hopf();
    const NebMatrix ex = build_example_ex(free);
    CHECK_THROWS_AS(rho_from_theta_commutative(ex), Error);
    CHECK_THROWS_AS(rho_from_hopfmodule_commutative(build_example_exhopf(free)), Error);
    try {
        (void)correspond_theta_hopfmodule(ex);
        FAIL("expected NoCertifiedInverse");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoCertifiedInverse);
    }
    const SuiteInstance z2 = group_instance(GroupTable::cyclic(2), Field::rationals());
    ModuleMatrix t(Coaction::regular(z2.hopf).ring(), 1);
    const NebMatrix zero{"zero", Coaction::regular(z2.hopf), t};
    try {
        (void)correspond_theta_hopfmodule(zero);
        FAIL("expected NoCertifiedInverse");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoCertifiedInverse);
    }
}

TEST_CASE("group-like families pass the neb and Hopf module conditions") {
    for (const auto& inst : {function_instance(GroupTable::klein_four(), Field::rationals()),
                             group_instance(GroupTable::cyclic(3), Field::prime(7)),
                             group_instance(symmetric_group_3(), Field::rationals())}) {
        for (const auto& th : theta_families(inst)) CHECK(all_exact(check_neb(th, 2, nullptr, "t")));
        for (const auto& d : hopfmodule_families(inst))
            CHECK(all_exact(check_hopfmodule(d, 2, nullptr, "t")));
    }
}

TEST_CASE("truncated Hopf module fails the counit on e_1") {
    const HopfDescriptor free = matrix_free_hopf();
    IdealOracle oracle(free, 2);
    const Report r = check_hopfmodule(truncate_example_exhopf(build_example_exhopf(free)), 2, &oracle, "t");
    const auto counit = failing_elements(r, "hopfmodule-counit");
    CHECK_FALSE(counit.empty());
    for (const auto& e : counit) CHECK(e.substr(e.size() - 3) == "*e1");
    const auto entries = r.find("hopfmodule-counit", "ExHopf-truncated: 1*e1");
    REQUIRE(entries.size() == 1);
    CHECK(entries[0]->witness == "e1: 1*(1)");
    CHECK(failing_elements(r, "hopfmodule-linearity").empty());
}

TEST_CASE("comonads on K[Z/2] and the free instance") {
    const HopfDescriptor z2 = make_group_hopf(GroupTable::cyclic(2));
    const Comonads c = comonad_structures(Coaction::regular(z2), 1, 2, nullptr, "t");
    CHECK(all_exact(c.report));
    const HopfDescriptor free = matrix_free_hopf();
    IdealOracle oracle(free, 2);
    const Comonads f = comonad_structures(Coaction::regular(free), 1, 2, &oracle, "t");
    CHECK(all_exact(f.report));
    const Coaction reg = Coaction::regular(free);
    const auto x = unit_vector(reg.ring(), 1, 0);
    CHECK(f.G.comultiply(x) == unit_vector(reg.ring3(), 1, 0));
    CHECK(f.G.counit(x) == unit_vector({free.algebra}, 1, 0));
}

TEST_CASE("comodule conditions agree with the neb conditions element by element") {
    const HopfDescriptor free = matrix_free_hopf();
    IdealOracle oracle(free, 2);
    const NebMatrix ex = build_example_ex(free);
    for (const NebMatrix& th : {ex, mutate_example_ex(ex)}) {
        const Report r = check_comodule_equivalence(th, 2, &oracle, "t");
        const Report neb = check_neb(th, 2, &oracle, "t");
        CHECK(failing_elements(r, "comodule-coassociativity") ==
              failing_elements(neb, "neb-coassociativity"));
        CHECK(failing_elements(r, "comodule-counit") == failing_elements(neb, "neb-counit"));
        CHECK(failing_elements(r, "neb-agreement").empty());
    }
    const Report good = check_comodule_equivalence(ex, 2, &oracle, "t");
    for (const auto& e : good.entries()) CHECK(e.status == Status::Pass);
}

TEST_CASE("comodule lift of the rank-2 example on e_0") {
    const HopfDescriptor free = matrix_free_hopf();
    const NebMatrix ex = build_example_ex(free);
    const Element one = Element::one(free.algebra);
    const auto v = comodule_lift(ex, one, 0);
    // H(theta) theta(e_0) = sum_{p,r} a_{rp} (x) a_{p0} (x) 1 e_r.
    for (int r = 0; r < 2; ++r) {
        TensorElement want({free.algebra, free.algebra, free.algebra});
        for (int p = 0; p < 2; ++p)
            want += TensorElement::pure({gen(free, 0, r, p), gen(free, 0, p, 0), one});
        CHECK(v[r] == want);
    }
}

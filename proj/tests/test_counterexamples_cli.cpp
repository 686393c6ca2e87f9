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
#include "hopfneb/instance.hpp"
#include "hopfneb/scenarios.hpp"

using namespace hopfneb;

namespace {

using Pair = std::pair<Element, Element>;

/// Theta_R written out by hand: (x0 + x1 y, x0 z + x1 y z).
Pair hand_theta_R(const PartialW& pw, const Element& x0, const Element& x1) {
    const Element y = pw.y(), z = pw.z();
    return {x0 + x1 * y, x0 * z + x1 * y * z};
}

bool same(const Pair& a, const Pair& b) { return a.first == b.first && a.second == b.second; }

int parse_error_line(const std::string& text) {
    try {
        (void)parse_instance(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

const char* kZ2 = R"(# comment
name K2
basis 1 u
unit 1
mul u u = 1
delta 1 = 1|1
delta u = u|u
eps 1 = 1
eps u = 1
antipode 1 = 1
antipode u = u
commutative
)";

}  // namespace

TEST_CASE("Theta_R kills (-y, 1), which is nonzero") {
    const HopfDescriptor h = matrix_free_hopf();
    const PartialW pw = PartialW::make(h);
    const Element one = Element::one(pw.R), zero = Element::zero(pw.R);
    const Element minus_y = -pw.y();
    CHECK_FALSE(minus_y.is_zero());
    CHECK(same(theta_R_direct(pw, minus_y, one), {zero, zero}));
    CHECK(same(theta_R_extended(pw, build_example_ex(h).T, minus_y, one), {zero, zero}));
    CHECK(same(theta_R_direct(pw, one, zero), {one, pw.z()}));
    CHECK(same(theta_R_direct(pw, zero, zero), {zero, zero}));
}

TEST_CASE("property: both Theta_R routes match the hand formula") {
    const HopfDescriptor h = matrix_free_hopf();
    const PartialW pw = PartialW::make(h);
    const NebMatrix ex = build_example_ex(h);
    const auto words = r_spanning_words(pw, 2);
    CHECK(words.size() == 7);
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        Element x0(pw.R), x1(pw.R);
        for (const auto& w : words) {
            x0 += Scalar(static_cast<long>(rng() % 5) - 2) * w;
            x1 += Scalar(static_cast<long>(rng() % 5) - 2) * w;
        }
        const Pair want = hand_theta_R(pw, x0, x1);
        CHECK(same(theta_R_direct(pw, x0, x1), want));
        CHECK(same(theta_R_extended(pw, ex.T, x0, x1), want));
        CHECK(same(apply_extended(pw, build_example_exhopf(h).D, x0, x1), want));
    }
}

TEST_CASE("the partial map w is defined on level 0 only") {
    const HopfDescriptor h = matrix_free_hopf();
    const PartialW pw = PartialW::make(h);
    const Element a01 = Element::generator(h.algebra, matrix_generator(0, 0, 1));
    const Element a10 = Element::generator(h.algebra, matrix_generator(0, 1, 0));
    CHECK(pw.w.apply_element(a01 * a10) == pw.y() * pw.z());
    CHECK(pw.w.apply_element(Element::generator(h.algebra, matrix_generator(0, 1, 1))) ==
          pw.y() * pw.z());
    try {
        (void)pw.w.apply_element(Element::generator(h.algebra, matrix_generator(1, 0, 0)));
        FAIL("expected MissingGeneratorImage");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MissingGeneratorImage);
    }
    const Word yz({GenId::make("y"), GenId::make("z")});
    CHECK(pw.w.apply_element(pw.lift(yz)) == Element::word(pw.R, yz));
}

TEST_CASE("mutated example: documented witnesses on e_0 and e_1") {
    const HopfDescriptor h = matrix_free_hopf();
    IdealOracle oracle(h, 2);
    const Report r = check_neb(mutate_example_ex(build_example_ex(h)), 2, &oracle, "t");
    const auto e0 = r.find("neb-coassociativity", "Ex-mutated: 1*e0");
    const auto e1 = r.find("neb-coassociativity", "Ex-mutated: 1*e1");
    REQUIRE(e0.size() == 1);
    REQUIRE(e1.size() == 1);
    CHECK(e0[0]->witness == "e0: 1*(a[0;0,1]|a[0;1,0]|1)");
    CHECK(e1[0]->witness == "e1: 1*(a[0;1,0]|a[0;0,1]|1)");
    for (const ReportEntry* e : r.find("neb-coassociativity")) CHECK_FALSE(e->passed());
    for (const ReportEntry* e : r.find("neb-counit")) CHECK(e->passed());
}

TEST_CASE("instance files parse into valid Hopf algebras") {
    const TableHopfData d = parse_instance(kZ2);
    const HopfDescriptor h = make_table_hopf(d);
    CHECK(h.name == "K2");
    CHECK(h.algebra->dim() == 2);
    CHECK(h.commutative());
    for (const auto& e : check_hopf_axioms(h, 2, nullptr, "t").entries()) CHECK(e.passed());
    const HopfDescriptor ref = make_group_hopf(GroupTable::cyclic(2));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(h.algebra->product_terms(i, j) == ref.algebra->product_terms(i, j));
    const TableHopfData p = parse_instance(std::string(kZ2) + "field f:5\n");
    CHECK(p.algebra->field() == Field::prime(5));
}

TEST_CASE("instance parse errors carry line and column") {
    try {
        (void)parse_instance("basis 1 u\nunit 1\nmul u v = 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 7);
        CHECK(e.token() == "v");
    }
    CHECK(parse_error_line("basis 1 u\nunit 1\ndelta 1 = 1|1\neps 1 = x/y\n") == 4);
    CHECK(parse_error_line("basis 1 1\n") == 1);
    CHECK(parse_error_line("basis 1\nunit 1\nfrobnicate\n") == 3);
    CHECK(parse_error_line("basis 1\nunit 1\ndelta 1 = 1\n") == 3);
    CHECK(parse_error_line("basis 1\nunit 1\ndelta 1 = 1|1 +\n") == 3);
    CHECK(parse_error_line("basis 1 u\nunit 1\ndelta 1 = 1|1\neps 1 = 1\n") == 1);
    CHECK(parse_error_line("unit 1\n") == 1);
    CHECK(parse_error_line("field f:9\nbasis 1\n") == 1);
    // Structurally parsed but not associative: u u = u + 1 with u u u checked.
    try {
        (void)parse_instance("basis 1 u\nunit 1\nmul u u = 1 + u\nmul 1 u = 1\n"
                             "delta 1 = 1|1\ndelta u = u|u\neps 1 = 1\neps u = 1\n");
        FAIL("expected InvalidTable");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidTable);
    }
}

TEST_CASE("group files parse and validate") {
    const GroupTable g = parse_group("label Z3\nelements e a b\ne: e a b\na: a b e\nb: b e a\n");
    CHECK(g.order() == 3);
    CHECK(g.label() == "Z3");
    CHECK(g.mul(1, 1) == 2);
    try {
        (void)parse_group("elements e a\ne: e a\na: a\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    try {
        (void)parse_group("elements e a\ne: e a\na: e e\n");
        FAIL("expected InvalidGroupTable");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidGroupTable);
    }
    CHECK_THROWS_AS(parse_group("elements e a\ne: e a\n"), ParseError);
}

TEST_CASE("field option parsing") {
    CHECK(parse_field("q") == Field::rationals());
    CHECK(parse_field("f:11") == Field::prime(11));
    CHECK_THROWS_AS(parse_field("f:12"), Error);
    CHECK_THROWS_AS(parse_field("r"), Error);
}

TEST_CASE("scenario registry") {
    ScenarioParams params;
    params.degree = 2;
    try {
        (void)run_scenario("no-such-scenario", params);
        FAIL("expected UnknownScenario");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownScenario);
    }
    params.degree = 1;
    CHECK_THROWS_AS(run_scenario("example-ex", params), Error);
    params.degree = 2;
    CHECK_THROWS_AS(run_scenario("instance", params), Error);
    bool has_all = false;
    for (const auto& s : scenario_list()) has_all = has_all || s.name == "all";
    CHECK(has_all);
}

TEST_CASE("scenarios are deterministic and honour --group and the field") {
    ScenarioParams params;
    params.degree = 2;
    params.group = GroupTable::cyclic(3);
    params.field = Field::prime(7);
    const Report a = run_scenario("prop-comm", params), b = run_scenario("prop-comm", params);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.all_as_expected());
    // Over F_7, Z/3 has three characters, so K^{Z/3} contributes three group-like thetas.
    CHECK_FALSE(a.find("inverse-left", "K^Z/3 theta (1*dg0 + 2*dg1 + 4*dg2)").empty());
}

TEST_CASE("instance scenario on a parsed file") {
    ScenarioParams params;
    params.degree = 2;
    params.instance = parse_instance(kZ2);
    const Report r = run_scenario("instance", params);
    CHECK(r.all_as_expected());
    CHECK(r.summary().failed == 0);
}

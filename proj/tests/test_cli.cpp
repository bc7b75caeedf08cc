/*
   Copyright 2026 The skewlcp Authors

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

#include "skewlcp/cli.hpp"

using namespace skewlcp;
using namespace skewlcp::cli;

namespace {

// GF(16) = GF(2)[a]/(a^4 + a + 1), sigma = Frob, s = 1, n = 4
json gf16_manifest() {
    return json::parse(R"({
        "tower": {"field": {"p": 2, "modulus": "a^4 + a + 1", "name": "a"}, "sigma_exponent": 1, "s": 1},
        "codes": [
            {"name": "Full", "generator": "1"},
            {"name": "Zero", "generator": "x^4 + 1"},
            {"name": "G", "generator": "x + 1"},
            {"name": "Gperp", "dual_of": "G"}
        ]
    })");
}

json with_task(json m, json task) {
    m["task"] = std::move(task);
    return m;
}

RingPtr gf16_aut_ring() {
    auto f = ExtField::create(2, {1, 1, 0, 0, 1}, "a");
    return make_ring(FieldAut(f, 1));
}

}  // namespace

TEST_CASE("expression parser") {
    auto r = gf16_aut_ring();
    const ExtField& F = r->field();
    const Elem a = F.generator();
    CHECK(parse_expression(r, "a", "a^4 + a + 1").is_zero());
    CHECK(parse_expression(r, "a", "a^{4}").coeff(0) == F.add(a, F.one()));
    CHECK(parse_expression(r, "a", "a^3 a") == parse_expression(r, "a", "a * a^3"));
    CHECK(parse_expression(r, "a", "(a + 1)^2") == parse_expression(r, "a", "a^2 + 1"));
    CHECK(parse_expression(r, "a", "a^-1").coeff(0) == F.inv(a));

    const SkewPoly p = parse_expression(r, "a", "(a^2 + 1)x^5 + a^{11} x^4 + 2x + 3");
    REQUIRE(p.degree() == 5);
    CHECK(p.coeff(5) == F.add(F.pow(a, 2), F.one()));
    CHECK(p.coeff(4) == F.pow(a, 11));
    CHECK(p.coeff(1) == F.zero());  // 2 = 0 in characteristic 2
    CHECK(p.coeff(0) == F.one());
    // x a = sigma(a) x
    CHECK(parse_expression(r, "a", "x a") == parse_expression(r, "a", "a^2 x"));

    for (const char* bad : {"a^", "(a + 1", "b + 1", "a + + 1", "x^-1", "a^2 )"})
        CHECK_THROWS_AS(parse_expression(r, "a", bad), InputError);
    CHECK_THROWS_AS(parse_expression(r, "x", "x"), InputError);
}

TEST_CASE("element and polynomial forms agree") {
    auto r = gf16_aut_ring();
    const ExtField& F = r->field();
    const Elem e = F.pow(F.generator(), 7);  // a^7 = a^3 + a + 1
    CHECK(parse_element(r, "a", json::parse("[1, 1, 0, 1]")) == e);
    CHECK(parse_element(r, "a", json::parse(R"({"gen_pow": 7})")) == e);
    CHECK(parse_element(r, "a", "a^7") == e);
    CHECK(parse_element(r, "a", 3) == F.one());
    CHECK(element_json(F, e) == json::parse("[1, 1, 0, 1]"));
    CHECK_THROWS_AS(parse_element(r, "a", json::parse("[1, 2]")), InputError);
    CHECK_THROWS_AS(parse_element(r, "a", "x"), InputError);

    const SkewPoly p = parse_poly(r, "a", "x^2 + a^7");
    CHECK(parse_poly(r, "a", poly_json(p)) == p);
    CHECK(format_powers(p, "a") == "x^2 + a^7");
    CHECK(exponents_json(p) == json::parse("[7, null, 0]"));

    CHECK(parse_modulus(2, "a", "a^4 + a + 1") == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    CHECK(parse_modulus(2, "a", json::parse("[1, 1, 0, 0, 1]")) == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
}

TEST_CASE("manifest schema errors are input errors") {
    CHECK_THROWS_AS(load_manifest(json::parse("[]")), InputError);
    CHECK_THROWS_AS(load_manifest(json::parse("{}")), InputError);
    json m = gf16_manifest();
    m["codes"].push_back(json{{"name", "G"}, {"generator", "1"}});
    CHECK_THROWS_AS(load_manifest(m), InputError);  // duplicate name
    m = gf16_manifest();
    m["codes"].push_back(json{{"name", "Y"}, {"dual_of", "nope"}});
    CHECK_THROWS_AS(load_manifest(m), InputError);
    m = gf16_manifest();
    m["tower"]["field"]["modulus"] = "a^4 + 1";  // reducible
    CHECK_THROWS_AS(load_manifest(m), InputError);
    m = gf16_manifest();
    m["codes"].push_back(json{{"name", "Z0"}, {"generator", "0"}});
    CHECK_THROWS_AS(load_manifest(m), InputError);
    CHECK_THROWS_AS(run(load_manifest(with_task(gf16_manifest(), json{{"kind", "fly"}})), RunOptions{}), InputError);
    CHECK_THROWS_AS(example_manifest("9.9"), InputError);
}

TEST_CASE("check: full/zero pair and a mismatch") {
    RunOptions opt;
    const Context ctx = load_manifest(with_task(gf16_manifest(), json{{"kind", "check"}, {"pair", {"Full", "Zero"}}}));
    CHECK(ctx.code("Zero").is_zero_code());
    Outcome o = run(ctx, opt);
    CHECK(o.exit_code == kOk);
    CHECK(o.report["lcp"]["verdict"] == true);
    CHECK(o.report["security_parameter"]["primal"]["value"] == 1);

    // (x + 1)^3 generates the dual of G, so the pair shares x + 1
    json task{{"kind", "check"}, {"pair", {"G", "Gperp"}}, {"expect", {{"verdict", true}}}};
    o = run(load_manifest(with_task(gf16_manifest(), task)), opt);
    CHECK(o.exit_code == kMismatch);
    REQUIRE(o.report.contains("mismatches"));
    CHECK(o.report["mismatches"][0]["key"] == "verdict");
    CHECK(o.report["lcp"]["verdict"] == false);
}

TEST_CASE("search against the zero code has only the full code as partner") {
    const json task{{"kind", "search"}, {"code", "Zero"}, {"seed", "Full"}};
    Outcome o = run(load_manifest(with_task(gf16_manifest(), task)), RunOptions{});
    CHECK(o.exit_code == kOk);
    const json& c = o.report["counts"];
    CHECK(c["successes"] == c["candidates"]);
    CHECK(c["distinct_successes"] == 1);
    CHECK(o.report["sample"][0]["generator"]["text"] == "1");

    const json mismatched{{"kind", "search"}, {"code", "Zero"}, {"seed", "G"}};
    CHECK_THROWS_AS(run(load_manifest(with_task(gf16_manifest(), mismatched)), RunOptions{}), InputError);
}

TEST_CASE("distance exit codes") {
    RunOptions opt;
    const json task{{"kind", "distance"}, {"code", "G"}, {"expect", {{"distance", 2}}}};
    CHECK(run(load_manifest(with_task(gf16_manifest(), task)), opt).exit_code == kOk);

    // x^5 - 1 over GF(2): the repetition code has d = 5 and needs C(5,w) work per weight
    json m = json::parse(R"({
        "tower": {"field": {"p": 2, "modulus": [0, 1], "name": "c"}, "sigma_exponent": 0, "s": 5},
        "codes": [{"name": "R", "generator": "x^4 + x^3 + x^2 + x + 1"}],
        "task": {"kind": "distance", "code": "R"}
    })");
    opt.method = DistanceMethod::Columns;
    opt.budget = 3;
    Outcome o = run(load_manifest(m), opt);
    CHECK(o.exit_code == kBudgetExceeded);
    CHECK(o.report["distance"]["status"] == "budget-exceeded");

    m["codes"][0]["bound"] = json{{"value", 5}, {"provenance", "externally-asserted"}};
    o = run(load_manifest(m), opt);
    CHECK(o.report["distance"]["provenance"] == "declared-bound");
    opt.budget = 0;
    o = run(load_manifest(m), opt);
    CHECK(o.exit_code == kOk);
    CHECK(o.report["distance"]["value"] == 5);
    CHECK(o.report["distance"]["provenance"] == "column-independence");
}

TEST_CASE("canonical manifests re-run identically") {
    RunOptions opt;
    for (const auto& id : example_ids()) {
        CAPTURE(id);
        const json m = example_manifest(id);
        const Context a = load_manifest(m);
        const Context b = load_manifest(a.canonical());
        CHECK(b.canonical() == a.canonical());
        CHECK(load_manifest(json::parse(a.canonical().dump())).canonical() == a.canonical());
        const Outcome ra = cmd_reproduce(a, opt), rb = cmd_reproduce(b, opt);
        CHECK(ra.exit_code == kOk);
        CHECK(ra.report.dump() == rb.report.dump());
    }
    json m = gf16_manifest();
    m["task"] = json{{"kind", "check"}, {"pair", {"G", "Gperp"}}};
    const Context a = load_manifest(m);
    CHECK(run(a, opt).report.dump() == run(load_manifest(a.canonical()), opt).report.dump());
}

TEST_CASE("reproduce is deterministic across thread counts and detects edits") {
    RunOptions one, four;
    four.threads = 4;
    for (const char* id : {"7.3", "7.6"}) {
        CAPTURE(id);
        const Outcome a = cmd_reproduce(id, one), b = cmd_reproduce(id, four);
        CHECK(a.exit_code == kOk);
        CHECK(a.report.dump() == b.report.dump());
    }
    json m = example_manifest("7.6");
    m["expect"]["failures"] = 9;
    const Outcome o = cmd_reproduce(load_manifest(m), one);
    CHECK(o.exit_code == kMismatch);
    CHECK(o.report["pass"] == false);
}

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

#include "commands_internal.hpp"

#include "skewlcp/duality.hpp"
#include "skewlcp/isometry.hpp"

namespace skewlcp::cli {

json distance_json(const CodeRing& ring, const DistanceResult& r) {
    json out{{"method", to_string(r.method)}, {"status", to_string(r.status)}};
    out["distance"] = r.distance ? json(*r.distance) : json(nullptr);
    out["lower_bound"] = r.lower_bound;
    out["work"] = r.work;
    if (!r.columns.empty()) out["columns"] = r.columns;
    if (!r.codeword.empty()) {
        json w = json::array();
        for (const auto& e : r.codeword) w.push_back(element_json(ring.field(), e));
        out["codeword"] = w;
    }
    if (r.declared)
        out["declared"] = json{{"value", r.declared->value}, {"provenance", to_string(r.declared->provenance)}};
    return out;
}

json lcp_json(const LcpReport& r) {
    json crit = json::array();
    for (const auto& c : r.criteria) crit.push_back(json{{"id", c.id}, {"statement", c.statement}, {"holds", c.holds}});
    return json{{"verdict", r.verdict},
                {"criteria", crit},
                {"e_space_checked", r.e_space_checked},
                {"degree_sum", r.degree_sum},
                {"gcrd", poly_report(r.gcrd, r.gcrd.field().name())},
                {"lclm", poly_report(r.lclm, r.lclm.field().name())}};
}

json poly_report(const SkewPoly& p, const std::string& var) {
    json out{{"coeffs", poly_json(p)}};
    json ex = exponents_json(p);
    if (!ex.empty() || p.is_zero()) out["exponents"] = ex;
    out["text"] = format_powers(p, var);
    return out;
}

json code_json(const Context& ctx, const std::string& name, const Code& c) {
    json out{{"name", name}, {"n", c.length()}, {"k", c.dimension()}};
    out["lambda"] = element_json(c.ring().field(), c.ring().lambda());
    out["generator"] = poly_report(c.generator(), ctx.base_var());
    if (c.bound()) out["bound"] = json{{"value", c.bound()->value}, {"provenance", to_string(c.bound()->provenance)}};
    return out;
}

DistanceOptions distance_options(const RunOptions& opt) {
    DistanceOptions d;
    d.method = opt.method.value_or(DistanceMethod::Columns);
    d.budget = opt.budget;
    d.threads = opt.threads;
    return d;
}

Side resolve_distance(const Code& c, const RunOptions& opt) {
    Side s;
    if (c.is_zero_code()) {
        s.report = json{{"status", "undefined"}, {"reason", "zero code"}};
        return s;
    }
    const DistanceResult r = min_distance(c, distance_options(opt));
    s.report = distance_json(c.ring(), r);
    if (r.status == DistanceStatus::Resolved) {
        s.value = *r.distance;
        s.provenance = to_string(r.method);
    } else if (r.declared) {
        // unresolved searches fall back to the declared bound, tagged as such
        s.value = r.declared->value;
        s.provenance = to_string(DistanceMethod::Declared);
    } else {
        s.budget_exceeded = r.status == DistanceStatus::BudgetExceeded;
        s.provenance = "unresolved";
    }
    s.report["value"] = s.value ? json(*s.value) : json(nullptr);
    s.report["provenance"] = s.provenance;
    return s;
}

Code with_known_bound(const Context& ctx, const Code& c) {
    if (c.bound()) return c;
    for (const auto& o : ctx.codes())
        if (o.code == c && o.code.bound()) return c.with_bound(*o.code.bound());
    return c;
}

Security security(const Context& ctx, const Code& c, const Code& d, const RunOptions& opt) {
    Security sec;
    const Code dperp = with_known_bound(ctx, dual(d));
    const Side a = resolve_distance(c, opt), b = resolve_distance(dperp, opt);
    if (a.value && b.value) sec.value = std::min(*a.value, *b.value);
    sec.budget_exceeded = a.budget_exceeded || b.budget_exceeded;
    sec.report = json{{"value", sec.value ? json(*sec.value) : json(nullptr)}, {"primal", a.report}, {"dual", b.report}};
    return sec;
}

namespace {

Code code_arg(const Context& ctx, const json& task, const char* key) {
    if (!task.contains(key) || !task[key].is_string()) throw InputError(std::string("task: missing code name \"") + key + "\"");
    return ctx.code(task[key].get<std::string>());
}

}  // namespace

json header(const char* command, const RunOptions& opt) {
    return json{{"command", command}, {"seed", opt.seed}};
}

namespace {

bool expect_matches(const json& expect, const json& report, json& mismatches) {
    if (!expect.is_object()) return true;
    bool ok = true;
    for (const auto& [key, want] : expect.items()) {
        const json* got = report.contains(key) ? &report[key] : nullptr;
        if (!got || *got != want) {
            ok = false;
            mismatches.push_back(json{{"key", key}, {"expected", want}, {"actual", got ? *got : json(nullptr)}});
        }
    }
    return ok;
}

Outcome check_impl(const Context& ctx, const RunOptions& opt) {
    const json& task = ctx.task();
    std::string cn = "C", dn = "D";
    if (task.contains("pair")) {
        const json& p = task["pair"];
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
            throw InputError("task.pair must name two codes");
        cn = p[0].get<std::string>();
        dn = p[1].get<std::string>();
    }
    const Code& c = ctx.code(cn);
    const Code& d = ctx.code(dn);
    if (!c.ring().same_as(d.ring())) throw InputError("check: codes " + cn + " and " + dn + " live in different rings");

    Outcome out;
    out.report = header("check", opt);
    out.report["mode"] = opt.mode == LcpMode::Audit ? "audit" : "fast";
    out.report["C"] = code_json(ctx, cn, c);
    out.report["D"] = code_json(ctx, dn, d);
    std::optional<Elem> u;
    if (opt.mode == LcpMode::Audit) u = w_polynomial_context(c.ring(), opt.seed);
    const LcpReport rep = is_lcp(c, d, opt.mode, u);
    out.report["lcp"] = lcp_json(rep);
    json summary{{"verdict", rep.verdict}};
    bool budget = false;
    if (task.value("security", true)) {
        Security sec = security(ctx, c, d, opt);
        out.report["security_parameter"] = sec.report;
        summary["security_parameter"] = sec.report["value"];
        budget = sec.budget_exceeded && !sec.value;
    }
    json mism = json::array();
    const bool ok = expect_matches(task.value("expect", json::object()), summary, mism);
    if (!mism.empty()) out.report["mismatches"] = mism;
    out.exit_code = !ok ? kMismatch : budget ? kBudgetExceeded : kOk;
    return out;
}

Outcome search_impl(const Context& ctx, const RunOptions& opt) {
    const json& task = ctx.task();
    const Code c = code_arg(ctx, task, "code");
    const Code seed = code_arg(ctx, task, "seed");
    IsometryGroup group(c.ring_ptr());
    const SupplementReport rep = supplement_search(c, seed, group, opt.threads);

    Outcome out;
    out.report = header("search", opt);
    out.report["code"] = code_json(ctx, task["code"].get<std::string>(), c);
    out.report["seed_code"] = code_json(ctx, task["seed"].get<std::string>(), seed);
    const bool coset = !seed.ring().same_as(c.ring());
    json counts{{"group_order", group.order()},
                {"formula_order", static_cast<std::uint64_t>(group.formula_order())},
                {"candidates", rep.candidates},
                {"coset", coset},
                {"successes", rep.successes},
                {"failures", rep.candidates - rep.successes},
                {"distinct_candidates", rep.distinct_candidates},
                {"distinct_successes", rep.distinct_successes},
                {"identity_succeeds", rep.identity_succeeds}};
    if (!coset) {
        counts["non_identity_candidates"] = rep.candidates - 1;
        counts["non_identity_successes"] = rep.successes - (rep.identity_succeeds ? 1 : 0);
        counts["non_identity_failures"] = rep.candidates - 1 - counts["non_identity_successes"].get<std::size_t>();
    }
    counts["total_pairs"] = static_cast<std::uint64_t>(group.order()) * rep.successes;
    out.report["counts"] = counts;
    const std::size_t sample = task.value("sample", std::size_t{5});
    json lcps = json::array();
    for (std::size_t k = 0; k < rep.lcps.size() && k < sample; ++k) {
        const auto& s = rep.lcps[k];
        lcps.push_back(json{{"beta", element_json(c.ring().field(), s.map.beta)},
                            {"i", s.map.i},
                            {"generator", poly_report(s.code.generator(), ctx.base_var())}});
    }
    out.report["sample"] = lcps;
    json mism = json::array();
    const bool ok = expect_matches(task.value("expect", json::object()), counts, mism);
    if (!mism.empty()) out.report["mismatches"] = mism;
    out.exit_code = ok ? kOk : kMismatch;
    return out;
}

Outcome distance_impl(const Context& ctx, const RunOptions& opt) {
    const json& task = ctx.task();
    const Code c = code_arg(ctx, task, "code");
    if (c.is_zero_code()) throw InputError("distance of the zero code is undefined");
    Outcome out;
    out.report = header("distance", opt);
    out.report["code"] = code_json(ctx, task["code"].get<std::string>(), c);
    const Side s = resolve_distance(c, opt);
    out.report["distance"] = s.report;
    json mism = json::array();
    const bool ok = expect_matches(task.value("expect", json::object()), json{{"distance", s.report["value"]}}, mism);
    if (!mism.empty()) out.report["mismatches"] = mism;
    const bool exceeded = s.report["status"] == to_string(DistanceStatus::BudgetExceeded);
    out.exit_code = !ok ? kMismatch : exceeded ? kBudgetExceeded : kOk;
    return out;
}

// library precondition failures on manifest data are input errors
template <class Fn>
Outcome guarded(Fn fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    } catch (const std::domain_error& e) {
        throw InputError(e.what());
    }
}

}  // namespace

Outcome cmd_check(const Context& ctx, const RunOptions& opt) {
    return guarded([&] { return check_impl(ctx, opt); });
}
Outcome cmd_search(const Context& ctx, const RunOptions& opt) {
    return guarded([&] { return search_impl(ctx, opt); });
}
Outcome cmd_distance(const Context& ctx, const RunOptions& opt) {
    return guarded([&] { return distance_impl(ctx, opt); });
}

Outcome run(const Context& ctx, const RunOptions& opt) {
    const std::string kind = ctx.task().value("kind", "");
    if (kind == "check") return cmd_check(ctx, opt);
    if (kind == "search") return cmd_search(ctx, opt);
    if (kind == "distance") return cmd_distance(ctx, opt);
    if (kind == "reproduce") return cmd_reproduce(ctx, opt);
    throw InputError("task.kind must be check, search, distance or reproduce");
}

}  // namespace skewlcp::cli

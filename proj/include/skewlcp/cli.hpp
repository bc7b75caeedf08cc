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

// Manifests, reports and the worked examples behind the command-line tool.

#ifndef SKEWLCP_CLI_HPP
#define SKEWLCP_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bch.hpp"
#include "codes.hpp"
#include "lcp.hpp"

namespace skewlcp::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kMismatch = 1, kInputError = 2, kBudgetExceeded = 3 };

/// Malformed manifest or expression; maps to exit code 2.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parses "eta^4 + eta^3 + 1", "(a^2 + 1)x^5 + a^101 x^4 + 2", ... The field
/// generator is called `var`; `x` is the ring variable. Products may be
/// written with or without '*', exponents as ^k or ^{k}.
SkewPoly parse_expression(const RingPtr& ring, const std::string& var, const std::string& text);

/// Field modulus from a coefficient array (constant first) or a polynomial
/// in the field variable, e.g. "a^8 + a^4 + a^3 + a^2 + 1".
std::vector<std::uint32_t> parse_modulus(std::uint32_t p, const std::string& name, const json& j);

/// Element from a coefficient array, {"gen_pow": e}, an integer or an
/// expression string.
Elem parse_element(const RingPtr& ring, const std::string& var, const json& j);
/// Polynomial from an array of elements (constant term first) or a string.
SkewPoly parse_poly(const RingPtr& ring, const std::string& var, const json& j);

json element_json(const ExtField& f, const Elem& a);
json poly_json(const SkewPoly& p);

/// Discrete logarithms of the coefficients (null for zero); empty when the
/// field is too large for a table.
json exponents_json(const SkewPoly& p);
/// "x^9 + a^49x^8 + ..." for small fields, the additive form otherwise.
std::string format_powers(const SkewPoly& p, const std::string& var);

struct RunOptions {
    LcpMode mode = LcpMode::Audit;
    std::optional<DistanceMethod> method;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::ostream* log = nullptr;  // per-step timings, never part of a report
};

/// Default seed: SKEWLCP_SEED when set, otherwise 0.
std::uint64_t default_seed();

struct NamedCode {
    std::string name;
    Code code;
    std::optional<BchSpec> bch;     // set for codes built from a BCH window
    std::optional<SkewPoly> given;  // the polynomial as written, for explicit generators
};

/// A parsed manifest.
class Context {
   public:
    const TowerPtr& tower() const noexcept { return tower_; }
    const CodeRingPtr& ring() const noexcept { return ring_; }
    const std::string& top_var() const noexcept { return top_var_; }
    const std::string& base_var() const noexcept { return base_var_; }
    const std::vector<NamedCode>& codes() const noexcept { return codes_; }
    const NamedCode& named(const std::string& name) const;
    const Code& code(const std::string& name) const { return named(name).code; }
    const json& task() const noexcept { return task_; }
    const json& expect() const noexcept { return expect_; }
    /// The manifest with every element and polynomial rewritten as
    /// coefficient arrays; loading it gives the same run.
    const json& canonical() const noexcept { return canonical_; }

    RingPtr base_ring() const;
    RingPtr top_ring() const;
    Elem base_element(const json& j) const { return parse_element(base_ring(), base_var_, j); }
    Elem top_element(const json& j) const { return parse_element(top_ring(), top_var_, j); }
    SkewPoly base_poly(const json& j) const { return parse_poly(base_ring(), base_var_, j); }

    friend Context load_manifest(const json& manifest, std::uint64_t seed);

   private:
    TowerPtr tower_;
    CodeRingPtr ring_;
    std::string top_var_, base_var_;
    std::vector<NamedCode> codes_;
    json task_, expect_, canonical_;
};

/// Throws InputError on schema violations.
Context load_manifest(const json& manifest, std::uint64_t seed = 0);

struct Outcome {
    json report;
    int exit_code = kOk;
};

Outcome cmd_check(const Context& ctx, const RunOptions& opt);
Outcome cmd_search(const Context& ctx, const RunOptions& opt);
Outcome cmd_distance(const Context& ctx, const RunOptions& opt);
/// Dispatches on task.kind.
Outcome run(const Context& ctx, const RunOptions& opt);

/// "7.1" ... "7.6".
const std::vector<std::string>& example_ids();
/// The stored manifest of a worked example.
json example_manifest(const std::string& id);
/// Re-derives every number claimed for the example; exit code 1 on any
/// mismatch.
Outcome cmd_reproduce(const Context& ctx, const RunOptions& opt);
Outcome cmd_reproduce(const std::string& id, const RunOptions& opt);

/// Report fragments shared by the commands.
json distance_json(const CodeRing& ring, const DistanceResult& r);
json lcp_json(const LcpReport& r);

}  // namespace skewlcp::cli

#endif

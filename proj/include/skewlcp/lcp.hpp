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

#ifndef SKEWLCP_LCP_HPP
#define SKEWLCP_LCP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codes.hpp"

namespace skewlcp {

// ---- minimum distance ------------------------------------------------------

enum class DistanceMethod { Exhaustive, Columns, Declared };
enum class DistanceStatus { Resolved, BudgetExceeded, Unavailable };

const char* to_string(DistanceMethod m);
const char* to_string(DistanceStatus s);

/// Exhaustive search runs only when |F|^k is at most this.
inline constexpr std::uint64_t kExhaustiveBudget = std::uint64_t{1} << 24;
/// Column search runs a cardinality only when the running total of subsets stays below this.
inline constexpr std::uint64_t kColumnBudget = 10'000'000;

struct DistanceOptions {
    DistanceMethod method = DistanceMethod::Columns;
    /// 0 picks the default for the method.
    std::uint64_t budget = 0;
    unsigned threads = 1;
    /// Use the byte kernels when the field allows it.
    bool fast_path = true;
};

struct DistanceResult {
    DistanceMethod method = DistanceMethod::Columns;
    DistanceStatus status = DistanceStatus::Unavailable;
    std::optional<std::size_t> distance;
    /// Best proven lower bound when unresolved.
    std::size_t lower_bound = 0;
    /// Minimum-weight codeword (exhaustive) or lex-first dependent column set.
    std::vector<Elem> codeword;
    std::vector<std::size_t> columns;
    /// Codewords visited or column subsets checked, counted as a sequential
    /// lexicographic scan would count them.
    std::uint64_t work = 0;
    std::optional<DistanceBound> declared;
};

/// Throws std::domain_error for the zero code.
DistanceResult min_distance(const Code& c, const DistanceOptions& opt = {});

/// Column engine on an explicit parity-check matrix: smallest d such that
/// some d columns are dependent.
DistanceResult column_distance(const Matrix& h, const DistanceOptions& opt = {});
/// Exhaustive engine on an explicit generator matrix of full row rank.
DistanceResult exhaustive_distance(const Matrix& g, const DistanceOptions& opt = {});

// ---- LCP verdicts ---------------------------------------------------------

enum class LcpMode { Fast, Audit };

struct Criterion {
    int id = 0;
    std::string statement;
    bool holds = false;
};

struct LcpReport {
    bool verdict = false;
    std::vector<Criterion> criteria;
    SkewPoly gcrd;
    SkewPoly lclm;
    std::size_t degree_sum = 0;
    /// True when the E-space criteria were evaluated.
    bool e_space_checked = false;
};

/// Raised when two criteria disagree; this never happens for sound arithmetic.
class CriteriaDisagree : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Evaluates (4)-(6) always; audit mode adds (1)-(3) and, when u is given,
/// the E-space criteria (7)-(9).
LcpReport is_lcp(const Code& c, const Code& d, LcpMode mode = LcpMode::Fast, const std::optional<Elem>& u = std::nullopt);

/// gcrd(g, h) = 1 and deg g + deg h = n; the inner test of supplement searches.
bool is_lcp_fast(const Code& c, const Code& d);

struct SecurityParameter {
    std::optional<std::size_t> value;
    DistanceResult primal;  // d(C)
    DistanceResult dual;    // d(D^perp)
};

/// min(d(C), d(D^perp)), with per-side provenance.
SecurityParameter security_parameter(const Code& c, const Code& d, const DistanceOptions& opt = {});
SecurityParameter security_parameter(const Code& c, const Code& d, const DistanceOptions& opt_c,
                                     const DistanceOptions& opt_dual);

}  // namespace skewlcp

#endif

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

// Helpers shared by the command implementations.

#ifndef SKEWLCP_CLI_COMMANDS_INTERNAL_HPP
#define SKEWLCP_CLI_COMMANDS_INTERNAL_HPP

#include "skewlcp/cli.hpp"

namespace skewlcp::cli {

/// One distance, with the declared bound used when the search gives up.
struct Side {
    json report;
    std::optional<std::size_t> value;
    std::string provenance;
    bool budget_exceeded = false;
};

struct Security {
    json report;
    std::optional<std::size_t> value;
    bool budget_exceeded = false;
};

json poly_report(const SkewPoly& p, const std::string& var);
json code_json(const Context& ctx, const std::string& name, const Code& c);
DistanceOptions distance_options(const RunOptions& opt);
Side resolve_distance(const Code& c, const RunOptions& opt);
/// c with the bound of an equal manifest code attached, if any.
Code with_known_bound(const Context& ctx, const Code& c);
Security security(const Context& ctx, const Code& c, const Code& d, const RunOptions& opt);
json header(const char* command, const RunOptions& opt);

}  // namespace skewlcp::cli

#endif

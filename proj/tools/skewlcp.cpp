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

// skewlcp: LCP checks, supplement searches and distances for skew
// constacyclic codes described by JSON manifests.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "skewlcp/cli.hpp"

namespace {

using skewlcp::cli::json;
namespace cli = skewlcp::cli;

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cli::InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw cli::InputError(path + ": " + e.what());
    }
}

void write_json(const json& j, const std::string& out) {
    const std::string text = j.dump(2) + "\n";
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw cli::InputError("cannot write " + out);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LCPs of skew constacyclic codes"};
    app.require_subcommand(1);

    std::string mode = "audit", method, out;
    std::uint64_t budget = 0, seed = 0;
    unsigned threads = 1;
    bool quiet = false;
    try {
        seed = cli::default_seed();
    } catch (const cli::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kInputError;
    }
    auto common = [&](CLI::App* sub) {
        sub->add_option("--mode", mode, "LCP test: audit (all criteria) or fast")
            ->check(CLI::IsMember({"audit", "fast"}));
        sub->add_option("--method", method, "distance engine")->check(CLI::IsMember({"exhaustive", "columns", "declared"}));
        sub->add_option("--budget", budget, "work budget for distance searches (0: engine default)");
        sub->add_option("--seed", seed, "seed for random choices (default: SKEWLCP_SEED or 0)");
        sub->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
        sub->add_option("-o,--out", out, "report file (default: stdout)");
        sub->add_flag("-q,--quiet", quiet, "no timings on stderr");
    };

    std::string manifest_path;
    std::map<std::string, CLI::App*> by_kind;
    for (const char* kind : {"check", "search", "distance", "run"}) {
        CLI::App* sub = app.add_subcommand(kind, std::string(kind) == "run" ? "run the task named in a manifest"
                                                                            : std::string("run a ") + kind + " manifest");
        sub->add_option("manifest", manifest_path, "manifest file")->required()->check(CLI::ExistingFile);
        common(sub);
        by_kind[kind] = sub;
    }
    std::string example;
    CLI::App* repro = app.add_subcommand("reproduce", "re-derive a worked example");
    repro->add_option("example", example, "example id, or \"all\"");
    repro->add_option("--manifest", manifest_path, "reproduce from an edited manifest")->check(CLI::ExistingFile);
    common(repro);
    CLI::App* fixture = app.add_subcommand("fixture", "print the manifest of a worked example");
    fixture->add_option("example", example, "example id")->required();
    fixture->add_option("-o,--out", out, "output file");
    CLI::App* normalize = app.add_subcommand("normalize", "rewrite a manifest with coefficient arrays only");
    normalize->add_option("manifest", manifest_path, "manifest file")->required()->check(CLI::ExistingFile);
    normalize->add_option("--seed", seed, "seed for defaulted BCH parameters");
    normalize->add_option("-o,--out", out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kInputError;
    }

    cli::RunOptions opt;
    opt.mode = mode == "fast" ? skewlcp::LcpMode::Fast : skewlcp::LcpMode::Audit;
    if (method == "exhaustive") opt.method = skewlcp::DistanceMethod::Exhaustive;
    if (method == "columns") opt.method = skewlcp::DistanceMethod::Columns;
    if (method == "declared") opt.method = skewlcp::DistanceMethod::Declared;
    opt.budget = budget;
    opt.seed = seed;
    opt.threads = threads;
    if (!quiet) opt.log = &std::cerr;

    const auto t0 = std::chrono::steady_clock::now();
    int rc = cli::kOk;
    try {
        if (fixture->parsed()) {
            write_json(cli::example_manifest(example), out);
            return cli::kOk;
        }
        if (normalize->parsed()) {
            write_json(cli::load_manifest(read_json(manifest_path), seed).canonical(), out);
            return cli::kOk;
        }
        cli::Outcome res;
        if (repro->parsed()) {
            if (!manifest_path.empty()) {
                res = cli::cmd_reproduce(cli::load_manifest(read_json(manifest_path), seed), opt);
            } else if (example == "all") {
                res.report = json::array();
                for (const auto& id : cli::example_ids()) {
                    cli::Outcome one = cli::cmd_reproduce(id, opt);
                    res.report.push_back(std::move(one.report));
                    res.exit_code = std::max(res.exit_code, one.exit_code);
                }
            } else if (!example.empty()) {
                res = cli::cmd_reproduce(example, opt);
            } else {
                throw cli::InputError("reproduce: give an example id or --manifest");
            }
        } else {
            const cli::Context ctx = cli::load_manifest(read_json(manifest_path), seed);
            std::string kind;
            for (const auto& [k, sub] : by_kind)
                if (sub->parsed()) kind = k;
            if (kind == "check") res = cli::cmd_check(ctx, opt);
            else if (kind == "search") res = cli::cmd_search(ctx, opt);
            else if (kind == "distance") res = cli::cmd_distance(ctx, opt);
            else res = cli::run(ctx, opt);
        }
        write_json(res.report, out);
        rc = res.exit_code;
    } catch (const cli::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kInputError;
    }
    if (opt.log)
        *opt.log << "total: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
    return rc;
}

// Copyright 2026 The Amnesia Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "amnesia/cli/commands.hpp"
#include "amnesia/cli/config.hpp"
#include "amnesia/cli/report.hpp"

namespace {

using amnesia::cli::ExperimentConfig;
using amnesia::cli::kEnvPrefix;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string env(const char *name) { return std::string(kEnvPrefix) + name; }

void add_common_options(CLI::App &sub, ExperimentConfig &c) {
    sub.add_option("--lambda", c.lambda, "Number of BB84 qubits")->envname(env("LAMBDA"));
    sub.add_option("--ell", c.ell, "Output length of the random OT")->envname(env("ELL"));
    sub.add_option("--seed", c.seed, "Root seed")->envname(env("SEED"));
    sub.add_option("--trials", c.trials, "Sessions or Monte Carlo samples")
        ->envname(env("TRIALS"));
    sub.add_option("--adversary", c.adversary, "Adversary or attack id")
        ->envname(env("ADVERSARY"));
    sub.add_flag("--exact", c.exact, "Evaluate exactly when feasible")->envname(env("EXACT"));
    sub.add_option("--out", c.out, "Report path (default: stdout)")->envname(env("OUT"));
    sub.add_option("--format", c.format, "json or csv")
        ->envname(env("FORMAT"))
        ->check(CLI::IsMember({"json", "csv"}));
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Simulator and verification suite for protocols in the no-quantum-memory "
                 "model"};
    app.set_version_flag("--version", amnesia::cli::version_string());
    app.require_subcommand(1);

    ExperimentConfig config;
    struct Sub {
        const char *name;
        const char *help;
    };
    const Sub subs[] = {
        {"commit", "Run commitment sessions"},
        {"rot", "Run random OT sessions"},
        {"flip", "Run coin-flip sessions"},
        {"ot-wrap", "Chosen-input OT built from one random OT"},
        {"attack", "Evaluate a registered attack against its bound"},
        {"verify", "Run verification suites: binding, moe, split, lhl or all"},
    };
    for (const auto &s : subs) {
        auto *sub = app.add_subcommand(s.name, s.help);
        add_common_options(*sub, config);
        sub->callback([&config, name = std::string(s.name)] { config.subcommand = name; });
        if (std::string(s.name) == "ot-wrap") {
            sub->add_option("--m0", config.m0, "First sender input as a bit string")
                ->envname(env("M0"));
            sub->add_option("--m1", config.m1, "Second sender input as a bit string")
                ->envname(env("M1"));
            sub->add_option("--choice", config.choice, "Receiver choice bit")
                ->envname(env("CHOICE"));
        }
        if (std::string(s.name) == "verify") {
            sub->add_option("suite", config.suite, "Suite to run")
                ->check(CLI::IsMember({"binding", "moe", "split", "lhl", "all"}));
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        const auto result = amnesia::cli::run_command(config);
        amnesia::cli::emit_report(result.report, config);
        return result.passed ? kExitPass : kExitFail;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}

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

#include "amnesia/cli/config.hpp"

#include "amnesia/quantum/register.hpp"

namespace amnesia::cli {

void ExperimentConfig::validate() const {
    const bool quantum = subcommand == "commit" || subcommand == "rot" ||
                         subcommand == "flip" || subcommand == "ot-wrap";
    if (lambda == 0) {
        throw UsageError("--lambda must be at least 1");
    }
    if (quantum && lambda > quantum::kMaxQubits) {
        throw UsageError("--lambda must be at most 24 when simulating quantum registers");
    }
    if (ell == 0 || ell > 64) {
        throw UsageError("--ell must be in [1, 64]");
    }
    if (trials == 0) {
        throw UsageError("--trials must be at least 1");
    }
    if (format != "json" && format != "csv") {
        throw UsageError("--format must be json or csv");
    }
    if (subcommand == "ot-wrap") {
        if (m0.size() != m1.size() || m0.empty()) {
            throw UsageError("--m0 and --m1 must be non-empty bit strings of equal length");
        }
        if (choice > 1) {
            throw UsageError("--choice must be 0 or 1");
        }
    }
}

nlohmann::json ExperimentConfig::to_json() const {
    nlohmann::json j{{"subcommand", subcommand}, {"lambda", lambda}, {"ell", ell},
                     {"seed", seed},             {"trials", trials}, {"adversary", adversary},
                     {"exact", exact},           {"format", format}};
    if (subcommand == "verify") {
        j["suite"] = suite;
    }
    if (subcommand == "ot-wrap") {
        j["m0"] = m0;
        j["m1"] = m1;
        j["choice"] = choice;
    }
    return j;
}

} // namespace amnesia::cli

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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace amnesia::adversary {

/**
 * One evaluated attack, serialised as
 * {attack_id, lambda, ell, mode, value, ci_low, ci_high, bound, seed}.
 */
struct AttackRecord {
    std::string attack_id;
    std::size_t lambda = 0;
    std::size_t ell = 0;
    std::string mode; ///< "exact" or "monte-carlo"
    double value = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double bound = 0.0;
    std::uint64_t seed = 0;

    /// The upper end of the interval does not exceed the bound.
    [[nodiscard]] bool within_bound() const { return ci_high <= bound + 1e-9; }
    [[nodiscard]] nlohmann::json to_json() const;
};

/**
 * Every attack id accepted by evaluate_attack(): the random-OT receiver
 * attacks of builtin_attack_ids(), plus "double-open-breidbart",
 * "double-open-standard" (commitment binding) and "moe-breidbart"
 * (monogamy game).
 */
std::vector<std::string> attack_registry();

/**
 * Evaluates an attack and compares it with its bound: 2^-ell plus the
 * receiver advantage bound for OT attacks, cos^(2 lambda)(pi/8) for double
 * opening and (1/2 + 1/(2 sqrt 2))^lambda for the monogamy game. Exact
 * evaluation is used when requested and feasible, Monte Carlo otherwise.
 */
AttackRecord evaluate_attack(const std::string &id, std::size_t lambda, std::size_t ell,
                             bool exact, std::uint64_t trials, std::uint64_t seed);

} // namespace amnesia::adversary

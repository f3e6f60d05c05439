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

#include "amnesia/common/rng.hpp"
#include "amnesia/info/distribution.hpp"

#include "json.hpp"

namespace amnesia::cli {

/// Column order of every verification row, also the CSV header.
inline const std::vector<std::string> kVerifyColumns = {"suite", "check", "lambda", "ell",
                                                        "delta", "value", "bound", "holds"};

struct SuiteResult {
    std::string name;
    bool passed = true;
    nlohmann::json summary = nlohmann::json::object();
    nlohmann::json rows = nlohmann::json::array();
};

/// binding, moe, split, lhl.
std::vector<std::string> verify_suite_names();

/**
 * Double opening on one commitment: the Breidbart value, a 0.001 rad grid
 * search over projective strategies, and decay cos^(2 lambda)(pi/8) for
 * lambda = 1..6 checked against the joint evaluator.
 */
SuiteResult verify_binding(std::uint64_t seed);

/**
 * Monogamy game for lambda = 1..4 over grid, reduced, random-POVM and random
 * response strategies, the single-qubit optimum, and equality of the OT and
 * game evaluators on every built-in attack.
 */
SuiteResult verify_moe(std::uint64_t seed);

/// Min-entropy splitting on 200 random (X0, X1, Z) tables for delta in {1/4, 1/8}.
SuiteResult verify_split(std::uint64_t seed);

/// Leftover hash bound on 100 random (X, Y) tables with enumerated Toeplitz families.
SuiteResult verify_lhl(std::uint64_t seed);

/// Dispatches by name; throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string &name, std::uint64_t seed);

/// Random integer-weighted (X0, X1, Z) table; instance k alternates small and wide shapes.
info::JointDistribution random_split_instance(Rng &rng, std::size_t k);

struct LhlInstance {
    info::JointDistribution table;
    std::size_t max_input_len = 0;
    std::size_t ell = 0;
    double delta = 0.0;
};

/// Random (X, Y) table with X labels drawn from bit strings of length <= 2..6.
LhlInstance random_lhl_instance(Rng &rng, std::size_t k);

} // namespace amnesia::cli

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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "amnesia/adversary/ot_attack.hpp"
#include "amnesia/common/bits.hpp"
#include "amnesia/common/rng.hpp"
#include "amnesia/quantum/measurement.hpp"
#include "amnesia/quantum/register.hpp"

namespace amnesia::adversary {

using MoeResponse = std::function<BitString(std::span<const std::size_t> w, const BitString &theta)>;

/**
 * @brief Measure-and-copy strategy for the monogamy game.
 *
 * Bob and Charlie share the outcome w of measuring the D half of each
 * maximally entangled pair with per_qubit[i], and both answer response(w,
 * theta). The response must be deterministic.
 */
struct MoeStrategy {
    std::string id;
    std::vector<quantum::SingleQubitMeasurement> per_qubit;
    MoeResponse response;
};

/// (|00> + |11>)/sqrt 2 on pairs (i, pairs + i): A halves first, then D halves.
quantum::QuantumRegister maximally_entangled_state(std::size_t pairs);

/**
 * Winning probability from the collapsed form: Alice's basis-theta outcome x
 * leaves D in |x_theta>, so the value is
 * 4^-lambda sum over (theta, x, w) of Pr[w | x_theta] [response(w, theta) = x].
 * Requires lambda <= 8.
 */
double moe_game_value(const MoeStrategy &strategy, std::size_t lambda);

/**
 * The same value by simulating the 2*lambda-qubit entangled state and
 * measuring A in basis theta jointly with D. Requires lambda <= 4.
 */
double moe_game_value_entangled(const MoeStrategy &strategy, std::size_t lambda);

/// The Bob/Charlie strategy built from a memento OT attack; the response reassembles x by theta.
MoeStrategy reduce_ot_attack_to_moe(const MementoOtStrategy &attack, std::size_t lambda);

/// Same measurement on every qubit, answering the per-qubit maximum-likelihood guess.
MoeStrategy product_map_strategy(std::string id, const quantum::SingleQubitMeasurement &m,
                                 std::size_t lambda);

struct MoeSearchResult {
    double best = 0.0;
    double polar = 0.0;
    double azimuth = 0.0;
    std::size_t grid_points = 0;
};

/// Best single-qubit value over a grid of projective measurements with MAP answers.
MoeSearchResult moe_search_single(double step);

/// Random POVM with `outcomes` rank-one effects, labels "0", "1", ...
quantum::SingleQubitMeasurement random_povm(std::size_t outcomes, Rng &rng);

} // namespace amnesia::adversary

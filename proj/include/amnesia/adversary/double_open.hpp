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

#include "amnesia/quantum/measurement.hpp"

namespace amnesia::adversary {

/**
 * @brief Product strategy for opening one commitment both ways.
 *
 * The same measurement is applied to every qubit. Outcome labels are two
 * characters "st": s is the guess used when opening 0 (standard-basis
 * positions) and t the guess used when opening 1 (Hadamard positions).
 */
struct DoubleOpenStrategy {
    std::string id;
    quantum::SingleQubitMeasurement measurement;

    DoubleOpenStrategy(std::string id, quantum::SingleQubitMeasurement measurement);

    [[nodiscard]] std::uint8_t s(std::size_t outcome) const;
    [[nodiscard]] std::uint8_t t(std::size_t outcome) const;
};

/// Breidbart basis, guessing the outcome for both openings.
DoubleOpenStrategy breidbart_double_open();
/// Standard basis; s is the outcome and t is always 0.
DoubleOpenStrategy standard_double_open();

/// (1/4) sum over (a, theta) of Pr[the basis-relevant guess equals a] for one qubit.
double double_open_single_qubit(const DoubleOpenStrategy &strategy);

/**
 * Probability that both openings are accepted on a lambda-qubit commitment:
 * the single-qubit value raised to lambda.
 */
double double_open_success_exact(const DoubleOpenStrategy &strategy, std::size_t lambda);

/**
 * Same quantity from the joint lambda-qubit outcome distribution of every
 * BB84 state, without using independence. Requires lambda <= 6.
 */
double double_open_success_joint(const DoubleOpenStrategy &strategy, std::size_t lambda);

/// Sampled estimate from simulated commitments; returns the success frequency.
double double_open_success_sampled(const DoubleOpenStrategy &strategy, std::size_t lambda,
                                   std::uint64_t trials, std::uint64_t seed);

struct DoubleOpenSearchResult {
    double best = 0.0;
    double polar = 0.0;
    double azimuth = 0.0;
    /// s and t guess for outcomes 0 and 1 of the best projective measurement.
    std::uint8_t s0 = 0, t0 = 0, s1 = 0, t1 = 0;
    std::size_t grid_points = 0;

    [[nodiscard]] DoubleOpenStrategy strategy() const;
};

/**
 * Sweeps single-qubit projective measurements on a Bloch-sphere grid
 * (polar in [0, pi], azimuth in [0, 2 pi), both starting at 0 with spacing
 * `step`) and, for each, all 16 assignments of (s, t) guesses to the two
 * outcomes. Returns the best single-qubit success probability.
 */
DoubleOpenSearchResult double_open_search(double step);

} // namespace amnesia::adversary

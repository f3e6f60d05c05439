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
#include <utility>

#include "amnesia/adversary/ot_attack.hpp"

namespace amnesia::adversary {

/// Exhaustive evaluations stop above this many (theta, x, w, hash) combinations.
inline constexpr std::uint64_t kMaxExactAtoms = std::uint64_t{1} << 26;

/// Two-sided Clopper-Pearson interval for `successes` out of `trials`.
std::pair<double, double> clopper_pearson(std::uint64_t successes, std::uint64_t trials,
                                          double confidence = 0.95);

struct GuessEstimate {
    double value = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t trials = 0; ///< 0 in exact mode
    std::uint64_t successes = 0;
    bool exact = false;
};

/**
 * Pr[the x guess equals (x0, x1)] computed from the joint outcome
 * distribution of each simulated BB84 register.
 */
double ot_joint_x_guess_probability(const MementoOtStrategy &strategy, std::size_t lambda);

/**
 * Exact Pr[receiver guesses (m0, m1)] against an honest sender: enumerates
 * theta, x, the memento w and the hash seeds. Throws std::length_error past
 * kMaxExactAtoms or when the hash family cannot be enumerated.
 */
GuessEstimate ot_receiver_guess_exact(const MementoOtStrategy &strategy, std::size_t lambda,
                                      std::size_t ell);

/**
 * Monte Carlo estimate with a 95% Clopper-Pearson interval. Qubits are
 * sampled one at a time from their exact single-qubit outcome
 * probabilities (valid because states and measurements are products),
 * so lambda is not limited by the register size.
 */
GuessEstimate ot_receiver_guess_sampled(const MementoOtStrategy &strategy, std::size_t lambda,
                                        std::size_t ell, std::uint64_t trials,
                                        std::uint64_t seed);

} // namespace amnesia::adversary

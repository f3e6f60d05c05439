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
#include <span>

#include "amnesia/common/numeric.hpp"
#include "amnesia/info/distribution.hpp"

namespace amnesia::info {

/// Sum over rows of the largest entry: the optimal probability of guessing
/// the column from the row.
double guessing_probability(const ConditionalTable &t);
/// As above, exactly; requires a table built from an exact distribution.
Rational guessing_probability_exact(const ConditionalTable &t);

/**
 * @brief Conditional min-entropy H_min(target | cond) in bits.
 *
 * Computed as -log2 of the guessing probability. Axes in neither list are
 * marginalised. An empty `cond` gives the unconditional min-entropy.
 * Exact tables go through the rational guessing probability.
 */
double min_entropy_cond(const JointDistribution &d, std::span<const std::size_t> target,
                        std::span<const std::size_t> cond);

enum class SmoothingMethod {
    kAuto,          ///< linear program up to kLpAtomLimit support atoms, greedy above
    kLinearProgram, ///< reference solution
    kGreedy,        ///< water-filling over per-row caps
};

inline constexpr std::size_t kLpAtomLimit = 64;

/**
 * Smallest guessing probability over sub-normalised tables q with
 * 0 <= q <= p and total removed mass sum(p - q) <= delta.
 */
double smoothed_guessing_probability(const ConditionalTable &t, double delta,
                                     SmoothingMethod method = SmoothingMethod::kAuto);

/// Smooth conditional min-entropy H^delta_min(target | cond) in bits, 0 <= delta < 1.
double smooth_min_entropy_cond(const JointDistribution &d, std::span<const std::size_t> target,
                               std::span<const std::size_t> cond, double delta,
                               SmoothingMethod method = SmoothingMethod::kAuto);

} // namespace amnesia::info

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
#include <optional>
#include <span>
#include <vector>

#include "amnesia/info/distribution.hpp"

namespace amnesia::info {

/// Right-hand side alpha/2 - 1 - log2(1/delta) of the splitting guarantee.
double split_bound(double alpha, double delta);

struct SplitResult {
    double alpha = 0.0; ///< H_min(X0 X1 | Z)
    double delta = 0.0;
    /// C for every atom of the (X0, X1, Z) marginal, row-major with Z flattened last.
    std::vector<std::uint8_t> choice;
    double achieved = 0.0; ///< H^delta_min(X_{1-C} | Z, C) for the constructed C
    double bound = 0.0;
    bool holds = false;
    /// Best achievable value over every assignment of C to support atoms, when
    /// there are at most kMaxExhaustiveSplitAtoms of them.
    std::optional<double> exhaustive_best;
};

inline constexpr std::size_t kMaxExhaustiveSplitAtoms = 12;

/**
 * @brief Splits joint hardness of (X0, X1) given Z into hardness of one side.
 *
 * C is 0 exactly when p(x1 | z) <= 2^(-alpha/2) (ties to 0), i.e. when x1 is
 * unlikely enough to be the hard side. The resulting H^delta_min(X_{1-C} | Z, C)
 * is compared against split_bound(alpha, delta). Requires 0 < delta < 1.
 */
SplitResult min_entropy_split(const JointDistribution &d, std::size_t x0_axis,
                              std::size_t x1_axis, std::span<const std::size_t> cond_axes,
                              double delta);

/// H^delta_min(X_{1-C} | Z, C) for an arbitrary choice vector laid out as in SplitResult.
double split_entropy(const JointDistribution &d, std::size_t x0_axis, std::size_t x1_axis,
                     std::span<const std::size_t> cond_axes, std::span<const std::uint8_t> choice,
                     double delta);

} // namespace amnesia::info

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

#include "amnesia/common/numeric.hpp"
#include "amnesia/info/distribution.hpp"

namespace amnesia::info {

inline constexpr std::size_t kMaxLhlAlphabet = 1024;

struct LhlReport {
    double smooth_entropy = 0.0; ///< H^delta_min(X | Y)
    double lhs = 0.0;            ///< normalised distance, averaged over the family
    std::optional<Rational> lhs_exact;
    double lhs_l1 = 0.0; ///< unnormalised 1-norm, 2 * lhs
    double rhs = 0.0;
    bool holds = false;
    std::uint64_t family_size = 0;
};

/**
 * @brief Checks the leftover hash bound on a finite (X, Y) table.
 *
 * Labels of the X axis are read as bit strings of length at most
 * `max_input_len`. Enumerates every Toeplitz seed, builds the exact
 * distribution of (<h>, h(X), Y) and measures its distance from
 * (<h>, U_ell, Y). Exact tables yield an exact rational left-hand side.
 */
LhlReport lhl_verify(const JointDistribution &d, std::size_t x_axis,
                     std::span<const std::size_t> y_axes, std::size_t max_input_len,
                     std::size_t ell, double delta);

/// Distance of (h(X), Y) from (U_ell, Y) for one fixed seed of the packed family.
double lhl_seed_distance(const JointDistribution &d, std::size_t x_axis,
                         std::span<const std::size_t> y_axes, std::size_t max_input_len,
                         std::size_t ell, std::uint64_t seed);

} // namespace amnesia::info

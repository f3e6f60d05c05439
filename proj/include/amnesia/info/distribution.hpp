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
#include <string>
#include <string_view>
#include <vector>

namespace amnesia::info {

/// One random variable of a joint distribution: a name and its outcome labels.
struct Axis {
    std::string name;
    std::vector<std::string> labels;

    [[nodiscard]] std::size_t size() const noexcept { return labels.size(); }
    friend bool operator==(const Axis &, const Axis &) = default;
};

/// Tolerance on total mass for tables held in double precision.
inline constexpr double kMassTolerance = 1e-12;

/**
 * @brief Exact finite probability table over a tuple of discrete variables.
 *
 * Entries are stored densely in row-major order (the last axis varies
 * fastest). A table built with from_weights() is in exact mode: it also keeps
 * non-negative integer weights over their common denominator (their sum), and
 * the entropy and distance routines use those to produce exact rationals.
 */
class JointDistribution {
  public:
    JointDistribution(std::vector<Axis> axes, std::vector<double> probs);
    static JointDistribution from_weights(std::vector<Axis> axes,
                                          std::vector<std::uint64_t> weights);

    [[nodiscard]] const std::vector<Axis> &axes() const noexcept { return axes_; }
    [[nodiscard]] std::size_t rank() const noexcept { return axes_.size(); }
    [[nodiscard]] std::vector<std::size_t> shape() const;
    [[nodiscard]] std::size_t size() const noexcept { return probs_.size(); }
    [[nodiscard]] std::span<const double> probs() const noexcept { return probs_; }
    [[nodiscard]] double prob(std::size_t flat) const { return probs_.at(flat); }

    [[nodiscard]] bool is_exact() const noexcept { return weights_.has_value(); }
    /// Integer weights; only valid in exact mode.
    [[nodiscard]] std::span<const std::uint64_t> weights() const;
    [[nodiscard]] std::uint64_t denominator() const noexcept { return denominator_; }

    /// Index of the axis with the given name; throws if absent.
    [[nodiscard]] std::size_t axis(std::string_view name) const;
    [[nodiscard]] std::size_t flat_index(std::span<const std::size_t> coords) const;
    [[nodiscard]] std::vector<std::size_t> coords(std::size_t flat) const;
    /// Probability of the atom with the given labels, one per axis.
    [[nodiscard]] double prob_of(std::span<const std::string> labels) const;

    /// Marginal on the listed axes, in the listed order.
    [[nodiscard]] JointDistribution marginal(std::span<const std::size_t> keep) const;

    [[nodiscard]] std::size_t support_size() const;

  private:
    JointDistribution() = default;
    void validate_axes() const;

    std::vector<Axis> axes_;
    std::vector<double> probs_;
    std::optional<std::vector<std::uint64_t>> weights_;
    std::uint64_t denominator_ = 0;
};

/**
 * @brief p(x, z) arranged for conditional quantities.
 *
 * Row r is one joint value z of the conditioning axes, column c one joint
 * value x of the target axes. Axes in neither list are summed out. Mass may
 * be below one (smoothing removes mass).
 */
struct ConditionalTable {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;
    /// Integer weights over `denominator`, when built from an exact table.
    std::optional<std::vector<std::uint64_t>> weights;
    std::uint64_t denominator = 0;

    [[nodiscard]] double at(std::size_t row, std::size_t col) const {
        return values[row * cols + col];
    }
};

ConditionalTable conditional_table(const JointDistribution &d,
                                   std::span<const std::size_t> target,
                                   std::span<const std::size_t> cond);

} // namespace amnesia::info

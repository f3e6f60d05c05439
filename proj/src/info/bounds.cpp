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

#include "amnesia/info/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace amnesia::info {

namespace {

double log_four_minus_two_root_two() { return std::log2(4.0 - 2.0 * std::numbers::sqrt2); }

} // namespace

double breidbart_value() { return 0.5 + 1.0 / (2.0 * std::numbers::sqrt2); }

double binding_bound(std::size_t lambda) {
    const double c = std::cos(std::numbers::pi / 8.0);
    return std::pow(c * c, static_cast<double>(lambda));
}

double moe_bound(std::size_t lambda) {
    return std::pow(breidbart_value(), static_cast<double>(lambda));
}

double joint_min_entropy_bound(std::size_t lambda) {
    return static_cast<double>(lambda) * log_four_minus_two_root_two();
}

double smooth_entropy_bound(std::size_t lambda, double delta) {
    if (!(delta > 0.0) || delta >= 1.0) {
        throw std::invalid_argument("smooth_entropy_bound: delta must be in (0, 1)");
    }
    return static_cast<double>(lambda) / 2.0 * log_four_minus_two_root_two() - 1.0 -
           std::log2(1.0 / delta);
}

double lhl_rhs(double smooth_entropy, std::size_t ell, double delta) {
    return std::exp2(-0.5 * (smooth_entropy - static_cast<double>(ell))) + 2.0 * delta;
}

double hash_bound_instantiated(std::size_t lambda, std::size_t ell) {
    const double l = static_cast<double>(lambda);
    const double e = static_cast<double>(ell);
    return std::exp2(0.5 * (e - l / 2.0 * log_four_minus_two_root_two() + 1.0 + l / 20.0)) +
           std::exp2(-l / 20.0 + 1.0);
}

double receiver_advantage_bound(std::size_t lambda, std::size_t ell) {
    if (lambda == 0 || ell == 0) {
        throw std::invalid_argument(
            "receiver_advantage_bound: lambda and ell must be at least 1");
    }
    const double l = static_cast<double>(lambda);
    return 2.0 * (std::exp2(static_cast<double>(ell) - 0.0071 * l) + std::exp2(-l / 20.0));
}

} // namespace amnesia::info

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

#include "amnesia/info/distance.hpp"

#include <cmath>
#include <stdexcept>

namespace amnesia::info {

namespace {

void check_shapes(const JointDistribution &a, const JointDistribution &b) {
    if (a.shape() != b.shape()) {
        throw std::invalid_argument("statistical_distance: shape mismatch");
    }
}

} // namespace

double l1_distance(const JointDistribution &a, const JointDistribution &b) {
    check_shapes(a, b);
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += std::abs(a.prob(i) - b.prob(i));
    }
    return total;
}

double statistical_distance(const JointDistribution &a, const JointDistribution &b) {
    return 0.5 * l1_distance(a, b);
}

Rational statistical_distance_exact(const JointDistribution &a, const JointDistribution &b) {
    check_shapes(a, b);
    if (!a.is_exact() || !b.is_exact()) {
        throw std::logic_error("statistical_distance_exact: both tables must be exact");
    }
    using boost::multiprecision::cpp_int;
    const auto wa = a.weights();
    const auto wb = b.weights();
    const cpp_int da = a.denominator();
    const cpp_int db = b.denominator();
    cpp_int total = 0;
    for (std::size_t i = 0; i < wa.size(); ++i) {
        cpp_int diff = cpp_int(wa[i]) * db - cpp_int(wb[i]) * da;
        total += diff < 0 ? cpp_int(-diff) : diff;
    }
    return Rational(total, 2 * da * db);
}

} // namespace amnesia::info

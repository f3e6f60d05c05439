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
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace amnesia {

/// Exact probabilities and counts.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational &r) { return r.convert_to<double>(); }

/// Number of worker threads used by parallel_for (at least 1).
std::size_t worker_count();

/**
 * Runs body(i) for i in [0, count) on a pool of worker threads. Items are
 * claimed from a shared counter; callers write results into per-index slots
 * and reduce them afterwards in index order, so the outcome does not depend on
 * scheduling.
 */
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body);

template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, Fn &&fn) {
    std::vector<T> out(count);
    parallel_for(count, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

} // namespace amnesia

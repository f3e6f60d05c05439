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
#include <vector>

namespace amnesia::info {

/**
 * maximize  objective . x
 * subject to  rows[i] . x <= rhs[i],  x >= 0,
 * with every rhs[i] >= 0 so the origin is a feasible starting vertex.
 */
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<double> objective;
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
};

struct LpSolution {
    double value = 0.0;
    std::vector<double> x;
};

/// Dense tableau simplex with Bland's rule. Throws if the program is unbounded.
LpSolution maximize(const LinearProgram &lp);

} // namespace amnesia::info

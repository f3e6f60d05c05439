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

#include "amnesia/info/simplex.hpp"

#include <limits>
#include <stdexcept>

namespace amnesia::info {

namespace {
constexpr double kPivotEps = 1e-12;
}

LpSolution maximize(const LinearProgram &lp) {
    const std::size_t n = lp.num_vars;
    const std::size_t m = lp.rows.size();
    if (lp.objective.size() != n || lp.rhs.size() != m) {
        throw std::invalid_argument("simplex: inconsistent program dimensions");
    }
    const std::size_t width = n + m + 1;
    // Rows 0..m-1 are constraints with slack columns n..n+m-1, row m is the
    // objective written as z - c.x = 0. The last column is the right-hand side.
    std::vector<double> tab((m + 1) * width, 0.0);
    auto at = [&](std::size_t r, std::size_t c) -> double & { return tab[r * width + c]; };
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (lp.rows[i].size() != n) {
            throw std::invalid_argument("simplex: row has wrong length");
        }
        if (lp.rhs[i] < 0.0) {
            throw std::invalid_argument("simplex: right-hand sides must be non-negative");
        }
        for (std::size_t j = 0; j < n; ++j) {
            at(i, j) = lp.rows[i][j];
        }
        at(i, n + i) = 1.0;
        at(i, width - 1) = lp.rhs[i];
        basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j) {
        at(m, j) = -lp.objective[j];
    }

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j) {
            if (at(m, j) < -kPivotEps) {
                enter = j;
                break;
            }
        }
        if (enter == width) {
            break;
        }
        std::size_t leave = m;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            const double a = at(i, enter);
            if (a > kPivotEps) {
                const double ratio = at(i, width - 1) / a;
                if (ratio < best - kPivotEps ||
                    (ratio <= best + kPivotEps && leave < m && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
        }
        if (leave == m) {
            throw std::runtime_error("simplex: program is unbounded");
        }
        const double pivot = at(leave, enter);
        for (std::size_t j = 0; j < width; ++j) {
            at(leave, j) /= pivot;
        }
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave) {
                continue;
            }
            const double f = at(i, enter);
            if (f == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < width; ++j) {
                at(i, j) -= f * at(leave, j);
            }
        }
        basis[leave] = enter;
    }

    LpSolution sol;
    sol.value = at(m, width - 1);
    sol.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) {
            sol.x[basis[i]] = at(i, width - 1);
        }
    }
    return sol;
}

} // namespace amnesia::info

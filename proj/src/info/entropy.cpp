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

#include "amnesia/info/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "amnesia/info/simplex.hpp"

namespace amnesia::info {

namespace {

double bits_from_guess(double guess) {
    if (guess <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return -std::log2(guess);
}

void check_delta(double delta) {
    if (!(delta >= 0.0) || delta >= 1.0) {
        throw std::invalid_argument("smoothing parameter must satisfy 0 <= delta < 1");
    }
}

double greedy_guess(const ConditionalTable &t, double delta) {
    struct Piece {
        std::size_t rate;
        double length;
    };
    std::vector<Piece> pieces;
    double base = 0.0;
    std::vector<double> column;
    for (std::size_t r = 0; r < t.rows; ++r) {
        column.clear();
        for (std::size_t c = 0; c < t.cols; ++c) {
            if (t.at(r, c) > 0.0) {
                column.push_back(t.at(r, c));
            }
        }
        if (column.empty()) {
            continue;
        }
        std::sort(column.begin(), column.end(), std::greater<>());
        base += column.front();
        column.push_back(0.0);
        // Lowering the row's cap from column[j] to column[j+1] removes
        // (j+1) units of mass per unit of guessing probability.
        for (std::size_t j = 0; j + 1 < column.size(); ++j) {
            const double len = column[j] - column[j + 1];
            if (len > 0.0) {
                pieces.push_back({j + 1, len});
            }
        }
    }
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const Piece &a, const Piece &b) { return a.rate < b.rate; });
    double budget = delta;
    double reduced = 0.0;
    for (const auto &p : pieces) {
        const double cost = static_cast<double>(p.rate) * p.length;
        if (cost <= budget) {
            budget -= cost;
            reduced += p.length;
        } else {
            reduced += budget / static_cast<double>(p.rate);
            break;
        }
    }
    return std::max(0.0, base - reduced);
}

double lp_guess(const ConditionalTable &t, double delta) {
    // Variables: removed mass r_a per support atom, then s_z = (row max) - cap
    // per non-empty row. Maximise total cap reduction.
    struct Atom {
        std::size_t row;
        double p;
    };
    std::vector<Atom> atoms;
    std::vector<std::size_t> row_var(t.rows, t.rows);
    std::vector<double> row_max(t.rows, 0.0);
    std::size_t rows_used = 0;
    for (std::size_t r = 0; r < t.rows; ++r) {
        for (std::size_t c = 0; c < t.cols; ++c) {
            if (t.at(r, c) > 0.0) {
                atoms.push_back({r, t.at(r, c)});
                row_max[r] = std::max(row_max[r], t.at(r, c));
            }
        }
        if (row_max[r] > 0.0) {
            row_var[r] = rows_used++;
        }
    }
    const std::size_t na = atoms.size();
    LinearProgram lp;
    lp.num_vars = na + rows_used;
    lp.objective.assign(lp.num_vars, 0.0);
    for (std::size_t z = 0; z < rows_used; ++z) {
        lp.objective[na + z] = 1.0;
    }
    for (std::size_t a = 0; a < na; ++a) {
        std::vector<double> row(lp.num_vars, 0.0);
        row[a] = 1.0;
        lp.rows.push_back(row);
        lp.rhs.push_back(atoms[a].p);

        row[a] = -1.0;
        row[na + row_var[atoms[a].row]] = 1.0;
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(row_max[atoms[a].row] - atoms[a].p);
    }
    std::vector<double> budget(lp.num_vars, 0.0);
    std::fill(budget.begin(), budget.begin() + static_cast<std::ptrdiff_t>(na), 1.0);
    lp.rows.push_back(std::move(budget));
    lp.rhs.push_back(delta);

    double base = 0.0;
    for (double m : row_max) {
        base += m;
    }
    const auto sol = maximize(lp);
    return std::max(0.0, base - sol.value);
}

} // namespace

double guessing_probability(const ConditionalTable &t) {
    double total = 0.0;
    for (std::size_t r = 0; r < t.rows; ++r) {
        double best = 0.0;
        for (std::size_t c = 0; c < t.cols; ++c) {
            best = std::max(best, t.at(r, c));
        }
        total += best;
    }
    return total;
}

Rational guessing_probability_exact(const ConditionalTable &t) {
    if (!t.weights) {
        throw std::logic_error("guessing_probability_exact: table is not exact");
    }
    boost::multiprecision::cpp_int total = 0;
    for (std::size_t r = 0; r < t.rows; ++r) {
        std::uint64_t best = 0;
        for (std::size_t c = 0; c < t.cols; ++c) {
            best = std::max(best, (*t.weights)[r * t.cols + c]);
        }
        total += best;
    }
    return Rational(total, boost::multiprecision::cpp_int(t.denominator));
}

double min_entropy_cond(const JointDistribution &d, std::span<const std::size_t> target,
                        std::span<const std::size_t> cond) {
    const auto t = conditional_table(d, target, cond);
    if (t.weights) {
        return bits_from_guess(to_double(guessing_probability_exact(t)));
    }
    return bits_from_guess(guessing_probability(t));
}

double smoothed_guessing_probability(const ConditionalTable &t, double delta,
                                     SmoothingMethod method) {
    check_delta(delta);
    if (delta == 0.0) {
        return t.weights ? to_double(guessing_probability_exact(t)) : guessing_probability(t);
    }
    if (method == SmoothingMethod::kAuto) {
        std::size_t support = 0;
        for (double v : t.values) {
            support += v > 0.0 ? 1 : 0;
        }
        method = support <= kLpAtomLimit ? SmoothingMethod::kLinearProgram
                                         : SmoothingMethod::kGreedy;
    }
    return method == SmoothingMethod::kGreedy ? greedy_guess(t, delta) : lp_guess(t, delta);
}

double smooth_min_entropy_cond(const JointDistribution &d, std::span<const std::size_t> target,
                               std::span<const std::size_t> cond, double delta,
                               SmoothingMethod method) {
    check_delta(delta);
    if (delta == 0.0) {
        return min_entropy_cond(d, target, cond);
    }
    return bits_from_guess(
        smoothed_guessing_probability(conditional_table(d, target, cond), delta, method));
}

} // namespace amnesia::info

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

#include "amnesia/info/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "amnesia/info/entropy.hpp"

namespace amnesia::info {

namespace {

struct SplitLayout {
    ConditionalTable joint; // rows = z, cols = x0 * n1 + x1
    std::size_t n0 = 0;
    std::size_t n1 = 0;
};

SplitLayout layout(const JointDistribution &d, std::size_t x0_axis, std::size_t x1_axis,
                   std::span<const std::size_t> cond_axes) {
    const std::size_t target[] = {x0_axis, x1_axis};
    SplitLayout l;
    l.joint = conditional_table(d, target, cond_axes);
    l.n0 = d.axes().at(x0_axis).size();
    l.n1 = d.axes().at(x1_axis).size();
    return l;
}

// Atom (x0, x1, z) of the choice vector.
std::size_t atom_index(const SplitLayout &l, std::size_t x0, std::size_t x1, std::size_t z) {
    return (x0 * l.n1 + x1) * l.joint.rows + z;
}

// Table of X_{1-C} given (Z, C): row 2z + c; columns index x1 when c = 0 and
// x0 when c = 1.
ConditionalTable derived_table(const SplitLayout &l, std::span<const std::uint8_t> choice) {
    ConditionalTable t;
    t.rows = 2 * l.joint.rows;
    t.cols = std::max(l.n0, l.n1);
    t.values.assign(t.rows * t.cols, 0.0);
    for (std::size_t z = 0; z < l.joint.rows; ++z) {
        for (std::size_t x0 = 0; x0 < l.n0; ++x0) {
            for (std::size_t x1 = 0; x1 < l.n1; ++x1) {
                const double p = l.joint.at(z, x0 * l.n1 + x1);
                if (p == 0.0) {
                    continue;
                }
                const auto c = choice[atom_index(l, x0, x1, z)];
                const std::size_t col = c == 0 ? x1 : x0;
                t.values[(2 * z + c) * t.cols + col] += p;
            }
        }
    }
    return t;
}

double entropy_of(const ConditionalTable &t, double delta, SmoothingMethod method) {
    const double g = smoothed_guessing_probability(t, delta, method);
    return g <= 0.0 ? std::numeric_limits<double>::infinity() : -std::log2(g);
}

} // namespace

double split_bound(double alpha, double delta) {
    if (!(delta > 0.0) || delta > 1.0) {
        throw std::invalid_argument("split_bound: delta must be in (0, 1]");
    }
    return alpha / 2.0 - 1.0 - std::log2(1.0 / delta);
}

double split_entropy(const JointDistribution &d, std::size_t x0_axis, std::size_t x1_axis,
                     std::span<const std::size_t> cond_axes, std::span<const std::uint8_t> choice,
                     double delta) {
    const auto l = layout(d, x0_axis, x1_axis, cond_axes);
    if (choice.size() != l.n0 * l.n1 * l.joint.rows) {
        throw std::invalid_argument("split_entropy: choice vector has wrong size");
    }
    return entropy_of(derived_table(l, choice), delta, SmoothingMethod::kAuto);
}

SplitResult min_entropy_split(const JointDistribution &d, std::size_t x0_axis,
                              std::size_t x1_axis, std::span<const std::size_t> cond_axes,
                              double delta) {
    if (!(delta > 0.0) || delta >= 1.0) {
        throw std::invalid_argument("min_entropy_split: delta must be in (0, 1)");
    }
    const auto l = layout(d, x0_axis, x1_axis, cond_axes);
    const std::size_t nz = l.joint.rows;

    SplitResult res;
    res.delta = delta;
    res.choice.assign(l.n0 * l.n1 * nz, 0);

    // Threshold p(x1|z) <= 2^(-alpha/2), i.e. p(x1,z)^2 <= guess * p(z)^2 where
    // guess = 2^-alpha. Exact tables compare in rationals so ties are exact.
    if (l.joint.weights) {
        const auto &w = *l.joint.weights;
        const auto guess = guessing_probability_exact(l.joint);
        res.alpha = -std::log2(to_double(guess));
        for (std::size_t z = 0; z < nz; ++z) {
            boost::multiprecision::cpp_int pz = 0;
            for (std::size_t c = 0; c < l.joint.cols; ++c) {
                pz += w[z * l.joint.cols + c];
            }
            if (pz == 0) {
                continue;
            }
            for (std::size_t x1 = 0; x1 < l.n1; ++x1) {
                boost::multiprecision::cpp_int px1z = 0;
                for (std::size_t x0 = 0; x0 < l.n0; ++x0) {
                    px1z += w[z * l.joint.cols + x0 * l.n1 + x1];
                }
                const Rational cond(px1z, pz);
                const std::uint8_t c = cond * cond <= guess ? 0 : 1;
                for (std::size_t x0 = 0; x0 < l.n0; ++x0) {
                    res.choice[atom_index(l, x0, x1, z)] = c;
                }
            }
        }
    } else {
        const double guess = guessing_probability(l.joint);
        res.alpha = -std::log2(guess);
        const double threshold = std::sqrt(guess);
        for (std::size_t z = 0; z < nz; ++z) {
            double pz = 0.0;
            for (std::size_t c = 0; c < l.joint.cols; ++c) {
                pz += l.joint.at(z, c);
            }
            if (pz == 0.0) {
                continue;
            }
            for (std::size_t x1 = 0; x1 < l.n1; ++x1) {
                double px1z = 0.0;
                for (std::size_t x0 = 0; x0 < l.n0; ++x0) {
                    px1z += l.joint.at(z, x0 * l.n1 + x1);
                }
                const std::uint8_t c = px1z / pz <= threshold ? 0 : 1;
                for (std::size_t x0 = 0; x0 < l.n0; ++x0) {
                    res.choice[atom_index(l, x0, x1, z)] = c;
                }
            }
        }
    }

    res.achieved = entropy_of(derived_table(l, res.choice), delta, SmoothingMethod::kAuto);
    res.bound = split_bound(res.alpha, delta);
    res.holds = res.achieved >= res.bound - 1e-9;

    std::vector<std::size_t> support;
    for (std::size_t z = 0; z < nz; ++z) {
        for (std::size_t x0 = 0; x0 < l.n0; ++x0) {
            for (std::size_t x1 = 0; x1 < l.n1; ++x1) {
                if (l.joint.at(z, x0 * l.n1 + x1) > 0.0) {
                    support.push_back(atom_index(l, x0, x1, z));
                }
            }
        }
    }
    if (support.size() <= kMaxExhaustiveSplitAtoms) {
        std::vector<std::uint8_t> trial(res.choice.size(), 0);
        double best = -std::numeric_limits<double>::infinity();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << support.size()); ++mask) {
            for (std::size_t k = 0; k < support.size(); ++k) {
                trial[support[k]] = static_cast<std::uint8_t>((mask >> k) & 1U);
            }
            best = std::max(best,
                            entropy_of(derived_table(l, trial), delta, SmoothingMethod::kGreedy));
        }
        res.exhaustive_best = best;
    }
    return res;
}

} // namespace amnesia::info

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

#include "amnesia/info/lhl.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "amnesia/hashing/toeplitz.hpp"
#include "amnesia/info/bounds.hpp"
#include "amnesia/info/entropy.hpp"

namespace amnesia::info {

namespace {

__extension__ using Wide = unsigned __int128;

struct Prepared {
    ConditionalTable table; // rows = y, cols = x
    std::vector<std::uint64_t> inputs;
    hashing::PackedFamily family;
};

Prepared prepare(const JointDistribution &d, std::size_t x_axis,
                 std::span<const std::size_t> y_axes, std::size_t max_input_len,
                 std::size_t ell) {
    const auto &labels = d.axes().at(x_axis).labels;
    if (labels.size() > kMaxLhlAlphabet) {
        throw std::length_error("lhl_verify: X alphabet exceeds 1024 symbols");
    }
    hashing::PackedFamily family(max_input_len, ell);
    if (family.seed_bits() > hashing::kMaxEnumerableSeedBits) {
        throw std::length_error("lhl_verify: hash family too large to enumerate");
    }
    std::vector<std::uint64_t> inputs;
    inputs.reserve(labels.size());
    for (const auto &label : labels) {
        inputs.push_back(family.pack_input(BitString::from_string(label)));
    }
    const std::size_t target[] = {x_axis};
    return Prepared{conditional_table(d, target, y_axes), std::move(inputs), family};
}

// Sum over (m, y) of |2^ell * W(m, y) - W(y)| in table units for one seed.
template <typename Acc, typename Weight>
Acc seed_deviation(const Prepared &p, std::span<const Weight> w, std::size_t ell,
                   std::uint64_t seed, std::vector<Acc> &buckets) {
    const std::size_t outputs = std::size_t{1} << ell;
    buckets.assign(outputs * p.table.rows, Acc(0));
    std::vector<Acc> row_mass(p.table.rows, Acc(0));
    for (std::size_t x = 0; x < p.table.cols; ++x) {
        const auto m = static_cast<std::size_t>(p.family.eval(seed, p.inputs[x]));
        for (std::size_t y = 0; y < p.table.rows; ++y) {
            const Acc v = static_cast<Acc>(w[y * p.table.cols + x]);
            buckets[m * p.table.rows + y] += v;
            row_mass[y] += v;
        }
    }
    Acc total(0);
    for (std::size_t m = 0; m < outputs; ++m) {
        for (std::size_t y = 0; y < p.table.rows; ++y) {
            const Acc scaled = static_cast<Acc>(outputs) * buckets[m * p.table.rows + y];
            total += scaled >= row_mass[y] ? scaled - row_mass[y] : row_mass[y] - scaled;
        }
    }
    return total;
}

} // namespace

LhlReport lhl_verify(const JointDistribution &d, std::size_t x_axis,
                     std::span<const std::size_t> y_axes, std::size_t max_input_len,
                     std::size_t ell, double delta) {
    if (ell == 0 || ell > 16) {
        throw std::invalid_argument("lhl_verify: ell must be in [1, 16]");
    }
    const auto p = prepare(d, x_axis, y_axes, max_input_len, ell);
    const std::uint64_t seeds = p.family.seed_count();
    const double outputs = std::exp2(static_cast<double>(ell));

    LhlReport report;
    report.family_size = seeds;
    const std::size_t target[] = {x_axis};
    report.smooth_entropy = delta == 0.0 ? min_entropy_cond(d, target, y_axes)
                                         : smooth_min_entropy_cond(d, target, y_axes, delta);

    if (p.table.weights) {
        const std::span<const std::uint64_t> w(*p.table.weights);
        const auto per_seed = parallel_map<Wide>(seeds, [&](std::size_t s) {
            std::vector<Wide> buckets;
            return seed_deviation<Wide>(p, w, ell, s, buckets);
        });
        boost::multiprecision::cpp_int total = 0;
        for (Wide v : per_seed) {
            const auto hi = static_cast<std::uint64_t>(v >> 64);
            const auto lo = static_cast<std::uint64_t>(v);
            total += (boost::multiprecision::cpp_int(hi) << 64) + lo;
        }
        const boost::multiprecision::cpp_int denom =
            boost::multiprecision::cpp_int(2) * seeds * p.table.denominator *
            (std::uint64_t{1} << ell);
        report.lhs_exact = Rational(total, denom);
        report.lhs = to_double(*report.lhs_exact);
    } else {
        const std::span<const double> w(p.table.values);
        const auto per_seed = parallel_map<double>(seeds, [&](std::size_t s) {
            std::vector<double> buckets;
            return seed_deviation<double>(p, w, ell, s, buckets);
        });
        double total = 0.0;
        for (double v : per_seed) {
            total += v;
        }
        report.lhs = total / (2.0 * static_cast<double>(seeds) * outputs);
    }
    report.lhs_l1 = 2.0 * report.lhs;
    report.rhs = lhl_rhs(report.smooth_entropy, ell, delta);
    report.holds = report.lhs <= report.rhs + 1e-9;
    return report;
}

double lhl_seed_distance(const JointDistribution &d, std::size_t x_axis,
                         std::span<const std::size_t> y_axes, std::size_t max_input_len,
                         std::size_t ell, std::uint64_t seed) {
    const auto p = prepare(d, x_axis, y_axes, max_input_len, ell);
    if (seed >= p.family.seed_count()) {
        throw std::out_of_range("lhl_seed_distance: seed out of range");
    }
    std::vector<double> buckets;
    const double dev =
        seed_deviation<double>(p, std::span<const double>(p.table.values), ell, seed, buckets);
    return dev / (2.0 * std::exp2(static_cast<double>(ell)));
}

} // namespace amnesia::info

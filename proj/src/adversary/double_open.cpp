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

#include "amnesia/adversary/double_open.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "amnesia/common/numeric.hpp"
#include "amnesia/common/rng.hpp"
#include "amnesia/quantum/register.hpp"

namespace amnesia::adversary {

namespace {

constexpr double kJointWorkLimit = 1073741824.0; // 2^30

bool relevant_guess_matches(const DoubleOpenStrategy &st, std::size_t outcome, std::uint8_t a,
                            std::uint8_t theta) {
    const auto guess = theta == 0 ? st.s(outcome) : st.t(outcome);
    return guess == a;
}

} // namespace

DoubleOpenStrategy::DoubleOpenStrategy(std::string id_, quantum::SingleQubitMeasurement m)
    : id(std::move(id_)), measurement(std::move(m)) {
    for (const auto &label : measurement.labels()) {
        if (label.size() != 2 || (label[0] != '0' && label[0] != '1') ||
            (label[1] != '0' && label[1] != '1')) {
            throw std::invalid_argument("double-open outcome labels must be 00, 01, 10 or 11");
        }
    }
}

std::uint8_t DoubleOpenStrategy::s(std::size_t outcome) const {
    return static_cast<std::uint8_t>(measurement.label(outcome)[0] - '0');
}

std::uint8_t DoubleOpenStrategy::t(std::size_t outcome) const {
    return static_cast<std::uint8_t>(measurement.label(outcome)[1] - '0');
}

DoubleOpenStrategy breidbart_double_open() {
    return {"breidbart", quantum::SingleQubitMeasurement::breidbart().relabel({"00", "11"})};
}

DoubleOpenStrategy standard_double_open() {
    return {"standard-basis", quantum::SingleQubitMeasurement::standard().relabel({"00", "10"})};
}

double double_open_single_qubit(const DoubleOpenStrategy &strategy) {
    const std::vector<quantum::SingleQubitMeasurement> per_qubit{strategy.measurement};
    double total = 0.0;
    for (std::uint8_t theta = 0; theta < 2; ++theta) {
        for (std::uint8_t a = 0; a < 2; ++a) {
            const auto reg = quantum::prepare_bb84({BitString(1, a), BitString(1, theta)});
            const auto dist = quantum::outcome_distribution(reg, per_qubit);
            for (std::size_t k = 0; k < dist.size(); ++k) {
                if (relevant_guess_matches(strategy, k, a, theta)) {
                    total += dist.prob(k);
                }
            }
        }
    }
    return total / 4.0;
}

double double_open_success_exact(const DoubleOpenStrategy &strategy, std::size_t lambda) {
    if (lambda == 0) {
        throw std::invalid_argument("double_open_success_exact: lambda must be positive");
    }
    return std::pow(double_open_single_qubit(strategy), static_cast<double>(lambda));
}

double double_open_success_joint(const DoubleOpenStrategy &strategy, std::size_t lambda) {
    if (lambda == 0 || lambda > 6) {
        throw std::invalid_argument("double_open_success_joint: lambda must be in [1, 6]");
    }
    const double k = static_cast<double>(strategy.measurement.size());
    const double work = std::pow(4.0 * k * 2.0, static_cast<double>(lambda));
    if (work > kJointWorkLimit) {
        throw std::length_error("double_open_success_joint: evaluation too large");
    }
    const std::vector<quantum::SingleQubitMeasurement> per_qubit(lambda, strategy.measurement);
    const std::uint64_t secrets = std::uint64_t{1} << (2 * lambda);
    const auto per_secret = parallel_map<double>(secrets, [&](std::size_t idx) {
        const auto a = BitString::from_uint(idx >> lambda, lambda);
        const auto theta = BitString::from_uint(idx & ((std::uint64_t{1} << lambda) - 1), lambda);
        const auto reg = quantum::prepare_bb84({a, theta});
        const auto dist = quantum::outcome_distribution(reg, per_qubit);
        double p = 0.0;
        for (std::size_t flat = 0; flat < dist.size(); ++flat) {
            if (dist.prob(flat) == 0.0) {
                continue;
            }
            const auto w = dist.coords(flat);
            bool ok = true;
            for (std::size_t i = 0; i < lambda && ok; ++i) {
                ok = relevant_guess_matches(strategy, w[i], a[i], theta[i]);
            }
            if (ok) {
                p += dist.prob(flat);
            }
        }
        return p;
    });
    double total = 0.0;
    for (double p : per_secret) {
        total += p;
    }
    return total / static_cast<double>(secrets);
}

double double_open_success_sampled(const DoubleOpenStrategy &strategy, std::size_t lambda,
                                   std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) {
        throw std::invalid_argument("double_open_success_sampled: trials must be positive");
    }
    const std::vector<quantum::SingleQubitMeasurement> per_qubit(lambda, strategy.measurement);
    const auto hits = parallel_map<std::uint8_t>(trials, [&](std::size_t trial) {
        Rng rng = Rng::for_trial(seed, 0x646f, trial);
        quantum::BB84Secret secret{rng.bits(lambda), rng.bits(lambda)};
        auto reg = quantum::prepare_bb84(secret);
        const auto w = quantum::measure_product_povm_indices(reg, per_qubit, rng);
        for (std::size_t i = 0; i < lambda; ++i) {
            if (!relevant_guess_matches(strategy, w[i], secret.a[i], secret.theta[i])) {
                return std::uint8_t{0};
            }
        }
        return std::uint8_t{1};
    });
    std::uint64_t count = 0;
    for (auto h : hits) {
        count += h;
    }
    return static_cast<double>(count) / static_cast<double>(trials);
}

DoubleOpenStrategy DoubleOpenSearchResult::strategy() const {
    const std::string l0{static_cast<char>('0' + s0), static_cast<char>('0' + t0)};
    const std::string l1{static_cast<char>('0' + s1), static_cast<char>('0' + t1)};
    auto m = quantum::SingleQubitMeasurement::projective(polar, azimuth);
    return {"grid-search", m.relabel({l0, l1})};
}

DoubleOpenSearchResult double_open_search(double step) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("double_open_search: grid step must be positive");
    }
    const double pi = std::numbers::pi;
    std::vector<double> polars;
    for (std::size_t i = 0; static_cast<double>(i) * step <= pi + 1e-12; ++i) {
        polars.push_back(std::min(pi, static_cast<double>(i) * step));
    }
    std::vector<double> azimuths;
    std::vector<double> cos_az;
    for (std::size_t j = 0; static_cast<double>(j) * step < 2.0 * pi; ++j) {
        azimuths.push_back(static_cast<double>(j) * step);
        cos_az.push_back(std::cos(azimuths.back()));
    }

    struct RowBest {
        double value = -1.0;
        std::size_t az = 0;
        std::uint8_t assignment = 0;
    };
    const auto rows = parallel_map<RowBest>(polars.size(), [&](std::size_t i) {
        const double c = std::cos(polars[i] / 2.0);
        const double s = std::sin(polars[i] / 2.0);
        const double sp = std::sin(polars[i]);
        // Probability of outcome 0 for |0>, |1>; outcome 1 is the complement.
        const double p0_zero = c * c;
        const double p0_one = s * s;
        RowBest best;
        for (std::size_t j = 0; j < azimuths.size(); ++j) {
            const double p0_plus = 0.5 * (1.0 + sp * cos_az[j]);
            const double p0_minus = 0.5 * (1.0 - sp * cos_az[j]);
            // prob[theta][a][k]
            const double prob[2][2][2] = {{{p0_zero, 1.0 - p0_zero}, {p0_one, 1.0 - p0_one}},
                                          {{p0_plus, 1.0 - p0_plus}, {p0_minus, 1.0 - p0_minus}}};
            for (std::uint8_t assign = 0; assign < 16; ++assign) {
                // bits from high to low: s0, s1, t0, t1
                const std::uint8_t guess[2][2] = {
                    {static_cast<std::uint8_t>((assign >> 3) & 1U),
                     static_cast<std::uint8_t>((assign >> 2) & 1U)},
                    {static_cast<std::uint8_t>((assign >> 1) & 1U),
                     static_cast<std::uint8_t>(assign & 1U)}};
                double v = 0.0;
                for (std::size_t theta = 0; theta < 2; ++theta) {
                    for (std::size_t k = 0; k < 2; ++k) {
                        v += prob[theta][guess[theta][k]][k];
                    }
                }
                v /= 4.0;
                if (v > best.value) {
                    best = {v, j, assign};
                }
            }
        }
        return best;
    });

    DoubleOpenSearchResult result;
    result.grid_points = polars.size() * azimuths.size();
    result.best = -1.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].value > result.best) {
            result.best = rows[i].value;
            result.polar = polars[i];
            result.azimuth = azimuths[rows[i].az];
            const auto a = rows[i].assignment;
            result.s0 = (a >> 3) & 1U;
            result.t0 = (a >> 1) & 1U;
            result.s1 = (a >> 2) & 1U;
            result.t1 = a & 1U;
        }
    }
    return result;
}

} // namespace amnesia::adversary

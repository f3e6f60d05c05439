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

#include "amnesia/adversary/moe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "amnesia/common/numeric.hpp"

namespace amnesia::adversary {

namespace {

constexpr std::size_t kMaxCollapsedLambda = 8;
constexpr std::size_t kMaxEntangledLambda = 4;

// prob[i][k][x][theta] = Pr[outcome k of measurement i | |x_theta>].
using ProbTable = std::vector<std::vector<std::array<std::array<double, 2>, 2>>>;

ProbTable probability_table(const std::vector<quantum::SingleQubitMeasurement> &per_qubit) {
    const double r = 1.0 / std::numbers::sqrt2;
    const quantum::Complex states[2][2][2] = {{{1.0, 0.0}, {r, r}}, {{0.0, 1.0}, {r, -r}}};
    ProbTable table(per_qubit.size());
    for (std::size_t i = 0; i < per_qubit.size(); ++i) {
        table[i].resize(per_qubit[i].size());
        for (std::size_t k = 0; k < per_qubit[i].size(); ++k) {
            for (std::size_t x = 0; x < 2; ++x) {
                for (std::size_t th = 0; th < 2; ++th) {
                    table[i][k][x][th] =
                        per_qubit[i].probability(k, states[x][th][0], states[x][th][1]);
                }
            }
        }
    }
    return table;
}

void check_strategy(const MoeStrategy &s, std::size_t lambda) {
    if (lambda == 0) {
        throw std::invalid_argument("monogamy game: lambda must be positive");
    }
    if (s.per_qubit.size() != lambda) {
        throw std::invalid_argument("monogamy game: one measurement per qubit required");
    }
    if (!s.response) {
        throw std::invalid_argument("monogamy game: strategy has no response function");
    }
}

BitString respond(const MoeStrategy &s, std::span<const std::size_t> w, const BitString &theta) {
    auto y = s.response(w, theta);
    if (y != s.response(w, theta)) {
        throw std::invalid_argument("monogamy game: response of '" + s.id +
                                    "' is not deterministic, so Bob and Charlie could differ");
    }
    if (y.size() != theta.size()) {
        throw std::invalid_argument("monogamy game: response has wrong length");
    }
    return y;
}

// Advances a mixed-radix counter; false once it wraps around.
bool next_memento(std::vector<std::size_t> &w, const std::vector<quantum::SingleQubitMeasurement> &m) {
    for (std::size_t i = w.size(); i-- > 0;) {
        if (++w[i] < m[i].size()) {
            return true;
        }
        w[i] = 0;
    }
    return false;
}

} // namespace

quantum::QuantumRegister maximally_entangled_state(std::size_t pairs) {
    if (pairs == 0 || 2 * pairs > quantum::kMaxQubits) {
        throw std::invalid_argument("maximally_entangled_state: pairs must be in [1, 12]");
    }
    const std::size_t n = 2 * pairs;
    std::vector<quantum::Complex> amps(std::size_t{1} << n);
    const double a = 1.0 / std::sqrt(static_cast<double>(std::size_t{1} << pairs));
    for (std::size_t v = 0; v < (std::size_t{1} << pairs); ++v) {
        amps[(v << pairs) | v] = a;
    }
    return quantum::QuantumRegister(n, std::move(amps));
}

double moe_game_value(const MoeStrategy &strategy, std::size_t lambda) {
    check_strategy(strategy, lambda);
    if (lambda > kMaxCollapsedLambda) {
        throw std::length_error("moe_game_value: lambda must be at most 8");
    }
    const auto table = probability_table(strategy.per_qubit);
    const std::size_t bases = std::size_t{1} << lambda;
    // Only x = response(w, theta) wins, so the sum over x collapses to that term.
    const auto per_theta = parallel_map<double>(bases, [&](std::size_t t) {
        const auto theta = BitString::from_uint(t, lambda);
        std::vector<std::size_t> w(lambda, 0);
        double total = 0.0;
        do {
            const auto y = respond(strategy, w, theta);
            double p = 1.0;
            for (std::size_t i = 0; i < lambda && p > 0.0; ++i) {
                p *= table[i][w[i]][y[i]][theta[i]];
            }
            total += p;
        } while (next_memento(w, strategy.per_qubit));
        return total;
    });
    double total = 0.0;
    for (double v : per_theta) {
        total += v;
    }
    return total / static_cast<double>(bases * bases);
}

double moe_game_value_entangled(const MoeStrategy &strategy, std::size_t lambda) {
    check_strategy(strategy, lambda);
    if (lambda > kMaxEntangledLambda) {
        throw std::length_error("moe_game_value_entangled: lambda must be at most 4");
    }
    const auto state = maximally_entangled_state(lambda);
    const std::size_t bases = std::size_t{1} << lambda;
    double total = 0.0;
    for (std::size_t t = 0; t < bases; ++t) {
        const auto theta = BitString::from_uint(t, lambda);
        std::vector<quantum::SingleQubitMeasurement> ms;
        for (std::size_t i = 0; i < lambda; ++i) {
            ms.push_back(quantum::SingleQubitMeasurement::basis(theta[i]));
        }
        ms.insert(ms.end(), strategy.per_qubit.begin(), strategy.per_qubit.end());
        const auto dist = quantum::outcome_distribution(state, ms);
        for (std::size_t flat = 0; flat < dist.size(); ++flat) {
            if (dist.prob(flat) == 0.0) {
                continue;
            }
            const auto c = dist.coords(flat);
            BitString x(lambda, 0);
            for (std::size_t i = 0; i < lambda; ++i) {
                x.set(i, static_cast<std::uint8_t>(c[i]));
            }
            const std::vector<std::size_t> w(c.begin() + static_cast<std::ptrdiff_t>(lambda),
                                             c.end());
            if (respond(strategy, w, theta) == x) {
                total += dist.prob(flat);
            }
        }
    }
    return total / static_cast<double>(bases);
}

MoeStrategy reduce_ot_attack_to_moe(const MementoOtStrategy &attack, std::size_t lambda) {
    if (!attack.x_guess) {
        throw std::invalid_argument("reduce_ot_attack_to_moe: attack has no x guesser");
    }
    MoeStrategy s;
    s.id = "moe(" + attack.id + ")";
    s.per_qubit.assign(lambda, attack.measurement);
    s.response = [guesser = attack.x_guess](std::span<const std::size_t> w,
                                            const BitString &theta) {
        return reassemble(guesser(w, theta), theta);
    };
    if (lambda <= kMaxEntangledLambda) {
        for (std::size_t t = 0; t < (std::size_t{1} << lambda); ++t) {
            const auto theta = BitString::from_uint(t, lambda);
            std::vector<std::size_t> w(lambda, 0);
            do {
                (void)respond(s, w, theta);
            } while (next_memento(w, s.per_qubit));
        }
    }
    return s;
}

MoeStrategy product_map_strategy(std::string id, const quantum::SingleQubitMeasurement &m,
                                 std::size_t lambda) {
    MoeStrategy s;
    s.id = std::move(id);
    s.per_qubit.assign(lambda, m);
    s.response = [table = map_guess_table(m)](std::span<const std::size_t> w,
                                              const BitString &theta) {
        BitString y(theta.size(), 0);
        for (std::size_t i = 0; i < theta.size(); ++i) {
            y.set(i, table.at(w[i])[theta[i]]);
        }
        return y;
    };
    return s;
}

MoeSearchResult moe_search_single(double step) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("moe_search_single: grid step must be positive");
    }
    const double pi = std::numbers::pi;
    std::vector<double> polars;
    for (std::size_t i = 0; static_cast<double>(i) * step <= pi + 1e-12; ++i) {
        polars.push_back(std::min(pi, static_cast<double>(i) * step));
    }
    std::vector<double> azimuths;
    for (std::size_t j = 0; static_cast<double>(j) * step < 2.0 * pi; ++j) {
        azimuths.push_back(static_cast<double>(j) * step);
    }
    struct RowBest {
        double value = -1.0;
        std::size_t az = 0;
    };
    const auto rows = parallel_map<RowBest>(polars.size(), [&](std::size_t i) {
        const double c = std::cos(polars[i] / 2.0);
        const double s = std::sin(polars[i] / 2.0);
        const double sp = std::sin(polars[i]);
        RowBest best;
        for (std::size_t j = 0; j < azimuths.size(); ++j) {
            const double ca = std::cos(azimuths[j]);
            const double p0[2][2] = {{c * c, s * s}, {0.5 * (1 + sp * ca), 0.5 * (1 - sp * ca)}};
            double v = 0.0;
            for (std::size_t th = 0; th < 2; ++th) {
                v += std::max(p0[th][0], p0[th][1]) + std::max(1 - p0[th][0], 1 - p0[th][1]);
            }
            v /= 4.0;
            if (v > best.value) {
                best = {v, j};
            }
        }
        return best;
    });
    MoeSearchResult result;
    result.best = -1.0;
    result.grid_points = polars.size() * azimuths.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].value > result.best) {
            result.best = rows[i].value;
            result.polar = polars[i];
            result.azimuth = azimuths[rows[i].az];
        }
    }
    return result;
}

quantum::SingleQubitMeasurement random_povm(std::size_t outcomes, Rng &rng) {
    if (outcomes < 2) {
        throw std::invalid_argument("random_povm: at least two outcomes required");
    }
    std::vector<std::array<quantum::Complex, 2>> vecs(outcomes);
    quantum::Matrix2 sum{};
    for (auto &v : vecs) {
        for (auto &c : v) {
            c = {2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
        }
        sum[0] += v[0] * std::conj(v[0]);
        sum[1] += v[0] * std::conj(v[1]);
        sum[2] += v[1] * std::conj(v[0]);
        sum[3] += v[1] * std::conj(v[1]);
    }
    // Normalise by S^(-1/2) so the effects sum to the identity.
    const auto root = quantum::psd_sqrt(sum);
    const auto det = root[0] * root[3] - root[1] * root[2];
    const quantum::Matrix2 inv{root[3] / det, -root[1] / det, -root[2] / det, root[0] / det};
    std::vector<quantum::MeasurementOutcome> effects;
    for (std::size_t j = 0; j < outcomes; ++j) {
        const quantum::Complex u0 = inv[0] * vecs[j][0] + inv[1] * vecs[j][1];
        const quantum::Complex u1 = inv[2] * vecs[j][0] + inv[3] * vecs[j][1];
        effects.push_back({std::to_string(j),
                           {u0 * std::conj(u0), u0 * std::conj(u1), u1 * std::conj(u0),
                            u1 * std::conj(u1)}});
    }
    return quantum::SingleQubitMeasurement(std::move(effects));
}

} // namespace amnesia::adversary

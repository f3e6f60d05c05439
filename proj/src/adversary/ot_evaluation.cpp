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

#include "amnesia/adversary/ot_evaluation.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>

#include "amnesia/common/numeric.hpp"
#include "amnesia/common/rng.hpp"
#include "amnesia/quantum/register.hpp"

namespace amnesia::adversary {

namespace {

constexpr std::uint64_t kSampleStream = 0x6f74;

// prob[k][x][theta] for one qubit.
std::vector<std::array<std::array<double, 2>, 2>>
single_qubit_table(const quantum::SingleQubitMeasurement &m) {
    const double r = 1.0 / std::numbers::sqrt2;
    const quantum::Complex states[2][2][2] = {{{1.0, 0.0}, {r, r}}, {{0.0, 1.0}, {r, -r}}};
    std::vector<std::array<std::array<double, 2>, 2>> t(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
        for (std::size_t x = 0; x < 2; ++x) {
            for (std::size_t th = 0; th < 2; ++th) {
                t[k][x][th] = m.probability(k, states[x][th][0], states[x][th][1]);
            }
        }
    }
    return t;
}

bool next_memento(std::vector<std::size_t> &w, std::size_t radix) {
    for (std::size_t i = w.size(); i-- > 0;) {
        if (++w[i] < radix) {
            return true;
        }
        w[i] = 0;
    }
    return false;
}

double checked_atoms(std::size_t lambda, std::size_t radix, double extra) {
    const double atoms =
        std::pow(4.0 * static_cast<double>(radix), static_cast<double>(lambda)) * extra;
    if (atoms > static_cast<double>(kMaxExactAtoms)) {
        throw std::length_error("exact evaluation would enumerate more than 2^26 atoms");
    }
    return atoms;
}

} // namespace

std::pair<double, double> clopper_pearson(std::uint64_t successes, std::uint64_t trials,
                                          double confidence) {
    if (trials == 0 || successes > trials) {
        throw std::invalid_argument("clopper_pearson: need 0 <= successes <= trials, trials > 0");
    }
    const double alpha = 1.0 - confidence;
    const auto k = static_cast<double>(successes);
    const auto n = static_cast<double>(trials);
    const double low = successes == 0 ? 0.0 : boost::math::ibeta_inv(k, n - k + 1.0, alpha / 2.0);
    const double high =
        successes == trials ? 1.0 : boost::math::ibeta_inv(k + 1.0, n - k, 1.0 - alpha / 2.0);
    return {low, high};
}

double ot_joint_x_guess_probability(const MementoOtStrategy &strategy, std::size_t lambda) {
    if (lambda == 0 || lambda > 6) {
        throw std::invalid_argument("ot_joint_x_guess_probability: lambda must be in [1, 6]");
    }
    checked_atoms(lambda, strategy.measurement.size(), static_cast<double>(lambda));
    const std::vector<quantum::SingleQubitMeasurement> per_qubit(lambda, strategy.measurement);
    const std::uint64_t secrets = std::uint64_t{1} << (2 * lambda);
    const auto per_secret = parallel_map<double>(secrets, [&](std::size_t idx) {
        const auto x = BitString::from_uint(idx >> lambda, lambda);
        const auto theta = BitString::from_uint(idx & ((std::uint64_t{1} << lambda) - 1), lambda);
        const auto reg = quantum::prepare_bb84({x, theta});
        const auto dist = quantum::outcome_distribution(reg, per_qubit);
        double p = 0.0;
        for (std::size_t flat = 0; flat < dist.size(); ++flat) {
            if (dist.prob(flat) == 0.0) {
                continue;
            }
            const auto w = dist.coords(flat);
            if (reassemble(strategy.x_guess(w, theta), theta) == x) {
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

GuessEstimate ot_receiver_guess_exact(const MementoOtStrategy &strategy, std::size_t lambda,
                                      std::size_t ell) {
    if (lambda == 0 || lambda > 6 || ell == 0) {
        throw std::invalid_argument("ot_receiver_guess_exact: need 1 <= lambda <= 6, ell >= 1");
    }
    const hashing::PackedFamily family(lambda, ell);
    if (family.seed_bits() > hashing::kMaxEnumerableSeedBits) {
        throw std::length_error("ot_receiver_guess_exact: hash family too large to enumerate");
    }
    const std::uint64_t seeds = family.seed_count();
    const std::size_t radix = strategy.measurement.size();
    const auto table = single_qubit_table(strategy.measurement);
    const double uniform = std::exp2(-static_cast<double>(ell));
    const std::size_t bases = std::size_t{1} << lambda;

    std::vector<hashing::HashDescriptor> descriptors;
    if (strategy.hash_guess) {
        checked_atoms(lambda, radix, static_cast<double>(seeds * seeds));
        for (std::uint64_t s = 0; s < seeds; ++s) {
            descriptors.push_back(family.descriptor(s));
        }
    } else {
        checked_atoms(lambda, radix, 1.0);
    }

    const auto per_theta = parallel_map<double>(bases, [&](std::size_t t) {
        const auto theta = BitString::from_uint(t, lambda);
        std::vector<BitString> parts[2];
        std::vector<std::uint64_t> packed[2];
        for (std::size_t xi = 0; xi < bases; ++xi) {
            const auto x = BitString::from_uint(xi, lambda);
            for (std::uint8_t c = 0; c < 2; ++c) {
                parts[c].push_back(x.restrict(positions_equal(theta, c)));
                packed[c].push_back(family.pack_input(parts[c].back()));
            }
        }
        // Fraction of seeds on which h(u) = h(v), by enumeration.
        std::map<std::pair<std::uint64_t, std::uint64_t>, double> collisions;
        auto agree = [&](std::uint64_t u, std::uint64_t v) {
            auto [it, fresh] = collisions.try_emplace({u, v}, 0.0);
            if (fresh) {
                std::uint64_t hits = 0;
                for (std::uint64_t s = 0; s < seeds; ++s) {
                    hits += family.eval(s, u) == family.eval(s, v) ? 1 : 0;
                }
                it->second = static_cast<double>(hits) / static_cast<double>(seeds);
            }
            return it->second;
        };

        double total = 0.0;
        std::vector<std::size_t> w(lambda, 0);
        do {
            std::optional<XGuess> g;
            if (!strategy.hash_guess) {
                g = strategy.x_guess(w, theta);
            }
            for (std::size_t xi = 0; xi < bases; ++xi) {
                double p = 1.0;
                for (std::size_t i = 0; i < lambda && p > 0.0; ++i) {
                    const std::size_t bit = (xi >> (lambda - 1 - i)) & 1U;
                    p *= table[w[i]][bit][theta[i]];
                }
                if (p == 0.0) {
                    continue;
                }
                if (g) {
                    const double f0 =
                        g->uniform_m0 ? uniform : agree(family.pack_input(g->x0), packed[0][xi]);
                    const double f1 =
                        g->uniform_m1 ? uniform : agree(family.pack_input(g->x1), packed[1][xi]);
                    total += p * f0 * f1;
                    continue;
                }
                double hits = 0.0;
                for (std::uint64_t s0 = 0; s0 < seeds; ++s0) {
                    for (std::uint64_t s1 = 0; s1 < seeds; ++s1) {
                        const auto guess =
                            strategy.guess(w, theta, descriptors[s0], descriptors[s1]);
                        const double f0 =
                            guess.m0 ? (guess.m0->to_uint() == family.eval(s0, packed[0][xi]))
                                     : uniform;
                        const double f1 =
                            guess.m1 ? (guess.m1->to_uint() == family.eval(s1, packed[1][xi]))
                                     : uniform;
                        hits += f0 * f1;
                    }
                }
                total += p * hits / static_cast<double>(seeds * seeds);
            }
        } while (next_memento(w, radix));
        return total;
    });
    GuessEstimate est;
    for (double v : per_theta) {
        est.value += v;
    }
    est.value /= static_cast<double>(bases * bases);
    est.ci_low = est.value;
    est.ci_high = est.value;
    est.exact = true;
    return est;
}

GuessEstimate ot_receiver_guess_sampled(const MementoOtStrategy &strategy, std::size_t lambda,
                                        std::size_t ell, std::uint64_t trials,
                                        std::uint64_t seed) {
    if (lambda == 0 || ell == 0 || ell > hashing::kMaxOutputBits || trials == 0) {
        throw std::invalid_argument("ot_receiver_guess_sampled: lambda, ell, trials must be positive");
    }
    const auto table = single_qubit_table(strategy.measurement);
    const auto hits = parallel_map<std::uint8_t>(trials, [&](std::size_t trial) {
        Rng rng = Rng::for_trial(seed, kSampleStream, trial);
        const auto x = rng.bits(lambda);
        const auto theta = rng.bits(lambda);
        std::vector<std::size_t> w(lambda);
        for (std::size_t i = 0; i < lambda; ++i) {
            const double u = rng.uniform();
            double acc = 0.0;
            std::size_t k = 0;
            for (; k + 1 < table.size(); ++k) {
                acc += table[k][x[i]][theta[i]];
                if (u < acc) {
                    break;
                }
            }
            w[i] = k;
        }
        const auto h0 = hashing::sample_hash(lambda, ell, rng);
        const auto h1 = hashing::sample_hash(lambda, ell, rng);
        const auto m0 = hashing::eval_hash(h0, x.restrict(positions_equal(theta, 0)));
        const auto m1 = hashing::eval_hash(h1, x.restrict(positions_equal(theta, 1)));
        const auto guess = strategy.guess(w, theta, h0, h1);
        const auto g0 = guess.m0 ? *guess.m0 : rng.bits(ell);
        const auto g1 = guess.m1 ? *guess.m1 : rng.bits(ell);
        return static_cast<std::uint8_t>(g0 == m0 && g1 == m1 ? 1 : 0);
    });
    GuessEstimate est;
    est.trials = trials;
    for (auto h : hits) {
        est.successes += h;
    }
    est.value = static_cast<double>(est.successes) / static_cast<double>(trials);
    std::tie(est.ci_low, est.ci_high) = clopper_pearson(est.successes, trials);
    return est;
}

} // namespace amnesia::adversary

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

#include "amnesia/adversary/distinguisher.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "amnesia/adversary/ot_evaluation.hpp"
#include "amnesia/common/numeric.hpp"

namespace amnesia::adversary {

namespace {

constexpr std::uint64_t kSampleStream = 0x6469;

std::vector<std::array<std::array<double, 2>, 2>>
outcome_table(const quantum::SingleQubitMeasurement &m) {
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

void check_c(std::uint8_t c) {
    if (c > 1) {
        throw std::invalid_argument("distinguisher: c must be 0 or 1");
    }
}

} // namespace

bool Distinguisher::operator()(const hashing::HashDescriptor &h, const BitString &challenge,
                               std::span<const std::size_t> w, const BitString &theta,
                               std::uint8_t c, Rng &rng) const {
    check_c(c);
    const auto other = hashing::sample_hash(h.max_input_len, h.out_len, rng);
    const auto guess = c == 0 ? strategy_.guess(w, theta, h, other)
                              : strategy_.guess(w, theta, other, h);
    const auto &mine = c == 0 ? guess.m0 : guess.m1;
    const auto m_prime = mine ? *mine : rng.bits(h.out_len);
    return m_prime == challenge;
}

Distinguisher build_distinguisher(const MementoOtStrategy &strategy) {
    return Distinguisher(strategy);
}

DistinguisherEvaluation distinguisher_exact(const MementoOtStrategy &strategy, std::size_t lambda,
                                            std::size_t ell, std::uint8_t c) {
    check_c(c);
    if (lambda == 0 || lambda > 6 || ell == 0) {
        throw std::invalid_argument("distinguisher_exact: need 1 <= lambda <= 6, ell >= 1");
    }
    const hashing::PackedFamily family(lambda, ell);
    if (family.seed_bits() > hashing::kMaxEnumerableSeedBits) {
        throw std::length_error("distinguisher_exact: hash family too large to enumerate");
    }
    const std::uint64_t seeds = family.seed_count();
    const std::uint64_t other_seeds = strategy.hash_guess ? seeds : 1;
    const std::size_t radix = strategy.measurement.size();
    const std::uint64_t outputs = std::uint64_t{1} << ell;
    const double atoms = std::pow(4.0 * static_cast<double>(radix), static_cast<double>(lambda)) *
                         static_cast<double>(seeds * other_seeds * outputs);
    if (atoms > static_cast<double>(kMaxExactAtoms)) {
        throw std::length_error("distinguisher_exact: more than 2^26 atoms");
    }
    std::vector<hashing::HashDescriptor> descriptors;
    if (strategy.hash_guess) {
        for (std::uint64_t s = 0; s < seeds; ++s) {
            descriptors.push_back(family.descriptor(s));
        }
    }
    const auto table = outcome_table(strategy.measurement);
    const std::size_t bases = std::size_t{1} << lambda;

    struct Partial {
        double hashed = 0.0;
        double uniform = 0.0;
    };
    const auto per_theta = parallel_map<Partial>(bases, [&](std::size_t t) {
        const auto theta = BitString::from_uint(t, lambda);
        Partial acc;
        std::vector<std::size_t> w(lambda, 0);
        while (true) {
            std::optional<XGuess> g;
            std::optional<std::uint64_t> packed_guess;
            if (!strategy.hash_guess) {
                g = strategy.x_guess(w, theta);
                if (!(c == 0 ? g->uniform_m0 : g->uniform_m1)) {
                    packed_guess = family.pack_input(c == 0 ? g->x0 : g->x1);
                }
            }
            for (std::size_t xi = 0; xi < bases; ++xi) {
                const auto x = BitString::from_uint(xi, lambda);
                double p = 1.0;
                for (std::size_t i = 0; i < lambda && p > 0.0; ++i) {
                    p *= table[w[i]][x[i]][theta[i]];
                }
                if (p == 0.0) {
                    continue;
                }
                const auto target = family.pack_input(x.restrict(positions_equal(theta, c)));
                double hashed = 0.0;
                double uniform = 0.0;
                for (std::uint64_t s = 0; s < seeds; ++s) {
                    const std::uint64_t m_true = family.eval(s, target);
                    for (std::uint64_t o = 0; o < other_seeds; ++o) {
                        // m'_c as an integer, or nullopt for a uniform guess.
                        std::optional<std::uint64_t> m_prime;
                        if (g) {
                            if (packed_guess) {
                                m_prime = family.eval(s, *packed_guess);
                            }
                        } else {
                            const auto &hc = descriptors[s];
                            const auto &ho = descriptors[o];
                            const auto guess = c == 0 ? strategy.guess(w, theta, hc, ho)
                                                      : strategy.guess(w, theta, ho, hc);
                            const auto &mine = c == 0 ? guess.m0 : guess.m1;
                            if (mine) {
                                m_prime = mine->to_uint();
                            }
                        }
                        const double guess_weight = 1.0 / static_cast<double>(outputs);
                        hashed += m_prime ? (*m_prime == m_true ? 1.0 : 0.0) : guess_weight;
                        for (std::uint64_t challenge = 0; challenge < outputs; ++challenge) {
                            const double hit =
                                m_prime ? (*m_prime == challenge ? 1.0 : 0.0) : guess_weight;
                            uniform += hit / static_cast<double>(outputs);
                        }
                    }
                }
                const double norm = static_cast<double>(seeds * other_seeds);
                acc.hashed += p * hashed / norm;
                acc.uniform += p * uniform / norm;
            }
            if (!next_memento(w, radix)) {
                break;
            }
        }
        return acc;
    });
    DistinguisherEvaluation ev;
    for (const auto &p : per_theta) {
        ev.accept_hashed += p.hashed;
        ev.accept_uniform += p.uniform;
    }
    const double scale = static_cast<double>(bases * bases);
    ev.accept_hashed /= scale;
    ev.accept_uniform /= scale;
    ev.advantage = ev.accept_hashed - ev.accept_uniform;
    ev.attack_success = ot_receiver_guess_exact(strategy, lambda, ell).value;
    return ev;
}

DistinguisherEvaluation distinguisher_sampled(const MementoOtStrategy &strategy,
                                              std::size_t lambda, std::size_t ell, std::uint8_t c,
                                              std::uint64_t trials, std::uint64_t seed) {
    check_c(c);
    if (lambda == 0 || ell == 0 || trials == 0) {
        throw std::invalid_argument("distinguisher_sampled: lambda, ell, trials must be positive");
    }
    const auto table = outcome_table(strategy.measurement);
    const Distinguisher d = build_distinguisher(strategy);
    struct Outcome {
        std::uint8_t hashed = 0;
        std::uint8_t uniform = 0;
        std::uint8_t attack = 0;
    };
    const auto outcomes = parallel_map<Outcome>(trials, [&](std::size_t trial) {
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
        const auto random_challenge = rng.bits(ell);

        Outcome o;
        // The distinguisher's own coins are replayed identically for both challenges.
        const std::uint64_t coin_seed = rng();
        Rng coins_a(coin_seed);
        Rng coins_b(coin_seed);
        const auto &hc = c == 0 ? h0 : h1;
        o.hashed = d(hc, c == 0 ? m0 : m1, w, theta, c, coins_a) ? 1 : 0;
        o.uniform = d(hc, random_challenge, w, theta, c, coins_b) ? 1 : 0;
        const auto guess = strategy.guess(w, theta, h0, h1);
        const auto g0 = guess.m0 ? *guess.m0 : rng.bits(ell);
        const auto g1 = guess.m1 ? *guess.m1 : rng.bits(ell);
        o.attack = g0 == m0 && g1 == m1 ? 1 : 0;
        return o;
    });
    DistinguisherEvaluation ev;
    ev.trials = trials;
    std::uint64_t hashed = 0;
    std::uint64_t uniform = 0;
    std::uint64_t attack = 0;
    for (const auto &o : outcomes) {
        hashed += o.hashed;
        uniform += o.uniform;
        attack += o.attack;
    }
    const auto n = static_cast<double>(trials);
    ev.accept_hashed = static_cast<double>(hashed) / n;
    ev.accept_uniform = static_cast<double>(uniform) / n;
    ev.advantage = ev.accept_hashed - ev.accept_uniform;
    ev.attack_success = static_cast<double>(attack) / n;
    return ev;
}

} // namespace amnesia::adversary

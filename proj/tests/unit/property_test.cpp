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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"

#include "amnesia/cli/verify.hpp"
#include "amnesia/common/rng.hpp"
#include "amnesia/hashing/toeplitz.hpp"
#include "amnesia/info/distance.hpp"
#include "amnesia/info/distribution.hpp"
#include "amnesia/info/entropy.hpp"
#include "amnesia/info/lhl.hpp"
#include "amnesia/info/splitting.hpp"
#include "amnesia/protocol/commitment.hpp"
#include "amnesia/protocol/rot.hpp"
#include "amnesia/quantum/register.hpp"

using namespace amnesia;
using namespace amnesia::info;

namespace {

Axis axis(const std::string &name, std::size_t n) {
    Axis a{name, {}};
    for (std::size_t i = 0; i < n; ++i) {
        a.labels.push_back(std::to_string(i));
    }
    return a;
}

JointDistribution random_joint(Rng &rng, std::vector<std::size_t> shape) {
    std::vector<Axis> axes;
    std::size_t total = 1;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        axes.push_back(axis("A" + std::to_string(i), shape[i]));
        total *= shape[i];
    }
    std::vector<std::uint64_t> w(total);
    for (auto &x : w) {
        x = rng.below(2) ? rng.below(20) : 0;
    }
    w[rng.below(total)] += 1;
    return JointDistribution::from_weights(std::move(axes), std::move(w));
}

BitString from_index(std::uint64_t v, std::size_t n) { return BitString::from_uint(v, n); }

} // namespace

TEST_CASE("smoothing: linear program and greedy agree up to 64 atoms") {
    Rng rng(101);
    const std::size_t target[] = {0};
    const std::size_t cond[] = {1};
    for (int t = 0; t < 60; ++t) {
        const std::size_t rows = 1 + rng.below(8), cols = 1 + rng.below(8);
        const auto d = random_joint(rng, {cols, rows});
        const auto table = conditional_table(d, target, cond);
        for (double delta : {0.0, 0.01, 0.1, 0.3}) {
            const double lp =
                smoothed_guessing_probability(table, delta, SmoothingMethod::kLinearProgram);
            const double greedy =
                smoothed_guessing_probability(table, delta, SmoothingMethod::kGreedy);
            CHECK(lp == doctest::Approx(greedy).epsilon(1e-6));
            CHECK(lp <= guessing_probability(table) + 1e-12);
        }
    }
}

TEST_CASE("entropy: conditioning and smoothing never increase it") {
    Rng rng(102);
    const std::size_t x[] = {0};
    const std::size_t y[] = {1};
    const std::size_t yz[] = {1, 2};
    for (int t = 0; t < 50; ++t) {
        const auto d = random_joint(rng, {1 + rng.below(4), 1 + rng.below(3), 1 + rng.below(3)});
        const double h_y = min_entropy_cond(d, x, y);
        const double h_yz = min_entropy_cond(d, x, yz);
        CHECK(h_yz <= h_y + 1e-9);
        CHECK(h_y >= -1e-12);
        double prev = h_y;
        for (double delta : {0.05, 0.1, 0.2}) {
            const double s = smooth_min_entropy_cond(d, x, y, delta);
            CHECK(s >= prev - 1e-9);
            prev = s;
        }
    }
}

TEST_CASE("distance: metric axioms and data processing") {
    Rng rng(103);
    const std::size_t keep[] = {0};
    for (int t = 0; t < 50; ++t) {
        const std::vector<std::size_t> shape = {1 + rng.below(4), 1 + rng.below(4)};
        const auto a = random_joint(rng, shape);
        const auto b = random_joint(rng, shape);
        const auto c = random_joint(rng, shape);
        CHECK(statistical_distance(a, a) == 0.0);
        CHECK(statistical_distance(a, b) == doctest::Approx(statistical_distance(b, a)));
        CHECK(statistical_distance(a, c) <=
              statistical_distance(a, b) + statistical_distance(b, c) + 1e-12);
        CHECK(statistical_distance(a.marginal(keep), b.marginal(keep)) <=
              statistical_distance(a, b) + 1e-12);
        CHECK(l1_distance(a, b) == doctest::Approx(2 * statistical_distance(a, b)));
        CHECK(statistical_distance_exact(a, b).convert_to<double>() ==
              doctest::Approx(statistical_distance(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("LHL: sampled seeds agree with the exact family average") {
    Rng rng(104);
    const std::size_t cond[] = {1};
    for (std::size_t k = 0; k < 6; ++k) {
        const auto inst = cli::random_lhl_instance(rng, k);
        const auto report = lhl_verify(inst.table, 0, cond, inst.max_input_len, inst.ell, 0.0);
        const hashing::PackedFamily family(inst.max_input_len, inst.ell);
        const int n = 400;
        double sum = 0.0, sq = 0.0;
        for (int i = 0; i < n; ++i) {
            const double v = lhl_seed_distance(inst.table, 0, cond, inst.max_input_len, inst.ell,
                                               rng.below(family.seed_count()));
            sum += v;
            sq += v * v;
        }
        const double mean = sum / n;
        const double sd = std::sqrt(std::max(0.0, sq / n - mean * mean));
        CHECK(std::abs(mean - report.lhs) <= 3 * sd / std::sqrt(n) + 1e-9);
    }
}

TEST_CASE("splitting: constructed choices meet the bound on random instances") {
    Rng rng(105);
    const std::size_t cond[] = {2};
    for (std::size_t k = 0; k < 40; ++k) {
        const auto d = cli::random_split_instance(rng, k);
        for (double delta : {0.25, 0.125}) {
            const auto r = min_entropy_split(d, 0, 1, cond, delta);
            CHECK(r.holds);
            CHECK(r.achieved >= r.bound - 1e-9);
            CHECK(split_entropy(d, 0, 1, cond, r.choice, delta) ==
                  doctest::Approx(r.achieved).epsilon(1e-9));
            if (r.exhaustive_best) {
                CHECK(*r.exhaustive_best >= r.achieved - 1e-9);
            }
        }
    }
}

TEST_CASE("quantum: Hadamard twice is the identity") {
    Rng rng(106);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + rng.below(5);
        std::vector<quantum::Complex> amps(std::size_t{1} << n);
        double norm = 0.0;
        for (auto &z : amps) {
            z = {rng.uniform() - 0.5, rng.uniform() - 0.5};
            norm += std::norm(z);
        }
        for (auto &z : amps) {
            z /= std::sqrt(norm);
        }
        quantum::QuantumRegister reg(n, amps);
        const std::size_t q = rng.below(n);
        reg.apply_hadamard(q);
        reg.apply_hadamard(q);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            CHECK(std::abs(reg.amplitudes()[i] - amps[i]) < 1e-12);
        }
    }
}

TEST_CASE("quantum: measuring in the encoding basis recovers every string") {
    Rng rng(107);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::uint64_t a = 0; a < (1u << n); ++a) {
            for (std::uint64_t th = 0; th < (1u << n); ++th) {
                const quantum::BB84Secret s{from_index(a, n), from_index(th, n)};
                auto reg = quantum::prepare_bb84(s);
                REQUIRE(quantum::measure_in_bases(reg, s.theta, rng) == s.a);
            }
        }
    }
}

TEST_CASE("protocols are complete for every secret and choice") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::uint64_t a = 0; a < (1u << n); ++a) {
            for (std::uint64_t th = 0; th < (1u << n); ++th) {
                for (std::uint8_t b = 0; b < 2; ++b) {
                    const quantum::BB84Secret s{from_index(a, n), from_index(th, n)};
                    protocol::HonestCommitter c(b);
                    protocol::CommitSessionOptions co;
                    co.secret = s;
                    co.open_value = b;
                    REQUIRE(protocol::accepted(protocol::run_amcom(n, c, co).verdict));
                    protocol::HonestRotReceiver r(b);
                    protocol::RotSessionOptions ro;
                    ro.secret = s;
                    const auto session = protocol::run_amrot(n, 2, r, ro);
                    REQUIRE(*r.output() == (b ? session.outputs.m1 : session.outputs.m0));
                }
            }
        }
    }
}

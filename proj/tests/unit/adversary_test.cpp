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
#include <cmath>
#include <memory>
#include <tuple>
#include <numbers>
#include <stdexcept>

#include "doctest.h"

#include "amnesia/adversary/distinguisher.hpp"
#include "amnesia/adversary/double_open.hpp"
#include "amnesia/adversary/moe.hpp"
#include "amnesia/adversary/ot_attack.hpp"
#include "amnesia/adversary/ot_evaluation.hpp"
#include "amnesia/adversary/records.hpp"
#include "amnesia/info/bounds.hpp"

using namespace amnesia;
using namespace amnesia::adversary;
using quantum::SingleQubitMeasurement;

namespace {

const double kCos2 = std::pow(std::cos(std::numbers::pi / 8), 2);
const double kR = 1.0 / std::numbers::sqrt2;

// (1/4) sum over (a, theta) of Pr[guess for basis theta equals a], written out per outcome.
double double_open_oracle(const DoubleOpenStrategy &s) {
    const quantum::Complex states[2][2][2] = {{{1.0, 0.0}, {kR, kR}}, {{0.0, 1.0}, {kR, -kR}}};
    double total = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int theta = 0; theta < 2; ++theta) {
            for (std::size_t k = 0; k < s.measurement.size(); ++k) {
                const auto guess = theta == 0 ? s.s(k) : s.t(k);
                if (guess == a) {
                    total += s.measurement.probability(k, states[a][theta][0],
                                                       states[a][theta][1]);
                }
            }
        }
    }
    return total / 4.0;
}

MoeStrategy constant_response(std::size_t lambda) {
    MoeStrategy s;
    s.id = "constant-zero";
    s.per_qubit.assign(lambda, SingleQubitMeasurement::standard());
    s.response = [](std::span<const std::size_t>, const BitString &theta) {
        return BitString(theta.size(), 0);
    };
    return s;
}

} // namespace

TEST_CASE("double opening: exact single-qubit values") {
    CHECK(std::abs(double_open_success_exact(breidbart_double_open(), 1) - kCos2) < 1e-12);
    CHECK(std::abs(double_open_success_exact(standard_double_open(), 1) - 0.75) < 1e-12);
    CHECK(std::abs(double_open_success_exact(breidbart_double_open(), 3) - 0.62185922) < 1e-8);
    CHECK(std::abs(double_open_success_joint(breidbart_double_open(), 3) -
                   std::pow(kCos2, 3)) < 1e-12);
    CHECK(double_open_single_qubit(breidbart_double_open()) ==
          doctest::Approx(double_open_oracle(breidbart_double_open())).epsilon(1e-12));
    CHECK_THROWS_AS(double_open_success_joint(breidbart_double_open(), 7), std::invalid_argument);
}

TEST_CASE("double opening: sampled standard strategy matches 0.75") {
    const std::uint64_t n = 1 << 18;
    const double v = double_open_success_sampled(standard_double_open(), 1, n, 4);
    CHECK(std::abs(v - 0.75) < 3 * std::sqrt(0.75 * 0.25 / n));
}

TEST_CASE("double opening: product rule on random POVMs") {
    Rng rng(6);
    for (int t = 0; t < 10; ++t) {
        const auto m = random_povm(4, rng).relabel({"00", "01", "10", "11"});
        const DoubleOpenStrategy s("random", m);
        const double single = double_open_oracle(s);
        CHECK(single <= kCos2 + 1e-9);
        for (std::size_t lambda = 1; lambda <= 4; ++lambda) {
            CHECK(double_open_success_exact(s, lambda) ==
                  doctest::Approx(std::pow(single, lambda)).epsilon(1e-12));
            CHECK(double_open_success_joint(s, lambda) ==
                  doctest::Approx(std::pow(single, lambda)).epsilon(1e-9));
        }
    }
}

TEST_CASE("double opening: grid search") {
    const auto coarse = double_open_search(0.1);
    CHECK(std::abs(coarse.best - kCos2) < 0.01);
    CHECK(coarse.best <= kCos2 + 1e-9);
    const auto degenerate = double_open_search(4.0);
    CHECK(degenerate.best >= 0.75 - 1e-12);
    CHECK(degenerate.strategy().measurement.size() == 2);
    CHECK(double_open_oracle(coarse.strategy()) == doctest::Approx(coarse.best));
    CHECK_THROWS_AS(double_open_search(0.0), std::invalid_argument);
}

TEST_CASE("labels of double-open strategies must be two bits") {
    CHECK_THROWS_AS(DoubleOpenStrategy("bad", SingleQubitMeasurement::standard()),
                    std::invalid_argument);
}

TEST_CASE("monogamy game: known values") {
    const auto b = product_map_strategy("breidbart", SingleQubitMeasurement::breidbart(), 1);
    CHECK(std::abs(moe_game_value(b, 1) - (0.5 + 1 / (2 * std::numbers::sqrt2))) < 1e-12);
    CHECK(std::abs(moe_game_value_entangled(b, 1) - kCos2) < 1e-12);
    CHECK(moe_game_value(constant_response(2), 2) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(moe_game_value_entangled(constant_response(2), 2) ==
          doctest::Approx(0.25).epsilon(1e-12));
    CHECK_THROWS_AS(moe_game_value(b, 2), std::invalid_argument);
}

TEST_CASE("monogamy game rejects responses that differ between calls") {
    auto s = constant_response(1);
    s.response = [n = std::make_shared<int>(0)](std::span<const std::size_t>,
                                                const BitString &theta) {
        return BitString(theta.size(), static_cast<std::uint8_t>((*n)++ % 2));
    };
    CHECK_THROWS_AS(moe_game_value(s, 1), std::invalid_argument);
}

TEST_CASE("maximally entangled pairs") {
    const auto reg = maximally_entangled_state(1);
    const auto &a = reg.amplitudes();
    REQUIRE(a.size() == 4);
    CHECK(std::abs(a[0] - kR) < 1e-12);
    CHECK(std::abs(a[3] - kR) < 1e-12);
    CHECK(std::abs(a[1]) < 1e-12);
    const auto two = maximally_entangled_state(2);
    // A halves are qubits 0, 1 and D halves 2, 3: |a0 a1 a0 a1>.
    for (std::size_t i = 0; i < 16; ++i) {
        const bool paired = (i >> 2) == (i & 3);
        CHECK(std::abs(std::abs(two.amplitudes()[i]) - (paired ? 0.5 : 0.0)) < 1e-12);
    }
}

TEST_CASE("reduction preserves the joint guessing probability") {
    for (const auto &attack : builtin_attacks()) {
        for (std::size_t lambda = 1; lambda <= 3; ++lambda) {
            const auto game = reduce_ot_attack_to_moe(attack, lambda);
            const double direct = ot_joint_x_guess_probability(attack, lambda);
            CHECK(std::abs(moe_game_value(game, lambda) - direct) < 1e-9);
            CHECK(std::abs(moe_game_value_entangled(game, lambda) - direct) < 1e-9);
            CHECK(direct <= info::moe_bound(lambda) + 1e-9);
        }
    }
    CHECK(std::abs(ot_joint_x_guess_probability(builtin_attack("breidbart"), 1) - kCos2) < 1e-12);
    // Constant guesses: x = 0...0 regardless of theta.
    CHECK(ot_joint_x_guess_probability(builtin_attack("constant"), 2) ==
          doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("random POVMs are valid measurements") {
    Rng rng(10);
    for (std::size_t k = 2; k <= 5; ++k) {
        const auto m = random_povm(k, rng);
        CHECK(m.size() == k);
        double total = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            total += m.probability(i, 0.6, 0.8);
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("MAP guess tables") {
    const auto t = map_guess_table(SingleQubitMeasurement::standard());
    CHECK(t[0][0] == 0);
    CHECK(t[1][0] == 1);
    CHECK(t[0][1] == 0);
    CHECK(t[1][1] == 0);
    const XGuess g{BitString::from_string("1"), BitString::from_string("01"), false, false};
    CHECK(reassemble(g, BitString::from_string("101")).str() == "011");
    CHECK_THROWS_AS(builtin_attack("nope"), std::invalid_argument);
}

TEST_CASE("Clopper-Pearson intervals") {
    auto [lo, hi] = clopper_pearson(0, 10);
    CHECK(lo == 0.0);
    CHECK(hi == doctest::Approx(0.3084971078).epsilon(1e-8));
    std::tie(lo, hi) = clopper_pearson(5, 10);
    CHECK(lo == doctest::Approx(0.1870860).epsilon(1e-6));
    CHECK(hi == doctest::Approx(0.8129140).epsilon(1e-6));
    std::tie(lo, hi) = clopper_pearson(10, 10);
    CHECK(hi == 1.0);
}

TEST_CASE("OT guessing: exact values") {
    for (std::size_t ell = 1; ell <= 3; ++ell) {
        for (std::size_t lambda = 1; lambda <= 4; ++lambda) {
            const auto est = ot_receiver_guess_exact(builtin_attack("honest-b0"), lambda, ell);
            CHECK(est.exact);
            CHECK(std::abs(est.value - std::exp2(-static_cast<double>(ell))) < 1e-12);
        }
    }
    // Golden value: 1/2 + (1/2)(3/4)^4 for the standard-basis attack.
    const auto golden = ot_receiver_guess_exact(builtin_attack("standard-basis"), 4, 1);
    CHECK(golden.value == doctest::Approx(0.658203125).epsilon(1e-12));
    CHECK(golden.value <= 0.5 + info::receiver_advantage_bound(4, 1));
    CHECK_THROWS_AS(ot_receiver_guess_exact(builtin_attack("breidbart"), 7, 1),
                    std::invalid_argument);
}

TEST_CASE("OT guessing: Monte Carlo agrees with exact evaluation") {
    for (const char *id : {"standard-basis", "breidbart", "bb84-four-outcome", "blind"}) {
        const auto attack = builtin_attack(id);
        const auto exact = ot_receiver_guess_exact(attack, 4, 1);
        const auto mc = ot_receiver_guess_sampled(attack, 4, 1, 40000, 9);
        CHECK_FALSE(mc.exact);
        const double sigma = std::sqrt(exact.value * (1 - exact.value) / 40000);
        CHECK(std::abs(mc.value - exact.value) < 3 * sigma);
        CHECK(mc.ci_low <= mc.value);
        CHECK(mc.ci_high >= mc.value);
    }
}

TEST_CASE("distinguisher") {
    for (std::uint8_t c = 0; c < 2; ++c) {
        const auto d = distinguisher_exact(builtin_attack("breidbart"), 4, 1, c);
        CHECK(std::abs(d.accept_uniform - 0.5) < 1e-12);
        CHECK(d.accept_hashed >= 0.5 - 1e-12);
        CHECK(d.advantage >= d.attack_success - 0.5 - 1e-9);
    }
    const auto blind = distinguisher_exact(builtin_attack("blind"), 3, 2, 0);
    CHECK(std::abs(blind.advantage) < 1e-9);
    CHECK(std::abs(blind.accept_uniform - 0.25) < 1e-12);
    const auto sampled = distinguisher_sampled(builtin_attack("breidbart"), 4, 1, 0, 20000, 3);
    const auto exact = distinguisher_exact(builtin_attack("breidbart"), 4, 1, 0);
    CHECK(std::abs(sampled.accept_hashed - exact.accept_hashed) <
          3 * std::sqrt(0.25 / 20000) + 1e-12);
}

TEST_CASE("attack records") {
    const auto ids = attack_registry();
    CHECK(std::find(ids.begin(), ids.end(), "moe-breidbart") != ids.end());
    const auto r = evaluate_attack("double-open-breidbart", 1, 1, true, 1, 0);
    CHECK(r.value == doctest::Approx(kCos2));
    CHECK(r.within_bound());
    const auto j = r.to_json();
    for (const char *key :
         {"attack_id", "lambda", "ell", "mode", "value", "ci_low", "ci_high", "bound", "seed"}) {
        CHECK(j.contains(key));
    }
    const auto moe = evaluate_attack("moe-breidbart", 2, 1, true, 1, 0);
    CHECK(moe.value == doctest::Approx(info::moe_bound(2)));
    const auto mc = evaluate_attack("standard-basis", 40, 1, false, 2000, 5);
    CHECK(mc.mode == "monte-carlo");
    CHECK(mc.within_bound());
    CHECK_THROWS_AS(evaluate_attack("nope", 4, 1, true, 1, 0), std::invalid_argument);
}

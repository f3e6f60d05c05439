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

#include "amnesia/cli/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>

#include "amnesia/adversary/double_open.hpp"
#include "amnesia/adversary/moe.hpp"
#include "amnesia/adversary/ot_attack.hpp"
#include "amnesia/adversary/ot_evaluation.hpp"
#include "amnesia/common/numeric.hpp"
#include "amnesia/info/bounds.hpp"
#include "amnesia/info/lhl.hpp"
#include "amnesia/info/splitting.hpp"

namespace amnesia::cli {

namespace {

constexpr std::uint64_t kMoeStream = 0x6d6f;
constexpr std::uint64_t kSplitStream = 0x7370;
constexpr std::uint64_t kLhlStream = 0x6c68;
constexpr std::uint64_t kBindingStream = 0x6269;

constexpr std::size_t kSplitInstances = 200;
constexpr std::size_t kLhlInstances = 100;
constexpr std::size_t kRandomStrategies = 40;

void add_row(SuiteResult &r, const std::string &check, nlohmann::json lambda, nlohmann::json ell,
             nlohmann::json delta, double value, double bound, bool holds) {
    r.rows.push_back({{"suite", r.name},
                      {"check", check},
                      {"lambda", std::move(lambda)},
                      {"ell", std::move(ell)},
                      {"delta", std::move(delta)},
                      {"value", value},
                      {"bound", bound},
                      {"holds", holds}});
    r.passed = r.passed && holds;
}

void finish(SuiteResult &r) {
    std::size_t failures = 0;
    for (const auto &row : r.rows) {
        failures += row.at("holds").get<bool>() ? 0 : 1;
    }
    r.summary["checks"] = r.rows.size();
    r.summary["failures"] = failures;
    r.summary["passed"] = r.passed;
}

std::vector<std::string> index_labels(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
    }
    return labels;
}

std::vector<std::pair<double, double>> projective_grid(double step) {
    std::vector<std::pair<double, double>> grid;
    const double pi = std::numbers::pi;
    for (std::size_t i = 0; static_cast<double>(i) * step <= pi + 1e-12; ++i) {
        for (std::size_t j = 0; static_cast<double>(j) * step < 2.0 * pi; ++j) {
            grid.emplace_back(std::min(pi, static_cast<double>(i) * step),
                              static_cast<double>(j) * step);
        }
    }
    return grid;
}

// Deterministic response drawn once from rng: a table over (memento, theta).
adversary::MoeStrategy random_response_strategy(std::size_t lambda, Rng &rng) {
    const auto m = adversary::random_povm(2 + rng.below(2), rng);
    std::size_t mementos = 1;
    for (std::size_t i = 0; i < lambda; ++i) {
        mementos *= m.size();
    }
    std::vector<BitString> table;
    for (std::size_t i = 0; i < mementos << lambda; ++i) {
        table.push_back(rng.bits(lambda));
    }
    adversary::MoeStrategy s;
    s.id = "random-response";
    s.per_qubit.assign(lambda, m);
    s.response = [table = std::move(table), k = m.size()](std::span<const std::size_t> w,
                                                          const BitString &theta) {
        std::size_t index = 0;
        for (std::size_t wi : w) {
            index = index * k + wi;
        }
        return table.at((index << theta.size()) | theta.to_uint());
    };
    return s;
}

double max_of(const std::vector<double> &values) {
    return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

} // namespace

std::vector<std::string> verify_suite_names() { return {"binding", "moe", "split", "lhl"}; }

SuiteResult verify_binding(std::uint64_t seed) {
    using namespace adversary;
    SuiteResult r{.name = "binding"};
    const double optimum = info::breidbart_value();

    const double breidbart = double_open_success_exact(breidbart_double_open(), 1);
    add_row(r, "breidbart-exact", 1, nullptr, nullptr, breidbart, optimum,
            std::abs(breidbart - optimum) <= 1e-9);
    const double standard = double_open_success_exact(standard_double_open(), 1);
    add_row(r, "standard-basis-exact", 1, nullptr, nullptr, standard, optimum,
            std::abs(standard - 0.75) <= 1e-12 && standard <= optimum);

    const auto search = double_open_search(0.001);
    add_row(r, "grid-search-0.001", 1, nullptr, nullptr, search.best, optimum,
            search.best <= optimum + 1e-6 && search.best >= optimum - 1e-6);
    r.summary["grid_points"] = search.grid_points;
    r.summary["best_polar"] = search.polar;
    r.summary["best_azimuth"] = search.azimuth;

    const auto best = search.strategy();
    for (std::size_t lambda = 1; lambda <= 6; ++lambda) {
        const double bound = info::binding_bound(lambda);
        const double product = double_open_success_exact(best, lambda);
        const double joint = double_open_success_joint(best, lambda);
        add_row(r, "decay-product", lambda, nullptr, nullptr, product, bound,
                std::abs(product - bound) <= 1e-6);
        add_row(r, "decay-joint", lambda, nullptr, nullptr, joint, bound,
                std::abs(joint - product) <= 1e-9 && std::abs(joint - bound) <= 1e-6);
    }

    constexpr std::uint64_t trials = 20000;
    const double exact3 = info::binding_bound(3);
    const double sampled = double_open_success_sampled(
        breidbart_double_open(), 3, trials, Rng::derive(seed, kBindingStream, 0));
    const double sigma = std::sqrt(exact3 * (1.0 - exact3) / static_cast<double>(trials));
    add_row(r, "breidbart-sampled", 3, nullptr, nullptr, sampled, exact3,
            std::abs(sampled - exact3) <= 3.0 * sigma);
    finish(r);
    return r;
}

SuiteResult verify_moe(std::uint64_t seed) {
    using namespace adversary;
    SuiteResult r{.name = "moe"};
    const auto grid = projective_grid(0.1);
    const auto attacks = builtin_attacks();

    for (std::size_t lambda = 1; lambda <= 4; ++lambda) {
        const double bound = info::moe_bound(lambda);
        const auto grid_values = parallel_map<double>(grid.size(), [&](std::size_t i) {
            const auto m = quantum::SingleQubitMeasurement::projective(grid[i].first,
                                                                       grid[i].second);
            return moe_game_value(product_map_strategy("grid", m, lambda), lambda);
        });
        const double grid_best = max_of(grid_values);
        add_row(r, "product-map-grid-0.1", lambda, nullptr, nullptr, grid_best, bound,
                grid_best <= bound + 1e-9);

        const auto reduced = parallel_map<double>(attacks.size(), [&](std::size_t i) {
            return moe_game_value(reduce_ot_attack_to_moe(attacks[i], lambda), lambda);
        });
        const double reduced_best = max_of(reduced);
        add_row(r, "ot-attack-reductions", lambda, nullptr, nullptr, reduced_best, bound,
                reduced_best <= bound + 1e-9);

        const auto povm_values = parallel_map<double>(kRandomStrategies, [&](std::size_t i) {
            auto rng = Rng::for_trial(seed, kMoeStream, lambda * 1000 + i);
            const auto m = random_povm(2 + rng.below(3), rng);
            return moe_game_value(product_map_strategy("random-povm", m, lambda), lambda);
        });
        const double povm_best = max_of(povm_values);
        add_row(r, "random-povm", lambda, nullptr, nullptr, povm_best, bound,
                povm_best <= bound + 1e-9);

        if (lambda <= 2) {
            const auto table_values = parallel_map<double>(kRandomStrategies, [&](std::size_t i) {
                auto rng = Rng::for_trial(seed, kMoeStream, 100000 + lambda * 1000 + i);
                return moe_game_value(random_response_strategy(lambda, rng), lambda);
            });
            const double table_best = max_of(table_values);
            add_row(r, "random-response", lambda, nullptr, nullptr, table_best, bound,
                    table_best <= bound + 1e-9);
        }
    }

    const auto search = moe_search_single(0.001);
    add_row(r, "grid-search-0.001", 1, nullptr, nullptr, search.best, info::moe_bound(1),
            std::abs(search.best - info::moe_bound(1)) <= 1e-6);

    for (const auto &attack : attacks) {
        for (std::size_t lambda = 1; lambda <= 4; ++lambda) {
            const auto game = reduce_ot_attack_to_moe(attack, lambda);
            const double direct = ot_joint_x_guess_probability(attack, lambda);
            const double collapsed = moe_game_value(game, lambda);
            const double entangled = moe_game_value_entangled(game, lambda);
            const double gap =
                std::max(std::abs(direct - collapsed), std::abs(direct - entangled));
            add_row(r, "reduction-" + attack.id, lambda, nullptr, nullptr, gap, 1e-9,
                    gap <= 1e-9);
        }
    }
    finish(r);
    return r;
}

info::JointDistribution random_split_instance(Rng &rng, std::size_t k) {
    const bool wide = k % 2 == 1;
    const std::size_t n0 = wide ? 8 + rng.below(9) : 2 + rng.below(3);
    const std::size_t n1 = wide ? 8 + rng.below(9) : 2 + rng.below(3);
    const std::size_t nz = wide ? 1 + rng.below(2) : 1 + rng.below(4);
    const double density = wide ? 1.0 : ((k / 2) % 2 == 0 ? 0.25 : 0.8);
    std::vector<std::uint64_t> weights(n0 * n1 * nz, 0);
    bool any = false;
    for (auto &w : weights) {
        if (rng.uniform() < density) {
            w = wide ? 4 + rng.below(12) : 1 + rng.below(15);
            any = true;
        }
    }
    if (!any) {
        weights[rng.below(weights.size())] = 1;
    }
    return info::JointDistribution::from_weights(
        {{"x0", index_labels(n0)}, {"x1", index_labels(n1)}, {"z", index_labels(nz)}},
        std::move(weights));
}

SuiteResult verify_split(std::uint64_t seed) {
    SuiteResult r{.name = "split"};
    constexpr std::array<double, 2> deltas = {0.25, 0.125};
    const std::array<std::size_t, 1> cond = {2};
    const auto results = parallel_map<std::array<info::SplitResult, 2>>(
        kSplitInstances, [&](std::size_t k) {
            auto rng = Rng::for_trial(seed, kSplitStream, k);
            const auto d = random_split_instance(rng, k);
            return std::array<info::SplitResult, 2>{
                info::min_entropy_split(d, 0, 1, cond, deltas[0]),
                info::min_entropy_split(d, 0, 1, cond, deltas[1])};
        });
    std::size_t exhaustive = 0;
    for (std::size_t k = 0; k < results.size(); ++k) {
        for (const auto &s : results[k]) {
            bool holds = s.holds;
            if (s.exhaustive_best) {
                ++exhaustive;
                holds = holds && *s.exhaustive_best >= s.achieved - 1e-9 &&
                        *s.exhaustive_best >= s.bound - 1e-9;
            }
            add_row(r, "instance-" + std::to_string(k), nullptr, nullptr, s.delta, s.achieved,
                    s.bound, holds);
        }
    }
    r.summary["instances"] = kSplitInstances;
    r.summary["exhaustive_checks"] = exhaustive;
    finish(r);
    return r;
}

LhlInstance random_lhl_instance(Rng &rng, std::size_t k) {
    constexpr std::array<double, 3> deltas = {0.0, 1.0 / 32.0, 1.0 / 8.0};
    const std::size_t m = 2 + rng.below(5);
    const std::size_t ell = 1 + rng.below(3);
    std::vector<std::string> xs;
    for (std::size_t len = 0; len <= m; ++len) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
            if (rng.bit()) {
                xs.push_back(BitString::from_uint(v, len).str());
            }
        }
    }
    while (xs.size() < 2) {
        const auto s = BitString::from_uint(xs.size() + 2, m).str();
        if (std::find(xs.begin(), xs.end(), s) == xs.end()) {
            xs.push_back(s);
        }
    }
    const std::size_t ny = 1 + rng.below(3);
    std::vector<std::uint64_t> weights(xs.size() * ny);
    for (auto &w : weights) {
        w = rng.uniform() < 0.8 ? 1 + rng.below(16) : 0;
    }
    if (std::all_of(weights.begin(), weights.end(), [](auto w) { return w == 0; })) {
        weights[0] = 1;
    }
    auto table = info::JointDistribution::from_weights(
        {{"x", std::move(xs)}, {"y", index_labels(ny)}}, std::move(weights));
    return {std::move(table), m, ell, deltas[k % deltas.size()]};
}

SuiteResult verify_lhl(std::uint64_t seed) {
    SuiteResult r{.name = "lhl"};
    const std::array<std::size_t, 1> cond = {1};
    struct Outcome {
        LhlInstance instance;
        info::LhlReport report;
    };
    const auto results = parallel_map<std::optional<Outcome>>(kLhlInstances, [&](std::size_t k) {
        auto rng = Rng::for_trial(seed, kLhlStream, k);
        auto inst = random_lhl_instance(rng, k);
        auto report =
            info::lhl_verify(inst.table, 0, cond, inst.max_input_len, inst.ell, inst.delta);
        return std::optional<Outcome>(Outcome{std::move(inst), std::move(report)});
    });
    std::size_t held = 0;
    double worst_l1_ratio = 0.0;
    for (std::size_t k = 0; k < results.size(); ++k) {
        const auto &[inst, rep] = *results[k];
        held += rep.holds ? 1 : 0;
        worst_l1_ratio = std::max(worst_l1_ratio, rep.lhs_l1 / rep.rhs);
        add_row(r, "instance-" + std::to_string(k), nullptr, inst.ell, inst.delta, rep.lhs,
                rep.rhs, rep.holds);
    }
    r.summary["instances"] = kLhlInstances;
    r.summary["held"] = held;
    r.summary["max_unnormalized_lhs_over_rhs"] = worst_l1_ratio;
    finish(r);
    return r;
}

SuiteResult run_suite(const std::string &name, std::uint64_t seed) {
    if (name == "binding") {
        return verify_binding(seed);
    }
    if (name == "moe") {
        return verify_moe(seed);
    }
    if (name == "split") {
        return verify_split(seed);
    }
    if (name == "lhl") {
        return verify_lhl(seed);
    }
    throw std::invalid_argument("unknown verification suite '" + name + "'");
}

} // namespace amnesia::cli

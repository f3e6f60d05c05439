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

#include "amnesia/adversary/records.hpp"

#include <cmath>
#include <stdexcept>

#include "amnesia/adversary/double_open.hpp"
#include "amnesia/adversary/moe.hpp"
#include "amnesia/adversary/ot_attack.hpp"
#include "amnesia/adversary/ot_evaluation.hpp"
#include "amnesia/info/bounds.hpp"

namespace amnesia::adversary {

nlohmann::json AttackRecord::to_json() const {
    return {{"attack_id", attack_id}, {"lambda", lambda}, {"ell", ell},
            {"mode", mode},           {"value", value},   {"ci_low", ci_low},
            {"ci_high", ci_high},     {"bound", bound},   {"seed", seed}};
}

std::vector<std::string> attack_registry() {
    auto ids = builtin_attack_ids();
    ids.insert(ids.end(), {"double-open-breidbart", "double-open-standard", "moe-breidbart"});
    return ids;
}

AttackRecord evaluate_attack(const std::string &id, std::size_t lambda, std::size_t ell,
                             bool exact, std::uint64_t trials, std::uint64_t seed) {
    if (lambda == 0) {
        throw std::invalid_argument("evaluate_attack: lambda must be positive");
    }
    AttackRecord rec;
    rec.attack_id = id;
    rec.lambda = lambda;
    rec.ell = ell;
    rec.seed = seed;

    if (id == "double-open-breidbart" || id == "double-open-standard") {
        const auto st = id == "double-open-breidbart" ? breidbart_double_open()
                                                      : standard_double_open();
        rec.bound = info::binding_bound(lambda);
        if (exact) {
            rec.mode = "exact";
            rec.value = double_open_success_exact(st, lambda);
            rec.ci_low = rec.ci_high = rec.value;
        } else {
            rec.mode = "monte-carlo";
            rec.value = double_open_success_sampled(st, lambda, trials, seed);
            const auto hits = static_cast<std::uint64_t>(
                std::llround(rec.value * static_cast<double>(trials)));
            std::tie(rec.ci_low, rec.ci_high) = clopper_pearson(hits, trials);
        }
        return rec;
    }
    if (id == "moe-breidbart") {
        rec.mode = "exact";
        rec.bound = info::moe_bound(lambda);
        rec.value = moe_game_value(
            product_map_strategy(id, quantum::SingleQubitMeasurement::breidbart(), lambda), lambda);
        rec.ci_low = rec.ci_high = rec.value;
        return rec;
    }

    const auto attack = builtin_attack(id);
    if (ell == 0) {
        throw std::invalid_argument("evaluate_attack: ell must be positive");
    }
    rec.bound = std::exp2(-static_cast<double>(ell)) + info::receiver_advantage_bound(lambda, ell);
    const auto est = exact ? ot_receiver_guess_exact(attack, lambda, ell)
                           : ot_receiver_guess_sampled(attack, lambda, ell, trials, seed);
    rec.mode = est.exact ? "exact" : "monte-carlo";
    rec.value = est.value;
    rec.ci_low = est.ci_low;
    rec.ci_high = est.ci_high;
    return rec;
}

} // namespace amnesia::adversary

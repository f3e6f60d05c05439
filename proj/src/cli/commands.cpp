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

#include "amnesia/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <utility>

#include "amnesia/adversary/ot_evaluation.hpp"
#include "amnesia/adversary/records.hpp"
#include "amnesia/cli/report.hpp"
#include "amnesia/cli/verify.hpp"
#include "amnesia/common/numeric.hpp"
#include "amnesia/info/bounds.hpp"
#include "amnesia/protocol/commitment.hpp"
#include "amnesia/protocol/flip.hpp"

namespace amnesia::cli {

namespace {

constexpr std::uint64_t kSessionStream = 0x7365;
constexpr std::uint64_t kChoiceStream = 0x6368;
constexpr std::uint64_t kAliceStream = 0x616c;
constexpr std::uint64_t kBobStream = 0x626f;
constexpr std::uint64_t kGuessStream = 0x6775;
constexpr std::uint64_t kInputStream = 0x696e;

bool is_honest(const std::string &adversary) {
    return adversary.empty() || adversary == "honest";
}

std::string digest(const protocol::Transcript &t) {
    const auto bytes = t.to_bytes();
    return sha256_hex(bytes);
}

// Digest of every per-trial digest, in trial order.
std::string combined_digest(const nlohmann::json &rows) {
    std::string all;
    for (const auto &row : rows) {
        all += row.at("transcript_sha256").get<std::string>();
    }
    return sha256_hex(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t *>(all.data()), all.size()));
}

double rate(std::uint64_t count, std::uint64_t trials) {
    return static_cast<double>(count) / static_cast<double>(trials);
}

nlohmann::json make_report(const ExperimentConfig &config, std::vector<std::string> columns,
                           nlohmann::json rows, nlohmann::json summary, bool passed) {
    auto report = report_header(config);
    report["columns"] = std::move(columns);
    report["rows"] = std::move(rows);
    report["summary"] = std::move(summary);
    report["passed"] = passed;
    return report;
}

void require_adversary(const ExperimentConfig &config, const std::vector<std::string> &known) {
    if (!is_honest(config.adversary) &&
        std::find(known.begin(), known.end(), config.adversary) == known.end()) {
        throw UsageError("unknown adversary '" + config.adversary + "' for " +
                         config.subcommand);
    }
}

} // namespace

std::vector<std::string> commit_adversaries() {
    return {"honest", "hold-through-stall", "breidbart"};
}

std::vector<std::string> flip_adversaries() { return {"honest", "breidbart"}; }

AttackRotReceiver::AttackRotReceiver(adversary::MementoOtStrategy attack, std::size_t ell,
                                     Rng rng)
    : attack_(std::move(attack)), ell_(ell), rng_(rng) {}

void AttackRotReceiver::before_stall(quantum::QuantumRegister &reg, Rng &rng) {
    const std::vector<quantum::SingleQubitMeasurement> per_qubit(reg.qubits(),
                                                                 attack_.measurement);
    memento_ = quantum::measure_product_povm_indices(reg, per_qubit, rng);
}

void AttackRotReceiver::on_hashes(const protocol::Hashes &hashes) {
    auto g = attack_.guess(memento_, hashes.theta, hashes.h0, hashes.h1);
    BitString m0 = g.m0 ? *g.m0 : rng_.bits(ell_);
    BitString m1 = g.m1 ? *g.m1 : rng_.bits(ell_);
    guess_.emplace(std::move(m0), std::move(m1));
}

CommandResult cmd_commit(const ExperimentConfig &config) {
    require_adversary(config, commit_adversaries());
    struct Trial {
        std::uint8_t b = 0;
        bool accepted = false;
        bool both = false;
        std::size_t forced = 0;
        std::size_t backward = 0;
        std::string sha;
    };
    const auto trials = parallel_map<Trial>(config.trials, [&](std::size_t i) {
        const std::uint8_t b = Rng::for_trial(config.seed, kChoiceStream, i).bit();
        std::unique_ptr<protocol::CommitterStrategy> committer;
        if (is_honest(config.adversary)) {
            committer = std::make_unique<protocol::HonestCommitter>(b);
        } else if (config.adversary == "hold-through-stall") {
            committer = std::make_unique<protocol::HoldingCommitter>();
        } else {
            committer = std::make_unique<protocol::DoubleOpeningCommitter>(
                protocol::DoubleOpeningCommitter::breidbart());
        }
        protocol::CommitSessionOptions options;
        options.seed = Rng::derive(config.seed, kSessionStream, i);
        options.open_value = b;
        const auto s = protocol::run_amcom(config.lambda, *committer, options);
        const auto zero = committer->open(0);
        const auto one = committer->open(1);
        Trial t;
        t.b = b;
        t.accepted = s.verdict == protocol::Verdict(protocol::Accept{b});
        t.both = zero.b == 0 && one.b == 1 &&
                 protocol::accepted(protocol::amcom_verify(s.receiver, 0, zero.sigma)) &&
                 protocol::accepted(protocol::amcom_verify(s.receiver, 1, one.sigma));
        t.forced = s.forced_measurements;
        t.backward = s.commit_phase_backward_bytes;
        t.sha = digest(s.transcript);
        return t;
    });

    nlohmann::json rows = nlohmann::json::array();
    std::uint64_t accepted = 0, both = 0, backward = 0, forced = 0;
    for (std::size_t i = 0; i < trials.size(); ++i) {
        const auto &t = trials[i];
        accepted += t.accepted;
        both += t.both;
        backward += t.backward;
        forced += t.forced;
        rows.push_back({{"trial", i},
                        {"b", t.b},
                        {"accepted", t.accepted},
                        {"both_openings_verify", t.both},
                        {"forced_measurements", t.forced},
                        {"commit_phase_backward_bytes", t.backward},
                        {"transcript_sha256", t.sha}});
    }
    const bool honest = is_honest(config.adversary);
    const double acceptance = rate(accepted, config.trials);
    const bool passed = backward == 0 && (!honest || accepted == config.trials);
    nlohmann::json summary{{"adversary", honest ? "honest" : config.adversary},
                           {"acceptance_rate", acceptance},
                           {"double_open_rate", rate(both, config.trials)},
                           {"double_open_bound", info::binding_bound(config.lambda)},
                           {"commit_phase_backward_bytes", backward},
                           {"forced_measurements", forced},
                           {"transcripts_sha256", combined_digest(rows)}};
    return {make_report(config,
                        {"trial", "b", "accepted", "both_openings_verify", "forced_measurements",
                         "commit_phase_backward_bytes", "transcript_sha256"},
                        std::move(rows), std::move(summary), passed),
            passed};
}

CommandResult cmd_rot(const ExperimentConfig &config) {
    const auto attacks = adversary::builtin_attack_ids();
    require_adversary(config, attacks);
    const bool honest = is_honest(config.adversary);
    struct Trial {
        std::uint8_t b = 0;
        BitString m0, m1, output;
        bool match = false;
        bool guessed = false;
        std::size_t forced = 0;
        std::size_t backward = 0;
        std::string sha;
    };
    const auto trials = parallel_map<Trial>(config.trials, [&](std::size_t i) {
        protocol::RotSessionOptions options;
        options.seed = Rng::derive(config.seed, kSessionStream, i);
        Trial t;
        if (honest) {
            t.b = Rng::for_trial(config.seed, kChoiceStream, i).bit();
            protocol::HonestRotReceiver receiver(t.b);
            const auto s = protocol::run_amrot(config.lambda, config.ell, receiver, options);
            t.m0 = s.outputs.m0;
            t.m1 = s.outputs.m1;
            t.output = receiver.output().value_or(BitString());
            t.match = t.output == (t.b == 0 ? t.m0 : t.m1);
            t.forced = s.forced_measurements;
            t.backward = s.transcript.classical_bytes(protocol::Direction::kBackward);
            t.sha = digest(s.transcript);
        } else {
            AttackRotReceiver receiver(adversary::builtin_attack(config.adversary), config.ell,
                                       Rng::for_trial(config.seed, kGuessStream, i));
            const auto s = protocol::run_amrot(config.lambda, config.ell, receiver, options);
            t.m0 = s.outputs.m0;
            t.m1 = s.outputs.m1;
            const auto &g = *receiver.guess();
            t.output = g.first;
            t.output.append(g.second);
            t.guessed = g.first == t.m0 && g.second == t.m1;
            t.forced = s.forced_measurements;
            t.backward = s.transcript.classical_bytes(protocol::Direction::kBackward);
            t.sha = digest(s.transcript);
        }
        return t;
    });

    nlohmann::json rows = nlohmann::json::array();
    std::uint64_t matches = 0, guessed = 0, backward = 0, forced = 0;
    for (std::size_t i = 0; i < trials.size(); ++i) {
        const auto &t = trials[i];
        matches += t.match;
        guessed += t.guessed;
        backward += t.backward;
        forced += t.forced;
        nlohmann::json row{{"trial", i},
                           {"m0", t.m0.str()},
                           {"m1", t.m1.str()},
                           {"forced_measurements", t.forced},
                           {"receiver_to_sender_bytes", t.backward},
                           {"transcript_sha256", t.sha}};
        if (honest) {
            row["choice"] = t.b;
            row["output"] = t.output.str();
            row["match"] = t.match;
        } else {
            row["guess"] = t.output.str();
            row["guessed_both"] = t.guessed;
        }
        rows.push_back(std::move(row));
    }
    nlohmann::json summary{{"adversary", honest ? "honest" : config.adversary},
                           {"receiver_to_sender_bytes", backward},
                           {"forced_measurements", forced},
                           {"transcripts_sha256", combined_digest(rows)}};
    bool passed = backward == 0;
    std::vector<std::string> columns{"trial", "m0", "m1"};
    if (honest) {
        summary["match_rate"] = rate(matches, config.trials);
        passed = passed && matches == config.trials;
        columns.insert(columns.end(), {"choice", "output", "match"});
    } else {
        const double bound = std::exp2(-static_cast<double>(config.ell)) +
                             info::receiver_advantage_bound(config.lambda, config.ell);
        const auto [low, high] = adversary::clopper_pearson(guessed, config.trials);
        summary["guess_rate"] = rate(guessed, config.trials);
        summary["guess_ci_low"] = low;
        summary["guess_ci_high"] = high;
        summary["guess_bound"] = bound;
        columns.insert(columns.end(), {"guess", "guessed_both"});
    }
    columns.insert(columns.end(),
                   {"forced_measurements", "receiver_to_sender_bytes", "transcript_sha256"});
    return {make_report(config, std::move(columns), std::move(rows), std::move(summary), passed),
            passed};
}

CommandResult cmd_flip(const ExperimentConfig &config) {
    require_adversary(config, flip_adversaries());
    const bool honest = is_honest(config.adversary);
    const auto trials = parallel_map<protocol::FlipResult>(config.trials, [&](std::size_t i) {
        Rng alice = Rng::for_trial(config.seed, kAliceStream, i);
        Rng bob = Rng::for_trial(config.seed, kBobStream, i);
        protocol::FlipOptions options;
        options.lambda = config.lambda;
        if (honest) {
            return protocol::amflip_run(alice, bob, options);
        }
        auto committer = protocol::DoubleOpeningCommitter::breidbart();
        const protocol::CheatingAlice cheat{&committer, alice.bit()};
        return protocol::amflip_run(alice, bob, options, &cheat);
    });

    nlohmann::json rows = nlohmann::json::array();
    std::uint64_t ones = 0, aborts = 0, both = 0, forced = 0;
    for (std::size_t i = 0; i < trials.size(); ++i) {
        const auto &f = trials[i];
        ones += f.c_b.value_or(0);
        aborts += f.c_b ? 0 : 1;
        both += f.both_openings_verify;
        forced += f.forced_measurements;
        rows.push_back({{"trial", i},
                        {"a", f.a},
                        {"b", f.b},
                        {"c", f.c_b ? nlohmann::json(*f.c_b) : nlohmann::json(nullptr)},
                        {"aborted", !f.c_b},
                        {"both_openings_verify", f.both_openings_verify},
                        {"forced_measurements", f.forced_measurements},
                        {"transcript_sha256", digest(f.transcript)}});
    }
    const double n = static_cast<double>(config.trials);
    const std::uint64_t completed = config.trials - aborts;
    const double bias = completed ? rate(ones, completed) - 0.5 : 0.0;
    const double steer = rate(both, config.trials);
    const double bound = info::binding_bound(config.lambda);
    nlohmann::json summary{{"adversary", honest ? "honest" : config.adversary},
                           {"bias", bias},
                           {"abort_rate", rate(aborts, config.trials)},
                           {"both_openings_rate", steer},
                           {"steering_bound", bound},
                           {"forced_measurements", forced},
                           {"transcripts_sha256", combined_digest(rows)}};
    bool passed = false;
    if (honest) {
        const double band = 3.0 * 0.5 / std::sqrt(n);
        summary["bias_band"] = band;
        passed = aborts == 0 && std::abs(bias) <= band;
    } else {
        const double band = 3.0 * std::sqrt(bound * (1.0 - bound) / n);
        summary["steering_band"] = band;
        passed = steer <= bound + band;
    }
    return {make_report(config,
                        {"trial", "a", "b", "c", "aborted", "both_openings_verify",
                         "forced_measurements", "transcript_sha256"},
                        std::move(rows), std::move(summary), passed),
            passed};
}

CommandResult cmd_ot_wrap(const ExperimentConfig &config) {
    BitString m0, m1;
    try {
        m0 = BitString::from_string(config.m0);
        m1 = BitString::from_string(config.m1);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("--m0/--m1: ") + e.what());
    }
    struct Trial {
        BitString m0, m1, output;
        std::uint8_t b = 0;
        std::string sha;
    };
    const auto trials = parallel_map<Trial>(config.trials, [&](std::size_t i) {
        Trial t{m0, m1, BitString(), static_cast<std::uint8_t>(config.choice), ""};
        if (i > 0) {
            Rng rng = Rng::for_trial(config.seed, kInputStream, i);
            t.m0 = rng.bits(m0.size());
            t.m1 = rng.bits(m0.size());
            t.b = rng.bit();
        }
        const auto r = protocol::run_ot_wrap(config.lambda, t.m0, t.m1, t.b,
                                             Rng::derive(config.seed, kSessionStream, i));
        t.output = r.output;
        t.sha = digest(r.session.transcript);
        return t;
    });
    nlohmann::json rows = nlohmann::json::array();
    std::uint64_t correct = 0;
    for (std::size_t i = 0; i < trials.size(); ++i) {
        const auto &t = trials[i];
        const bool ok = t.output == (t.b == 0 ? t.m0 : t.m1);
        correct += ok;
        rows.push_back({{"trial", i},
                        {"m0", t.m0.str()},
                        {"m1", t.m1.str()},
                        {"choice", t.b},
                        {"output", t.output.str()},
                        {"correct", ok},
                        {"transcript_sha256", t.sha}});
    }
    const bool passed = correct == config.trials;
    nlohmann::json summary{{"output", trials.front().output.str()},
                           {"branch_correct_rate", rate(correct, config.trials)},
                           {"transcripts_sha256", combined_digest(rows)}};
    return {make_report(config,
                        {"trial", "m0", "m1", "choice", "output", "correct", "transcript_sha256"},
                        std::move(rows), std::move(summary), passed),
            passed};
}

CommandResult cmd_attack(const ExperimentConfig &config) {
    const auto registry = adversary::attack_registry();
    if (std::find(registry.begin(), registry.end(), config.adversary) == registry.end()) {
        throw UsageError("unknown adversary '" + config.adversary + "' for attack");
    }
    const auto record = adversary::evaluate_attack(config.adversary, config.lambda, config.ell,
                                                   config.exact, config.trials, config.seed);
    auto row = record.to_json();
    row["within_bound"] = record.within_bound();
    const bool passed = record.within_bound();
    nlohmann::json summary{{"attack_id", record.attack_id},
                           {"mode", record.mode},
                           {"value", record.value},
                           {"bound", record.bound},
                           {"within_bound", passed}};
    return {make_report(config,
                        {"attack_id", "lambda", "ell", "mode", "value", "ci_low", "ci_high",
                         "bound", "seed", "within_bound"},
                        nlohmann::json::array({row}), std::move(summary), passed),
            passed};
}

CommandResult cmd_verify(const ExperimentConfig &config) {
    std::vector<std::string> suites;
    if (config.suite == "all") {
        suites = verify_suite_names();
    } else {
        const auto known = verify_suite_names();
        if (std::find(known.begin(), known.end(), config.suite) == known.end()) {
            throw UsageError("unknown verification suite '" + config.suite + "'");
        }
        suites.push_back(config.suite);
    }
    nlohmann::json rows = nlohmann::json::array();
    nlohmann::json summary = nlohmann::json::object();
    bool passed = true;
    for (const auto &name : suites) {
        auto r = run_suite(name, config.seed);
        passed = passed && r.passed;
        summary[name] = std::move(r.summary);
        for (auto &row : r.rows) {
            rows.push_back(std::move(row));
        }
    }
    return {make_report(config, kVerifyColumns, std::move(rows), std::move(summary), passed),
            passed};
}

CommandResult run_command(const ExperimentConfig &config) {
    config.validate();
    const auto &c = config.subcommand;
    if (c == "commit") {
        return cmd_commit(config);
    }
    if (c == "rot") {
        return cmd_rot(config);
    }
    if (c == "flip") {
        return cmd_flip(config);
    }
    if (c == "ot-wrap") {
        return cmd_ot_wrap(config);
    }
    if (c == "attack") {
        return cmd_attack(config);
    }
    if (c == "verify") {
        return cmd_verify(config);
    }
    throw UsageError("unknown subcommand '" + c + "'");
}

} // namespace amnesia::cli

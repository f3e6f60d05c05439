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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amnesia/adversary/ot_attack.hpp"
#include "amnesia/cli/config.hpp"
#include "amnesia/common/rng.hpp"
#include "amnesia/protocol/rot.hpp"

#include "json.hpp"

namespace amnesia::cli {

struct CommandResult {
    nlohmann::json report;
    bool passed = true;
};

/// Committer adversaries accepted by `commit`: honest, hold-through-stall, breidbart.
std::vector<std::string> commit_adversaries();
/// Alice adversaries accepted by `flip`: honest, breidbart.
std::vector<std::string> flip_adversaries();

/**
 * @brief Runs a memento OT attack as the receiver of a live AmROT session.
 *
 * Measures every qubit with the attack's measurement before the stall and
 * guesses (m0, m1) once the hashes arrive. Sides the attack leaves uniform
 * are filled from `rng`.
 */
class AttackRotReceiver final : public protocol::RotReceiverStrategy {
  public:
    AttackRotReceiver(adversary::MementoOtStrategy attack, std::size_t ell, Rng rng);
    [[nodiscard]] std::string id() const override { return attack_.id; }
    void before_stall(quantum::QuantumRegister &reg, Rng &rng) override;
    void on_hashes(const protocol::Hashes &hashes) override;
    [[nodiscard]] const std::optional<std::pair<BitString, BitString>> &guess() const {
        return guess_;
    }

  private:
    adversary::MementoOtStrategy attack_;
    std::size_t ell_;
    Rng rng_;
    adversary::Memento memento_;
    std::optional<std::pair<BitString, BitString>> guess_;
};

/// Runs config.trials commitment sessions and reports acceptance and structure.
CommandResult cmd_commit(const ExperimentConfig &config);
/// Runs config.trials random OT sessions against an honest or attacking receiver.
CommandResult cmd_rot(const ExperimentConfig &config);
/// Runs config.trials coin flips with an honest or Breidbart-steering Alice.
CommandResult cmd_flip(const ExperimentConfig &config);
/// Chosen-input OT of (m0, m1) with choice bit, then trials - 1 runs on random inputs.
CommandResult cmd_ot_wrap(const ExperimentConfig &config);
/// Evaluates one registered attack against its bound.
CommandResult cmd_attack(const ExperimentConfig &config);
/// Runs one suite, or all of them, and reports every check.
CommandResult cmd_verify(const ExperimentConfig &config);

/// Validates the config and dispatches on config.subcommand.
CommandResult run_command(const ExperimentConfig &config);

} // namespace amnesia::cli

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
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "amnesia/common/rng.hpp"
#include "amnesia/protocol/channel.hpp"
#include "amnesia/protocol/message.hpp"
#include "amnesia/quantum/register.hpp"

namespace amnesia::protocol {

struct Accept {
    std::uint8_t b = 0;
    friend bool operator==(const Accept &, const Accept &) = default;
};

struct Abort {
    std::string reason;
    friend bool operator==(const Abort &, const Abort &) = default;
};

using Verdict = std::variant<Accept, Abort>;

inline bool accepted(const Verdict &v) { return std::holds_alternative<Accept>(v); }

struct CommitReceiverState {
    quantum::BB84Secret secret;
};

struct CommitterState {
    std::uint8_t b = 0;
    BitString sigma;
};

struct PreparerInit {
    quantum::BB84Secret secret;
    std::vector<Message> messages; ///< QUANTUM register, then STALL
};

/// Validates 1 <= lambda <= 24.
void check_lambda(std::size_t lambda);

/// Samples (a, theta) and emits H^theta|a> followed by a stall.
PreparerInit prepare_and_stall(std::size_t lambda, Rng &rng);
PreparerInit prepare_and_stall(quantum::BB84Secret secret);

std::pair<CommitReceiverState, std::vector<Message>> amcom_receiver_init(std::size_t lambda,
                                                                         Rng &rng);
CommitterState amcom_committer_commit(std::uint8_t b, quantum::QuantumRegister &reg, Rng &rng);
Message amcom_reveal(const CommitterState &cs);
/// Accept(b) iff sigma agrees with a on every position i with theta_i = b.
Verdict amcom_verify(const CommitReceiverState &rs, std::uint8_t b, const BitString &sigma);

/**
 * @brief Committer behaviour during one commitment session.
 *
 * before_stall() sees the register while it is still live; anything left
 * unmeasured is measured by the stall, and after_stall() receives that
 * outcome. open() must be a pure function of the state gathered so far, so
 * that both possible openings can be examined.
 */
class CommitterStrategy {
  public:
    virtual ~CommitterStrategy() = default;
    [[nodiscard]] virtual std::string id() const = 0;
    virtual void before_stall(quantum::QuantumRegister &reg, Rng &rng) = 0;
    virtual void after_stall(const HeldRegister &held) { (void)held; }
    [[nodiscard]] virtual Reveal open(std::uint8_t value) const = 0;
};

/// Honest committer to a fixed bit: measures in basis b before the stall.
class HonestCommitter final : public CommitterStrategy {
  public:
    explicit HonestCommitter(std::uint8_t b) : b_(b) {}
    [[nodiscard]] std::string id() const override { return "honest"; }
    void before_stall(quantum::QuantumRegister &reg, Rng &rng) override;
    [[nodiscard]] Reveal open(std::uint8_t value) const override;
    [[nodiscard]] const CommitterState &state() const { return state_; }

  private:
    std::uint8_t b_;
    CommitterState state_;
};

/// Keeps the register through the stall and opens with whatever decoherence left.
class HoldingCommitter final : public CommitterStrategy {
  public:
    [[nodiscard]] std::string id() const override { return "hold-through-stall"; }
    void before_stall(quantum::QuantumRegister &reg, Rng &rng) override;
    void after_stall(const HeldRegister &held) override;
    [[nodiscard]] Reveal open(std::uint8_t value) const override;

  private:
    BitString memento_;
};

/**
 * @brief Measures every qubit with a four-outcome POVM labelled "st" and
 * opens value 0 with the s bits and value 1 with the t bits.
 */
class DoubleOpeningCommitter final : public CommitterStrategy {
  public:
    DoubleOpeningCommitter(std::string id, quantum::SingleQubitMeasurement measurement);
    /// Breidbart basis: outcome k gives s = t = k.
    static DoubleOpeningCommitter breidbart();

    [[nodiscard]] std::string id() const override { return id_; }
    void before_stall(quantum::QuantumRegister &reg, Rng &rng) override;
    [[nodiscard]] Reveal open(std::uint8_t value) const override;

  private:
    std::string id_;
    quantum::SingleQubitMeasurement measurement_;
    BitString s_;
    BitString t_;
};

struct CommitSessionOptions {
    std::uint64_t seed = 0;
    std::optional<quantum::BB84Secret> secret; ///< overrides the receiver's sampling
    std::uint8_t open_value = 0;               ///< value the committer is asked to open
};

struct CommitSession {
    Transcript transcript{"receiver->committer", "committer->receiver"};
    CommitReceiverState receiver;
    Reveal reveal;
    Verdict verdict;
    std::size_t forced_measurements = 0;
    std::size_t commit_phase_backward_bytes = 0;
};

/// Runs one AmCom session against the given committer.
CommitSession run_amcom(std::size_t lambda, CommitterStrategy &committer,
                        const CommitSessionOptions &options);

} // namespace amnesia::protocol

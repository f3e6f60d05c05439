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
#include <utility>
#include <vector>

#include "amnesia/common/rng.hpp"
#include "amnesia/hashing/toeplitz.hpp"
#include "amnesia/protocol/channel.hpp"
#include "amnesia/protocol/commitment.hpp"
#include "amnesia/protocol/message.hpp"

namespace amnesia::protocol {

struct RotSenderState {
    enum class Phase { kPrepared, kStalled, kHashed };
    Phase phase = Phase::kPrepared;
    quantum::BB84Secret secret; ///< x and theta
    std::optional<hashing::HashDescriptor> h0;
    std::optional<hashing::HashDescriptor> h1;
};

struct RotReceiverState {
    std::uint8_t b = 0;
    BitString sigma;
};

struct RotOutputs {
    BitString m0;
    BitString m1;
};

/// x_c: bits of x at positions i with theta_i = c, in increasing order of i.
BitString consistent_part(const BitString &x, const BitString &theta, std::uint8_t c);

std::pair<RotSenderState, std::vector<Message>> amrot_sender_init(std::size_t lambda, Rng &rng);
RotReceiverState amrot_receiver_measure(std::uint8_t b, quantum::QuantumRegister &reg, Rng &rng);
/// Marks that the stall has been delivered; hashing is only allowed afterwards.
void amrot_sender_stalled(RotSenderState &ss);
/**
 * Samples h0, h1 over inputs of at most lambda bits and sets m_c = h_c(x_c).
 * Throws std::logic_error unless the stall has passed.
 */
std::pair<RotOutputs, Message> amrot_sender_hash(RotSenderState &ss, std::size_t ell, Rng &rng);
/// r = h_b(sigma_b).
BitString amrot_receiver_finish(const RotReceiverState &rs, const Hashes &hashes);

class RotReceiverStrategy {
  public:
    virtual ~RotReceiverStrategy() = default;
    [[nodiscard]] virtual std::string id() const = 0;
    virtual void before_stall(quantum::QuantumRegister &reg, Rng &rng) = 0;
    virtual void after_stall(const HeldRegister &held) { (void)held; }
    virtual void on_hashes(const Hashes &hashes) = 0;
};

class HonestRotReceiver final : public RotReceiverStrategy {
  public:
    explicit HonestRotReceiver(std::uint8_t b) : b_(b) {}
    [[nodiscard]] std::string id() const override { return "honest"; }
    void before_stall(quantum::QuantumRegister &reg, Rng &rng) override;
    void on_hashes(const Hashes &hashes) override;
    [[nodiscard]] const std::optional<BitString> &output() const { return output_; }
    [[nodiscard]] std::uint8_t choice() const { return b_; }

  private:
    std::uint8_t b_;
    RotReceiverState state_;
    std::optional<BitString> output_;
};

struct RotSessionOptions {
    std::uint64_t seed = 0;
    std::optional<quantum::BB84Secret> secret;
};

struct RotSession {
    Transcript transcript{"sender->receiver", "receiver->sender"};
    RotSenderState sender;
    RotOutputs outputs;
    Hashes hashes;
    std::size_t forced_measurements = 0;
};

RotSession run_amrot(std::size_t lambda, std::size_t ell, RotReceiverStrategy &receiver,
                     const RotSessionOptions &options);

struct OtWrapResult {
    BitString output;
    RotSession session;
};

/**
 * Chosen-input OT from one random OT: the sender sends (m0 ^ r0, m1 ^ r1)
 * and the receiver unmasks branch b with its output r_b.
 */
OtWrapResult run_ot_wrap(std::size_t lambda, const BitString &m0, const BitString &m1,
                         std::uint8_t b, std::uint64_t seed);

} // namespace amnesia::protocol

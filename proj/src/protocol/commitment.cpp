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

#include "amnesia/protocol/commitment.hpp"

#include <stdexcept>

namespace amnesia::protocol {

namespace {

constexpr std::uint64_t kPreparerStream = 1;
constexpr std::uint64_t kPeerStream = 2;
constexpr std::uint64_t kChannelStream = 3;

void check_bit(std::uint8_t b, const char *op) {
    if (b > 1) {
        throw std::invalid_argument(std::string(op) + ": bit must be 0 or 1");
    }
}

} // namespace

void check_lambda(std::size_t lambda) {
    if (lambda == 0 || lambda > quantum::kMaxQubits) {
        throw std::invalid_argument("lambda must be in [1, 24], got " + std::to_string(lambda));
    }
}

PreparerInit prepare_and_stall(std::size_t lambda, Rng &rng) {
    check_lambda(lambda);
    quantum::BB84Secret secret;
    secret.a = rng.bits(lambda);
    secret.theta = rng.bits(lambda);
    return prepare_and_stall(std::move(secret));
}

PreparerInit prepare_and_stall(quantum::BB84Secret secret) {
    check_lambda(secret.a.size());
    PreparerInit init;
    init.messages.push_back(Message::quantum(Direction::kForward, quantum::prepare_bb84(secret)));
    init.messages.push_back(Message::stall(Direction::kForward));
    init.secret = std::move(secret);
    return init;
}

std::pair<CommitReceiverState, std::vector<Message>> amcom_receiver_init(std::size_t lambda,
                                                                         Rng &rng) {
    auto init = prepare_and_stall(lambda, rng);
    return {CommitReceiverState{std::move(init.secret)}, std::move(init.messages)};
}

CommitterState amcom_committer_commit(std::uint8_t b, quantum::QuantumRegister &reg, Rng &rng) {
    check_bit(b, "amcom_committer_commit");
    const BitString bases(reg.qubits(), b);
    return CommitterState{b, quantum::measure_in_bases(reg, bases, rng)};
}

Message amcom_reveal(const CommitterState &cs) {
    return Message::classical(Direction::kBackward, Reveal{cs.b, cs.sigma});
}

Verdict amcom_verify(const CommitReceiverState &rs, std::uint8_t b, const BitString &sigma) {
    const auto &[a, theta] = rs.secret;
    if (b > 1) {
        return Abort{"revealed bit is not 0 or 1"};
    }
    if (sigma.size() != a.size()) {
        return Abort{"revealed string has length " + std::to_string(sigma.size()) +
                     ", expected " + std::to_string(a.size())};
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (theta[i] == b && sigma[i] != a[i]) {
            return Abort{"inconsistent at position " + std::to_string(i)};
        }
    }
    return Accept{b};
}

void HonestCommitter::before_stall(quantum::QuantumRegister &reg, Rng &rng) {
    state_ = amcom_committer_commit(b_, reg, rng);
}

Reveal HonestCommitter::open(std::uint8_t) const { return Reveal{state_.b, state_.sigma}; }

void HoldingCommitter::before_stall(quantum::QuantumRegister &, Rng &) {}

void HoldingCommitter::after_stall(const HeldRegister &held) {
    memento_ = held.forced_outcome.value_or(BitString());
}

Reveal HoldingCommitter::open(std::uint8_t value) const { return Reveal{value, memento_}; }

DoubleOpeningCommitter::DoubleOpeningCommitter(std::string id,
                                               quantum::SingleQubitMeasurement measurement)
    : id_(std::move(id)), measurement_(std::move(measurement)) {
    for (const auto &label : measurement_.labels()) {
        if (label.size() != 2 || (label[0] != '0' && label[0] != '1') ||
            (label[1] != '0' && label[1] != '1')) {
            throw std::invalid_argument("double-opening outcomes must be labelled 00, 01, 10, 11");
        }
    }
}

DoubleOpeningCommitter DoubleOpeningCommitter::breidbart() {
    auto m = quantum::SingleQubitMeasurement::breidbart().relabel({"00", "11"});
    return DoubleOpeningCommitter("breidbart", std::move(m));
}

void DoubleOpeningCommitter::before_stall(quantum::QuantumRegister &reg, Rng &rng) {
    const std::vector<quantum::SingleQubitMeasurement> per_qubit(reg.qubits(), measurement_);
    const auto labels = quantum::measure_product_povm(reg, per_qubit, rng);
    s_ = BitString();
    t_ = BitString();
    for (const auto &l : labels) {
        s_.push_back(static_cast<std::uint8_t>(l[0] - '0'));
        t_.push_back(static_cast<std::uint8_t>(l[1] - '0'));
    }
}

Reveal DoubleOpeningCommitter::open(std::uint8_t value) const {
    return Reveal{value, value == 0 ? s_ : t_};
}

CommitSession run_amcom(std::size_t lambda, CommitterStrategy &committer,
                        const CommitSessionOptions &options) {
    Rng receiver_rng = Rng::for_trial(options.seed, kPreparerStream, 0);
    Rng committer_rng = Rng::for_trial(options.seed, kPeerStream, 0);
    CommitSession session;
    Channel channel(session.transcript, Rng::for_trial(options.seed, kChannelStream, 0));

    auto init = options.secret ? prepare_and_stall(*options.secret)
                               : prepare_and_stall(lambda, receiver_rng);
    session.receiver.secret = std::move(init.secret);
    session.transcript.mark_phase("commit");

    const auto delivered = channel.step(std::move(init.messages[0]));
    auto &held = channel.held(Party::kPeer, *delivered.holding);
    committer.before_stall(held.reg, committer_rng);
    channel.step(std::move(init.messages[1]));
    committer.after_stall(held);

    session.transcript.mark_phase("reveal");
    const std::size_t reveal_start = session.transcript.size();
    session.commit_phase_backward_bytes =
        session.transcript.classical_bytes(Direction::kBackward, 0, reveal_start);

    session.reveal = committer.open(options.open_value);
    const auto msg = channel.step(Message::classical(Direction::kBackward, session.reveal));
    const auto &body = std::get<Reveal>(*msg.body);
    session.verdict = amcom_verify(session.receiver, body.b, body.sigma);
    session.forced_measurements = channel.forced_measurements();
    return session;
}

} // namespace amnesia::protocol

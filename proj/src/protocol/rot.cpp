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

#include "amnesia/protocol/rot.hpp"

#include <stdexcept>

namespace amnesia::protocol {

namespace {

constexpr std::uint64_t kSenderStream = 1;
constexpr std::uint64_t kReceiverStream = 2;
constexpr std::uint64_t kChannelStream = 3;

} // namespace

BitString consistent_part(const BitString &x, const BitString &theta, std::uint8_t c) {
    if (x.size() != theta.size()) {
        throw std::invalid_argument("consistent_part: length mismatch");
    }
    return x.restrict(positions_equal(theta, c));
}

std::pair<RotSenderState, std::vector<Message>> amrot_sender_init(std::size_t lambda, Rng &rng) {
    auto init = prepare_and_stall(lambda, rng);
    RotSenderState ss;
    ss.secret = std::move(init.secret);
    return {std::move(ss), std::move(init.messages)};
}

RotReceiverState amrot_receiver_measure(std::uint8_t b, quantum::QuantumRegister &reg, Rng &rng) {
    const auto cs = amcom_committer_commit(b, reg, rng);
    return RotReceiverState{cs.b, cs.sigma};
}

void amrot_sender_stalled(RotSenderState &ss) {
    if (ss.phase == RotSenderState::Phase::kPrepared) {
        ss.phase = RotSenderState::Phase::kStalled;
    }
}

std::pair<RotOutputs, Message> amrot_sender_hash(RotSenderState &ss, std::size_t ell, Rng &rng) {
    if (ss.phase != RotSenderState::Phase::kStalled) {
        throw std::logic_error("amrot_sender_hash: hashes are sent once, after the stall");
    }
    if (ell == 0 || ell > hashing::kMaxOutputBits) {
        throw std::invalid_argument("amrot_sender_hash: ell must be in [1, 64]");
    }
    const auto &[x, theta] = ss.secret;
    const std::size_t lambda = x.size();
    ss.h0 = hashing::sample_hash(lambda, ell, rng);
    ss.h1 = hashing::sample_hash(lambda, ell, rng);
    RotOutputs out{hashing::eval_hash(*ss.h0, consistent_part(x, theta, 0)),
                   hashing::eval_hash(*ss.h1, consistent_part(x, theta, 1))};
    ss.phase = RotSenderState::Phase::kHashed;
    return {std::move(out),
            Message::classical(Direction::kForward, Hashes{*ss.h0, *ss.h1, theta})};
}

BitString amrot_receiver_finish(const RotReceiverState &rs, const Hashes &hashes) {
    const auto &h = rs.b == 0 ? hashes.h0 : hashes.h1;
    return hashing::eval_hash(h, consistent_part(rs.sigma, hashes.theta, rs.b));
}

void HonestRotReceiver::before_stall(quantum::QuantumRegister &reg, Rng &rng) {
    state_ = amrot_receiver_measure(b_, reg, rng);
}

void HonestRotReceiver::on_hashes(const Hashes &hashes) {
    output_ = amrot_receiver_finish(state_, hashes);
}

RotSession run_amrot(std::size_t lambda, std::size_t ell, RotReceiverStrategy &receiver,
                     const RotSessionOptions &options) {
    Rng sender_rng = Rng::for_trial(options.seed, kSenderStream, 0);
    Rng receiver_rng = Rng::for_trial(options.seed, kReceiverStream, 0);
    RotSession session;
    Channel channel(session.transcript, Rng::for_trial(options.seed, kChannelStream, 0));

    auto init = options.secret ? prepare_and_stall(*options.secret)
                               : prepare_and_stall(lambda, sender_rng);
    session.sender.secret = std::move(init.secret);

    const auto delivered = channel.step(std::move(init.messages[0]));
    auto &held = channel.held(Party::kPeer, *delivered.holding);
    receiver.before_stall(held.reg, receiver_rng);
    channel.step(std::move(init.messages[1]));
    amrot_sender_stalled(session.sender);
    receiver.after_stall(held);

    auto [outputs, msg] = amrot_sender_hash(session.sender, ell, sender_rng);
    session.outputs = std::move(outputs);
    const auto d = channel.step(std::move(msg));
    session.hashes = std::get<Hashes>(*d.body);
    receiver.on_hashes(session.hashes);
    session.forced_measurements = channel.forced_measurements();
    return session;
}

OtWrapResult run_ot_wrap(std::size_t lambda, const BitString &m0, const BitString &m1,
                         std::uint8_t b, std::uint64_t seed) {
    if (m0.size() != m1.size() || m0.empty()) {
        throw std::invalid_argument("ot-wrap: inputs must be non-empty and of equal length");
    }
    if (b > 1) {
        throw std::invalid_argument("ot-wrap: choice bit must be 0 or 1");
    }
    HonestRotReceiver receiver(b);
    RotSessionOptions options;
    options.seed = seed;
    OtWrapResult result{BitString(), run_amrot(lambda, m0.size(), receiver, options)};
    auto &s = result.session;
    Transcript &t = s.transcript;
    // The wrapper message travels on the same channel as the random OT.
    Channel tail(t, Rng::for_trial(seed, kChannelStream, 1));
    const auto d = tail.step(Message::classical(
        Direction::kForward, MaskedPair{m0 ^ s.outputs.m0, m1 ^ s.outputs.m1}));
    const auto &pair = std::get<MaskedPair>(*d.body);
    result.output = (b == 0 ? pair.e0 : pair.e1) ^ *receiver.output();
    return result;
}

} // namespace amnesia::protocol

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

#include "amnesia/protocol/flip.hpp"

#include <stdexcept>

namespace amnesia::protocol {

FlipResult amflip_run(Rng &alice_rng, Rng &bob_rng, const FlipOptions &options,
                      const CheatingAlice *adversary) {
    check_lambda(options.lambda);
    if ((options.alice_coin && *options.alice_coin > 1) ||
        (options.bob_bit && *options.bob_bit > 1)) {
        throw std::invalid_argument("amflip_run: coins must be 0 or 1");
    }
    if (adversary && !adversary->committer) {
        throw std::invalid_argument("amflip_run: cheating Alice needs a committer strategy");
    }
    FlipResult result;
    auto [receiver, messages] = amcom_receiver_init(options.lambda, bob_rng);
    Channel channel(result.transcript, Rng(bob_rng()));

    const std::uint8_t coin = options.alice_coin.value_or(alice_rng.bit());
    HonestCommitter honest(coin);
    CommitterStrategy &alice = adversary ? *adversary->committer : honest;

    const auto delivered = channel.step(std::move(messages[0]));
    auto &held = channel.held(Party::kPeer, *delivered.holding);
    alice.before_stall(held.reg, alice_rng);
    channel.step(std::move(messages[1]));
    alice.after_stall(held);

    result.b = options.bob_bit.value_or(bob_rng.bit());
    const auto coin_msg = channel.step(Message::classical(Direction::kForward, CoinBit{result.b}));
    const std::uint8_t b_seen = std::get<CoinBit>(*coin_msg.body).b;

    const std::uint8_t opened = adversary ? static_cast<std::uint8_t>(adversary->target ^ b_seen)
                                          : coin;
    const auto reveal_msg =
        channel.step(Message::classical(Direction::kBackward, alice.open(opened)));
    const auto &reveal = std::get<Reveal>(*reveal_msg.body);
    result.a = reveal.b;
    result.c_a = static_cast<std::uint8_t>(opened ^ b_seen);

    const auto verdict = amcom_verify(receiver, reveal.b, reveal.sigma);
    if (const auto *acc = std::get_if<Accept>(&verdict)) {
        result.c_b = static_cast<std::uint8_t>(acc->b ^ result.b);
    }
    const auto zero = alice.open(0);
    const auto one = alice.open(1);
    result.both_openings_verify = zero.b == 0 && one.b == 1 &&
                                  accepted(amcom_verify(receiver, zero.b, zero.sigma)) &&
                                  accepted(amcom_verify(receiver, one.b, one.sigma));
    result.forced_measurements = channel.forced_measurements();
    return result;
}

} // namespace amnesia::protocol

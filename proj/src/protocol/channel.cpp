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

#include "amnesia/protocol/channel.hpp"

#include <stdexcept>

namespace amnesia::protocol {

namespace {

Party recipient_of(Direction d) {
    return d == Direction::kForward ? Party::kPeer : Party::kPreparer;
}

} // namespace

Channel::Channel(Transcript &transcript, Rng decoherence_rng)
    : transcript_(transcript), rng_(decoherence_rng) {}

std::size_t Channel::decohere() {
    std::size_t measured = 0;
    for (auto &side : custody_) {
        for (auto &h : side) {
            if (!h.reg.alive()) {
                continue;
            }
            const BitString standard(h.reg.qubits(), 0);
            h.forced_outcome = quantum::measure_in_bases(h.reg, standard, rng_);
            ++measured;
        }
    }
    if (live_registers() != 0) {
        throw std::logic_error("channel: live register survived a stall");
    }
    return measured;
}

Delivery Channel::step(Message m) {
    Delivery d;
    d.kind = m.kind;
    d.direction = m.direction;
    d.recipient = recipient_of(m.direction);
    auto payload = encode_payload(m);
    switch (m.kind) {
    case MessageKind::kQuantum: {
        auto &side = custody_[static_cast<std::size_t>(d.recipient)];
        side.push_back(HeldRegister{std::move(*m.reg), std::nullopt});
        m.reg.reset();
        d.holding = side.size() - 1;
        break;
    }
    case MessageKind::kStall:
        ++stalls_;
        d.forced_measurements = decohere();
        forced_ += d.forced_measurements;
        break;
    case MessageKind::kClassical:
        d.body = m.body;
        break;
    }
    transcript_.record(m, std::move(payload), d.forced_measurements);
    return d;
}

HeldRegister &Channel::held(Party p, std::size_t slot) {
    return custody_[static_cast<std::size_t>(p)].at(slot);
}

std::size_t Channel::holdings(Party p) const {
    return custody_[static_cast<std::size_t>(p)].size();
}

std::size_t Channel::live_registers() const {
    std::size_t live = 0;
    for (const auto &side : custody_) {
        for (const auto &h : side) {
            live += h.reg.alive() ? 1 : 0;
        }
    }
    return live;
}

} // namespace amnesia::protocol

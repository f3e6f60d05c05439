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
#include <optional>
#include <vector>

#include "amnesia/common/rng.hpp"
#include "amnesia/protocol/message.hpp"
#include "amnesia/protocol/transcript.hpp"

namespace amnesia::protocol {

/// The party that prepares BB84 states, and its peer.
enum class Party : std::uint8_t {
    kPreparer = 0,
    kPeer = 1,
};

/// A register in a party's custody; forced_outcome is set if a stall measured it.
struct HeldRegister {
    quantum::QuantumRegister reg;
    std::optional<BitString> forced_outcome;
};

struct Delivery {
    MessageKind kind = MessageKind::kStall;
    Direction direction = Direction::kForward;
    Party recipient = Party::kPeer;
    std::optional<std::size_t> holding; ///< custody slot of a delivered register
    std::optional<ClassicalBody> body;
    std::size_t forced_measurements = 0; ///< registers measured by this stall
};

/**
 * @brief Simulated channel between two parties with stall enforcement.
 *
 * Registers delivered by QUANTUM messages are placed in the recipient's
 * custody. When a STALL passes, every live register held by either party is
 * measured in the standard basis and replaced by its classical outcome, so no
 * quantum state survives a stall. Every message is recorded in the transcript.
 */
class Channel {
  public:
    Channel(Transcript &transcript, Rng decoherence_rng);

    Delivery step(Message m);

    [[nodiscard]] HeldRegister &held(Party p, std::size_t slot);
    [[nodiscard]] std::size_t holdings(Party p) const;
    [[nodiscard]] std::size_t live_registers() const;
    [[nodiscard]] std::size_t forced_measurements() const noexcept { return forced_; }
    [[nodiscard]] std::size_t stalls() const noexcept { return stalls_; }
    [[nodiscard]] Transcript &transcript() noexcept { return transcript_; }

  private:
    std::size_t decohere();

    Transcript &transcript_;
    Rng rng_;
    std::vector<HeldRegister> custody_[2];
    std::size_t forced_ = 0;
    std::size_t stalls_ = 0;
};

} // namespace amnesia::protocol

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
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amnesia/protocol/message.hpp"

#include "json.hpp"

namespace amnesia::protocol {

struct TranscriptEntry {
    std::size_t step = 0;
    Direction direction = Direction::kForward;
    MessageKind kind = MessageKind::kStall;
    std::vector<std::uint8_t> payload;
    std::size_t forced_measurements = 0;
};

/**
 * @brief Ordered record of every message that crossed a channel.
 *
 * Directions are rendered with protocol role names, e.g.
 * "receiver->committer" for the forward direction of a commitment.
 */
class Transcript {
  public:
    Transcript(std::string forward_name, std::string backward_name);

    void record(const Message &m, std::vector<std::uint8_t> payload, std::size_t forced);

    [[nodiscard]] const std::vector<TranscriptEntry> &entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] const std::string &direction_name(Direction d) const;

    /// Classical payload bytes sent in direction d over the whole transcript.
    [[nodiscard]] std::size_t classical_bytes(Direction d) const;
    /// Classical payload bytes sent in direction d by entries with step in [begin, end).
    [[nodiscard]] std::size_t classical_bytes(Direction d, std::size_t begin,
                                              std::size_t end) const;

    /// Records that the named phase starts with the next entry.
    void mark_phase(const std::string &name);
    [[nodiscard]] std::optional<std::size_t> phase_start(const std::string &name) const;

    [[nodiscard]] std::size_t forced_measurements() const;

    /// Array of {step, direction, kind, payload_hex, forced_measurements}.
    [[nodiscard]] nlohmann::json to_json() const;
    /// Concatenated wire frames, the input to transcript digests.
    [[nodiscard]] std::vector<std::uint8_t> to_bytes() const;

  private:
    std::string forward_name_;
    std::string backward_name_;
    std::vector<TranscriptEntry> entries_;
    std::size_t bytes_[2] = {0, 0};
    std::vector<std::pair<std::string, std::size_t>> phases_;
};

} // namespace amnesia::protocol

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

#include "amnesia/protocol/transcript.hpp"

namespace amnesia::protocol {

Transcript::Transcript(std::string forward_name, std::string backward_name)
    : forward_name_(std::move(forward_name)), backward_name_(std::move(backward_name)) {}

void Transcript::record(const Message &m, std::vector<std::uint8_t> payload, std::size_t forced) {
    if (m.kind == MessageKind::kClassical) {
        bytes_[static_cast<std::size_t>(m.direction)] += payload.size();
    }
    entries_.push_back({entries_.size(), m.direction, m.kind, std::move(payload), forced});
}

const std::string &Transcript::direction_name(Direction d) const {
    return d == Direction::kForward ? forward_name_ : backward_name_;
}

std::size_t Transcript::classical_bytes(Direction d) const {
    return bytes_[static_cast<std::size_t>(d)];
}

std::size_t Transcript::classical_bytes(Direction d, std::size_t begin, std::size_t end) const {
    std::size_t total = 0;
    for (const auto &e : entries_) {
        if (e.step >= begin && e.step < end && e.direction == d &&
            e.kind == MessageKind::kClassical) {
            total += e.payload.size();
        }
    }
    return total;
}

void Transcript::mark_phase(const std::string &name) {
    phases_.emplace_back(name, entries_.size());
}

std::optional<std::size_t> Transcript::phase_start(const std::string &name) const {
    for (const auto &[phase, step] : phases_) {
        if (phase == name) {
            return step;
        }
    }
    return std::nullopt;
}

std::size_t Transcript::forced_measurements() const {
    std::size_t total = 0;
    for (const auto &e : entries_) {
        total += e.forced_measurements;
    }
    return total;
}

nlohmann::json Transcript::to_json() const {
    auto out = nlohmann::json::array();
    for (const auto &e : entries_) {
        out.push_back({{"step", e.step},
                       {"direction", direction_name(e.direction)},
                       {"kind", to_string(e.kind)},
                       {"payload_hex", to_hex(e.payload)},
                       {"forced_measurements", e.forced_measurements}});
    }
    return out;
}

std::vector<std::uint8_t> Transcript::to_bytes() const {
    std::vector<std::uint8_t> out;
    for (const auto &e : entries_) {
        const std::size_t len = e.payload.size() + 2;
        for (int shift = 24; shift >= 0; shift -= 8) {
            out.push_back(static_cast<std::uint8_t>(len >> static_cast<unsigned>(shift)));
        }
        out.push_back(static_cast<std::uint8_t>(e.kind));
        out.push_back(static_cast<std::uint8_t>(e.direction));
        out.insert(out.end(), e.payload.begin(), e.payload.end());
    }
    return out;
}

} // namespace amnesia::protocol

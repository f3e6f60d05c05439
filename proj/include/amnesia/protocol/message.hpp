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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "amnesia/common/bits.hpp"
#include "amnesia/hashing/toeplitz.hpp"
#include "amnesia/quantum/register.hpp"

namespace amnesia::protocol {

enum class MessageKind : std::uint8_t {
    kQuantum = 1,
    kStall = 2,
    kClassical = 3,
};

/// kForward runs from the party that prepares the BB84 states to the other party.
enum class Direction : std::uint8_t {
    kForward = 0,
    kBackward = 1,
};

std::string to_string(MessageKind kind);

struct Reveal {
    std::uint8_t b = 0;
    BitString sigma;
    friend bool operator==(const Reveal &, const Reveal &) = default;
};

struct Hashes {
    hashing::HashDescriptor h0;
    hashing::HashDescriptor h1;
    BitString theta;
    friend bool operator==(const Hashes &, const Hashes &) = default;
};

struct CoinBit {
    std::uint8_t b = 0;
    friend bool operator==(const CoinBit &, const CoinBit &) = default;
};

/// Sender inputs masked with the random OT outputs (m0 ^ r0, m1 ^ r1).
struct MaskedPair {
    BitString e0;
    BitString e1;
    friend bool operator==(const MaskedPair &, const MaskedPair &) = default;
};

using ClassicalBody = std::variant<Reveal, Hashes, CoinBit, MaskedPair>;

enum class ClassicalTag : std::uint8_t {
    kReveal = 1,
    kHashes = 2,
    kCoinBit = 3,
    kMaskedPair = 4,
};

/**
 * @brief One protocol message.
 *
 * Quantum messages carry the register itself; stalls carry nothing.
 */
struct Message {
    MessageKind kind = MessageKind::kStall;
    Direction direction = Direction::kForward;
    std::optional<quantum::QuantumRegister> reg;
    std::optional<ClassicalBody> body;

    static Message quantum(Direction d, quantum::QuantumRegister r);
    static Message stall(Direction d);
    static Message classical(Direction d, ClassicalBody b);
};

/**
 * Payload bytes. Classical: tag byte then body; bit strings as a u16
 * big-endian length followed by MSB-first packed bits; hash descriptors in
 * their own encoding. Quantum: a form byte (0 dense, 1 product), the u8
 * qubit count, then complex numbers as little-endian IEEE-754 (re, im)
 * double pairs: all 2^n amplitudes, or the two amplitudes of each factor.
 * This is a simulation artifact, not a physical encoding.
 */
std::vector<std::uint8_t> encode_payload(const Message &m);
ClassicalBody decode_classical(std::span<const std::uint8_t> payload);
quantum::QuantumRegister decode_quantum(std::span<const std::uint8_t> payload);

/// Frame: u32 big-endian length of the rest, kind byte, direction byte, payload.
std::vector<std::uint8_t> encode_frame(const Message &m);
Message decode_frame(std::span<const std::uint8_t> frame, std::size_t *consumed = nullptr);

void write_bits(std::vector<std::uint8_t> &out, const BitString &bits);
BitString read_bits(std::span<const std::uint8_t> bytes, std::size_t &pos);

} // namespace amnesia::protocol

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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace amnesia {

/**
 * @brief A string of classical bits, one byte per bit.
 *
 * Position 0 is the leftmost character of the textual form, so
 * `BitString::from_string("01")[0] == 0`.
 */
class BitString {
  public:
    BitString() = default;
    explicit BitString(std::size_t size, std::uint8_t fill = 0);
    explicit BitString(std::vector<std::uint8_t> bits);

    /// Parses a string of '0' and '1' characters.
    static BitString from_string(std::string_view text);
    /// Low `size` bits of `value`, most significant bit first.
    static BitString from_uint(std::uint64_t value, std::size_t size);

    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] bool empty() const noexcept { return bits_.empty(); }

    [[nodiscard]] std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    [[nodiscard]] std::uint8_t at(std::size_t i) const { return bits_.at(i); }
    void set(std::size_t i, std::uint8_t value);
    void push_back(std::uint8_t value);
    void append(const BitString &other);

    [[nodiscard]] std::string str() const;
    /// Interprets the bits as an unsigned integer, position 0 most significant.
    [[nodiscard]] std::uint64_t to_uint() const;

    /// Bits at the given positions, in the order given.
    [[nodiscard]] BitString restrict(std::span<const std::size_t> positions) const;
    [[nodiscard]] BitString operator^(const BitString &other) const;
    [[nodiscard]] bool all_zero() const noexcept;

    /// Packs the bits MSB-first into ceil(size/8) bytes, zero padded at the end.
    [[nodiscard]] std::vector<std::uint8_t> pack() const;
    static BitString unpack(std::span<const std::uint8_t> bytes, std::size_t size);

    [[nodiscard]] std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    [[nodiscard]] auto begin() const noexcept { return bits_.begin(); }
    [[nodiscard]] auto end() const noexcept { return bits_.end(); }

    friend bool operator==(const BitString &, const BitString &) = default;
    /// Shorter strings order first, then lexicographic.
    friend std::strong_ordering operator<=>(const BitString &a, const BitString &b);

  private:
    std::vector<std::uint8_t> bits_;
};

/// Positions i (ascending) with bases[i] == value.
std::vector<std::size_t> positions_equal(const BitString &bases, std::uint8_t value);

std::string to_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> from_hex(std::string_view hex);

} // namespace amnesia

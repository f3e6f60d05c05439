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

#include "amnesia/common/bits.hpp"

#include <stdexcept>

namespace amnesia {

BitString::BitString(std::size_t size, std::uint8_t fill) : bits_(size, fill ? 1 : 0) {}

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto &b : bits_) {
        if (b > 1) {
            throw std::invalid_argument("BitString: bit values must be 0 or 1");
        }
    }
}

BitString BitString::from_string(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BitString: invalid character in '" +
                                        std::string(text) + "'");
        }
        bits.push_back(c == '1' ? 1 : 0);
    }
    return BitString(std::move(bits));
}

BitString BitString::from_uint(std::uint64_t value, std::size_t size) {
    if (size > 64) {
        throw std::invalid_argument("BitString::from_uint: size exceeds 64");
    }
    BitString out(size);
    for (std::size_t i = 0; i < size; ++i) {
        out.bits_[i] = static_cast<std::uint8_t>((value >> (size - 1 - i)) & 1U);
    }
    return out;
}

void BitString::set(std::size_t i, std::uint8_t value) { bits_.at(i) = value ? 1 : 0; }

void BitString::push_back(std::uint8_t value) { bits_.push_back(value ? 1 : 0); }

void BitString::append(const BitString &other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

std::string BitString::str() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) {
            s[i] = '1';
        }
    }
    return s;
}

std::uint64_t BitString::to_uint() const {
    if (bits_.size() > 64) {
        throw std::length_error("BitString::to_uint: more than 64 bits");
    }
    std::uint64_t v = 0;
    for (auto b : bits_) {
        v = (v << 1U) | b;
    }
    return v;
}

BitString BitString::restrict(std::span<const std::size_t> positions) const {
    BitString out;
    out.bits_.reserve(positions.size());
    for (auto p : positions) {
        out.bits_.push_back(bits_.at(p));
    }
    return out;
}

BitString BitString::operator^(const BitString &other) const {
    if (other.size() != size()) {
        throw std::invalid_argument("BitString xor: length mismatch");
    }
    BitString out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        out.bits_[i] = bits_[i] ^ other.bits_[i];
    }
    return out;
}

bool BitString::all_zero() const noexcept {
    for (auto b : bits_) {
        if (b) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint8_t> BitString::pack() const {
    std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) {
            out[i / 8] |= static_cast<std::uint8_t>(0x80U >> (i % 8));
        }
    }
    return out;
}

BitString BitString::unpack(std::span<const std::uint8_t> bytes, std::size_t size) {
    if (bytes.size() < (size + 7) / 8) {
        throw std::invalid_argument("BitString::unpack: not enough bytes");
    }
    BitString out(size);
    for (std::size_t i = 0; i < size; ++i) {
        out.bits_[i] = (bytes[i / 8] >> (7 - i % 8)) & 1U;
    }
    return out;
}

std::strong_ordering operator<=>(const BitString &a, const BitString &b) {
    if (auto c = a.size() <=> b.size(); c != 0) {
        return c;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (auto c = a.bits_[i] <=> b.bits_[i]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

std::vector<std::size_t> positions_equal(const BitString &bases, std::uint8_t value) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bases.size(); ++i) {
        if (bases[i] == value) {
            out.push_back(i);
        }
    }
    return out;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(kDigits[b >> 4U]);
        out.push_back(kDigits[b & 0x0FU]);
    }
    return out;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) {
        throw std::invalid_argument("from_hex: odd length");
    }
    auto nibble = [](char c) -> std::uint8_t {
        if (c >= '0' && c <= '9') {
            return static_cast<std::uint8_t>(c - '0');
        }
        if (c >= 'a' && c <= 'f') {
            return static_cast<std::uint8_t>(c - 'a' + 10);
        }
        if (c >= 'A' && c <= 'F') {
            return static_cast<std::uint8_t>(c - 'A' + 10);
        }
        throw std::invalid_argument("from_hex: invalid digit");
    };
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4U) | nibble(hex[2 * i + 1]));
    }
    return out;
}

} // namespace amnesia

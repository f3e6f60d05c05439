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
#include <span>
#include <vector>

#include "amnesia/common/bits.hpp"
#include "amnesia/common/numeric.hpp"
#include "amnesia/common/rng.hpp"

namespace amnesia::hashing {

/**
 * @brief Description <h> of one member of the Toeplitz hash family.
 *
 * Inputs are bit strings of length at most `max_input_len`. Each input is
 * padded injectively to padded_length() bits and multiplied over GF(2) by the
 * out_len x padded_length() Toeplitz matrix T with T[i][j] = seed[j - i + out_len - 1].
 * For any two distinct inputs a uniformly random seed makes them collide with
 * probability exactly 2^-out_len.
 */
struct HashDescriptor {
    std::size_t max_input_len = 0;
    std::size_t out_len = 0;
    BitString seed;

    /// Width of the length field: ceil(log2(max_input_len + 1)).
    static std::size_t length_field_width(std::size_t max_input_len);
    static std::size_t padded_length(std::size_t max_input_len);
    static std::size_t seed_length(std::size_t max_input_len, std::size_t out_len);

    /// Throws std::invalid_argument unless lengths are in range and consistent.
    void validate() const;

    friend bool operator==(const HashDescriptor &, const HashDescriptor &) = default;
};

inline constexpr std::size_t kMaxOutputBits = 64;
inline constexpr std::size_t kMaxInputBits = 0xFFFF;
/// Largest seed length collision_probability_exact and enumeration accept.
inline constexpr std::size_t kMaxEnumerableSeedBits = 24;

HashDescriptor sample_hash(std::size_t max_input_len, std::size_t out_len, Rng &rng);

/// x, then zeros up to max_input_len, then |x| in length_field_width() bits (MSB first).
BitString pad_input(const BitString &x, std::size_t max_input_len);

BitString eval_hash(const HashDescriptor &h, const BitString &x);
/// Matrix-vector product on an already padded vector (linear in `padded`).
BitString eval_padded(const HashDescriptor &h, const BitString &padded);

/// Exact fraction of seeds on which x and x_prime collide, by full enumeration.
Rational collision_probability_exact(std::size_t max_input_len, std::size_t out_len,
                                     const BitString &x, const BitString &x_prime);

/// Wire form: max_input_len (u16 BE), out_len (u16 BE), seed bits packed MSB-first.
std::vector<std::uint8_t> encode(const HashDescriptor &h);
/// Decodes one descriptor from the front of `bytes`; `consumed` receives its length.
HashDescriptor decode(std::span<const std::uint8_t> bytes, std::size_t *consumed = nullptr);

/**
 * @brief Enumeration helper for small families (seed and padded length <= 64 bits).
 *
 * Seed number s selects the seed whose position k is bit k of s; padded inputs
 * are packed with position j at bit j. Outputs are packed with output
 * position i at bit (out_len - 1 - i), matching BitString::to_uint().
 */
class PackedFamily {
  public:
    PackedFamily(std::size_t max_input_len, std::size_t out_len);

    [[nodiscard]] std::size_t seed_bits() const noexcept { return seed_bits_; }
    [[nodiscard]] std::uint64_t seed_count() const;
    [[nodiscard]] std::uint64_t pack_input(const BitString &x) const;
    [[nodiscard]] std::uint64_t eval(std::uint64_t seed, std::uint64_t packed_input) const;
    [[nodiscard]] HashDescriptor descriptor(std::uint64_t seed) const;

  private:
    std::size_t max_input_len_;
    std::size_t out_len_;
    std::size_t padded_;
    std::size_t seed_bits_;
    std::uint64_t window_mask_;
};

} // namespace amnesia::hashing

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

#include "amnesia/hashing/toeplitz.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace amnesia::hashing {

std::size_t HashDescriptor::length_field_width(std::size_t max_input_len) {
    return static_cast<std::size_t>(std::bit_width(max_input_len));
}

std::size_t HashDescriptor::padded_length(std::size_t max_input_len) {
    return max_input_len + length_field_width(max_input_len);
}

std::size_t HashDescriptor::seed_length(std::size_t max_input_len, std::size_t out_len) {
    return padded_length(max_input_len) + out_len - 1;
}

void HashDescriptor::validate() const {
    if (max_input_len == 0 || max_input_len > kMaxInputBits) {
        throw std::invalid_argument("HashDescriptor: max_input_len must be in [1, 65535]");
    }
    if (out_len == 0 || out_len > kMaxOutputBits) {
        throw std::invalid_argument("HashDescriptor: out_len must be in [1, 64]");
    }
    if (seed.size() != seed_length(max_input_len, out_len)) {
        throw std::invalid_argument("HashDescriptor: seed length " + std::to_string(seed.size()) +
                                    " != " +
                                    std::to_string(seed_length(max_input_len, out_len)));
    }
}

HashDescriptor sample_hash(std::size_t max_input_len, std::size_t out_len, Rng &rng) {
    HashDescriptor h{max_input_len, out_len, {}};
    if (max_input_len == 0 || out_len == 0) {
        throw std::invalid_argument("sample_hash: lengths must be positive");
    }
    h.seed = rng.bits(HashDescriptor::seed_length(max_input_len, out_len));
    h.validate();
    return h;
}

BitString pad_input(const BitString &x, std::size_t max_input_len) {
    if (x.size() > max_input_len) {
        throw std::invalid_argument("pad_input: input of " + std::to_string(x.size()) +
                                    " bits exceeds maximum " + std::to_string(max_input_len));
    }
    BitString out = x;
    for (std::size_t i = x.size(); i < max_input_len; ++i) {
        out.push_back(0);
    }
    out.append(BitString::from_uint(x.size(), HashDescriptor::length_field_width(max_input_len)));
    return out;
}

BitString eval_padded(const HashDescriptor &h, const BitString &padded) {
    h.validate();
    const std::size_t p = HashDescriptor::padded_length(h.max_input_len);
    if (padded.size() != p) {
        throw std::invalid_argument("eval_padded: padded input has wrong length");
    }
    BitString out(h.out_len);
    for (std::size_t i = 0; i < h.out_len; ++i) {
        std::uint8_t acc = 0;
        for (std::size_t j = 0; j < p; ++j) {
            acc ^= static_cast<std::uint8_t>(h.seed[j + h.out_len - 1 - i] & padded[j]);
        }
        out.set(i, acc);
    }
    return out;
}

BitString eval_hash(const HashDescriptor &h, const BitString &x) {
    return eval_padded(h, pad_input(x, h.max_input_len));
}

Rational collision_probability_exact(std::size_t max_input_len, std::size_t out_len,
                                     const BitString &x, const BitString &x_prime) {
    PackedFamily family(max_input_len, out_len);
    if (family.seed_bits() > kMaxEnumerableSeedBits) {
        throw std::length_error("collision_probability_exact: family of 2^" +
                                std::to_string(family.seed_bits()) +
                                " seeds is too large to enumerate");
    }
    const auto a = family.pack_input(x);
    const auto b = family.pack_input(x_prime);
    if (a == b) {
        return Rational(1);
    }
    std::uint64_t hits = 0;
    const std::uint64_t count = family.seed_count();
    for (std::uint64_t s = 0; s < count; ++s) {
        hits += family.eval(s, a) == family.eval(s, b) ? 1 : 0;
    }
    return Rational(boost::multiprecision::cpp_int(hits), boost::multiprecision::cpp_int(count));
}

std::vector<std::uint8_t> encode(const HashDescriptor &h) {
    h.validate();
    std::vector<std::uint8_t> out;
    out.push_back(static_cast<std::uint8_t>(h.max_input_len >> 8U));
    out.push_back(static_cast<std::uint8_t>(h.max_input_len & 0xFFU));
    out.push_back(static_cast<std::uint8_t>(h.out_len >> 8U));
    out.push_back(static_cast<std::uint8_t>(h.out_len & 0xFFU));
    auto packed = h.seed.pack();
    out.insert(out.end(), packed.begin(), packed.end());
    return out;
}

HashDescriptor decode(std::span<const std::uint8_t> bytes, std::size_t *consumed) {
    if (bytes.size() < 4) {
        throw std::invalid_argument("decode: truncated hash descriptor header");
    }
    HashDescriptor h;
    h.max_input_len = (static_cast<std::size_t>(bytes[0]) << 8U) | bytes[1];
    h.out_len = (static_cast<std::size_t>(bytes[2]) << 8U) | bytes[3];
    if (h.max_input_len == 0 || h.out_len == 0 || h.out_len > kMaxOutputBits) {
        throw std::invalid_argument("decode: malformed hash descriptor lengths");
    }
    const std::size_t seed_bits = HashDescriptor::seed_length(h.max_input_len, h.out_len);
    const std::size_t seed_bytes = (seed_bits + 7) / 8;
    if (bytes.size() < 4 + seed_bytes) {
        throw std::invalid_argument("decode: truncated hash descriptor seed");
    }
    const auto body = bytes.subspan(4, seed_bytes);
    // Padding bits after the seed must be zero for the encoding to be canonical.
    if (seed_bits % 8 != 0 && (body.back() & (0xFFU >> (seed_bits % 8))) != 0) {
        throw std::invalid_argument("decode: non-zero padding bits in hash descriptor");
    }
    h.seed = BitString::unpack(body, seed_bits);
    if (consumed) {
        *consumed = 4 + seed_bytes;
    }
    return h;
}

PackedFamily::PackedFamily(std::size_t max_input_len, std::size_t out_len)
    : max_input_len_(max_input_len), out_len_(out_len),
      padded_(HashDescriptor::padded_length(max_input_len)),
      seed_bits_(HashDescriptor::seed_length(max_input_len, out_len)) {
    if (max_input_len == 0 || out_len == 0) {
        throw std::invalid_argument("PackedFamily: lengths must be positive");
    }
    if (seed_bits_ > 64 || padded_ > 64) {
        throw std::length_error("PackedFamily: family does not fit in 64-bit words");
    }
    window_mask_ = padded_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << padded_) - 1;
}

std::uint64_t PackedFamily::seed_count() const {
    if (seed_bits_ >= 64) {
        throw std::length_error("PackedFamily: seed count does not fit in 64 bits");
    }
    return std::uint64_t{1} << seed_bits_;
}

std::uint64_t PackedFamily::pack_input(const BitString &x) const {
    const auto padded = pad_input(x, max_input_len_);
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < padded.size(); ++j) {
        v |= static_cast<std::uint64_t>(padded[j]) << j;
    }
    return v;
}

std::uint64_t PackedFamily::eval(std::uint64_t seed, std::uint64_t packed_input) const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < out_len_; ++i) {
        // Row i reads seed positions (out_len - 1 - i) .. (out_len - 1 - i + padded - 1).
        const std::uint64_t row = (seed >> (out_len_ - 1 - i)) & window_mask_;
        const auto bit = static_cast<std::uint64_t>(std::popcount(row & packed_input) & 1);
        out |= bit << (out_len_ - 1 - i);
    }
    return out;
}

HashDescriptor PackedFamily::descriptor(std::uint64_t seed) const {
    HashDescriptor h{max_input_len_, out_len_, BitString(seed_bits_)};
    for (std::size_t k = 0; k < seed_bits_; ++k) {
        h.seed.set(k, static_cast<std::uint8_t>((seed >> k) & 1U));
    }
    return h;
}

} // namespace amnesia::hashing

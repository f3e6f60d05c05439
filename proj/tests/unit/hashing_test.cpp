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

#include <set>
#include <stdexcept>

#include "doctest.h"

#include "amnesia/common/rng.hpp"
#include "amnesia/hashing/toeplitz.hpp"

using namespace amnesia;
using namespace amnesia::hashing;

namespace {

// Explicit matrix: row i, column j holds seed[l - 1 + j - i], constant along diagonals.
BitString toeplitz_oracle(const BitString &seed, std::size_t ell, const BitString &padded) {
    BitString out(ell);
    for (std::size_t i = 0; i < ell; ++i) {
        int acc = 0;
        for (std::size_t j = 0; j < padded.size(); ++j) {
            acc ^= seed[ell - 1 + j - i] & padded[j];
        }
        out.set(i, static_cast<std::uint8_t>(acc));
    }
    return out;
}

std::vector<BitString> all_strings(std::size_t max_len) {
    std::vector<BitString> xs;
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
            xs.push_back(BitString::from_uint(v, len));
        }
    }
    return xs;
}

} // namespace

TEST_CASE("seed lengths") {
    CHECK(HashDescriptor::seed_length(4, 2) == 8);
    CHECK(HashDescriptor::seed_length(1, 1) == 2);
    CHECK(HashDescriptor::padded_length(4) == 7);
    CHECK(HashDescriptor::length_field_width(7) == 3);
    CHECK(HashDescriptor::length_field_width(8) == 4);
}

TEST_CASE("sampling is deterministic and validated") {
    Rng a(17), b(17);
    const auto h1 = sample_hash(4, 2, a);
    const auto h2 = sample_hash(4, 2, b);
    CHECK(h1 == h2);
    CHECK(h1.seed.size() == 8);
    Rng r(1);
    CHECK_THROWS_AS(sample_hash(4, 0, r), std::invalid_argument);
    CHECK_THROWS_AS(sample_hash(0, 1, r), std::invalid_argument);
    CHECK_THROWS_AS(sample_hash(4, 65, r), std::invalid_argument);
}

TEST_CASE("padding appends zeros then the length") {
    CHECK(pad_input(BitString::from_string("101"), 4).str() == "1010011");
    CHECK(pad_input(BitString(), 4).str() == "0000000");
    CHECK(pad_input(BitString::from_string("0"), 4).str() == "0000001");
    CHECK_THROWS_AS(pad_input(BitString::from_string("10101"), 4), std::invalid_argument);
    std::set<BitString> pads;
    for (const auto &x : all_strings(5)) {
        pads.insert(pad_input(x, 5));
    }
    CHECK(pads.size() == all_strings(5).size());
}

TEST_CASE("eval_hash equals an explicit Toeplitz multiply") {
    const HashDescriptor h{4, 2, BitString::from_string("10110010")};
    const auto padded = BitString::from_string("1010011");
    // Rows: seed windows 0110010 and 1011001 read against padded 1010011.
    CHECK(eval_hash(h, BitString::from_string("101")).str() == "01");
    CHECK(eval_hash(h, BitString::from_string("101")) == toeplitz_oracle(h.seed, 2, padded));
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        const auto g = sample_hash(6, 3, rng);
        for (const auto &x : all_strings(3)) {
            REQUIRE(eval_hash(g, x) == toeplitz_oracle(g.seed, 3, pad_input(x, 6)));
        }
    }
}

TEST_CASE("zero seed hashes everything to zero") {
    const HashDescriptor h{5, 3, BitString(HashDescriptor::seed_length(5, 3))};
    for (const auto &x : all_strings(5)) {
        CHECK(eval_hash(h, x).all_zero());
    }
}

TEST_CASE("the empty string hashes to zero under every seed") {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        CHECK(eval_hash(sample_hash(4, 2, rng), BitString()).all_zero());
    }
}

TEST_CASE("exact collision probabilities") {
    CHECK(collision_probability_exact(2, 1, BitString::from_string("0"),
                                      BitString::from_string("1")) == Rational(1, 2));
    CHECK(collision_probability_exact(3, 2, BitString::from_string("1"),
                                      BitString::from_string("1")) == Rational(1));
    const auto xs = all_strings(3);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            REQUIRE(collision_probability_exact(3, 2, xs[i], xs[j]) == Rational(1, 4));
        }
    }
    CHECK_THROWS_AS(collision_probability_exact(30, 1, BitString(), BitString::from_string("1")),
                    std::length_error);
}

TEST_CASE("packed family agrees with descriptor evaluation") {
    const PackedFamily family(3, 2);
    CHECK(family.seed_bits() == HashDescriptor::seed_length(3, 2));
    CHECK(family.seed_count() == (std::uint64_t{1} << family.seed_bits()));
    for (std::uint64_t s = 0; s < family.seed_count(); s += 3) {
        const auto h = family.descriptor(s);
        for (const auto &x : all_strings(3)) {
            const auto packed = family.eval(s, family.pack_input(x));
            REQUIRE(BitString::from_uint(packed, 2) == eval_hash(h, x));
        }
    }
}

TEST_CASE("descriptor wire encoding") {
    const HashDescriptor h{4, 2, BitString::from_string("10110010")};
    const auto bytes = encode(h);
    CHECK(to_hex(bytes) == "00040002b2");
    std::size_t used = 0;
    CHECK(decode(bytes, &used) == h);
    CHECK(used == bytes.size());
    auto truncated = bytes;
    truncated.pop_back();
    CHECK_THROWS_AS(decode(truncated), std::invalid_argument);
    const HashDescriptor short_seed{3, 2, BitString::from_string("101101")};
    auto bad_pad = encode(short_seed);
    CHECK(decode(bad_pad) == short_seed);
    bad_pad.back() |= 0x01;
    CHECK_THROWS_AS(decode(bad_pad), std::invalid_argument);
}

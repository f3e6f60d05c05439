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

#include <algorithm>
#include <array>
#include <atomic>
#include <set>
#include <stdexcept>

#include "doctest.h"

#include "amnesia/common/bits.hpp"
#include "amnesia/common/numeric.hpp"
#include "amnesia/common/rng.hpp"

using amnesia::BitString;
using amnesia::Rng;

TEST_CASE("bit strings parse, print and convert") {
    const auto b = BitString::from_string("0110");
    CHECK(b.size() == 4);
    CHECK(b[0] == 0);
    CHECK(b[1] == 1);
    CHECK(b.str() == "0110");
    CHECK(b.to_uint() == 6);
    CHECK(BitString::from_uint(6, 4) == b);
    CHECK(BitString::from_uint(1, 3).str() == "001");
    CHECK_THROWS_AS(BitString::from_string("012"), std::invalid_argument);
    CHECK_THROWS_AS((void)b.at(4), std::out_of_range);
}

TEST_CASE("bit string restriction keeps the requested order") {
    const auto x = BitString::from_string("1100");
    const std::vector<std::size_t> even = {0, 2};
    const std::vector<std::size_t> odd = {1, 3};
    CHECK(x.restrict(even).str() == "10");
    CHECK(x.restrict(odd).str() == "10");
    const auto theta = BitString::from_string("0101");
    CHECK(amnesia::positions_equal(theta, 0) == even);
    CHECK(amnesia::positions_equal(theta, 1) == odd);
}

TEST_CASE("bit string xor, packing and ordering") {
    const auto a = BitString::from_string("1010011");
    const auto b = BitString::from_string("0110110");
    CHECK((a ^ b).str() == "1100101");
    CHECK_THROWS_AS((void)(a ^ BitString::from_string("1")), std::invalid_argument);
    const auto packed = a.pack();
    REQUIRE(packed.size() == 1);
    CHECK(packed[0] == 0xA6);
    CHECK(BitString::unpack(packed, 7) == a);
    CHECK(BitString::from_string("1") < BitString::from_string("00"));
    CHECK(BitString::from_string("01") < BitString::from_string("10"));
    CHECK(BitString().all_zero());
}

TEST_CASE("hex round trip") {
    const std::vector<std::uint8_t> bytes = {0x00, 0xab, 0xff};
    CHECK(amnesia::to_hex(bytes) == "00abff");
    CHECK(amnesia::from_hex("00abff") == bytes);
}

TEST_CASE("rng is reproducible and streams are independent") {
    Rng a(42), b(42), c(43);
    std::vector<std::uint64_t> va, vb, vc;
    for (int i = 0; i < 16; ++i) {
        va.push_back(a());
        vb.push_back(b());
        vc.push_back(c());
    }
    CHECK(va == vb);
    CHECK(va != vc);
    CHECK(Rng::derive(1, 2, 3) == Rng::derive(1, 2, 3));
    std::set<std::uint64_t> seeds;
    for (std::uint64_t stream = 0; stream < 4; ++stream) {
        for (std::uint64_t i = 0; i < 64; ++i) {
            seeds.insert(Rng::derive(9, stream, i));
        }
    }
    CHECK(seeds.size() == 256);
}

TEST_CASE("mt19937_64 reference output is used unchanged") {
    // Tenth-thousandth output of the default-seeded engine, fixed by the C++ standard.
    Rng rng(5489);
    std::uint64_t v = 0;
    for (int i = 0; i < 10000; ++i) {
        v = rng();
    }
    CHECK(v == 9981545732273789042ULL);
}

TEST_CASE("rng helpers stay in range") {
    Rng rng(7);
    std::array<int, 5> counts{};
    for (int i = 0; i < 5000; ++i) {
        const auto v = rng.below(5);
        REQUIRE(v < 5);
        ++counts[v];
        const double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
    for (int c : counts) {
        CHECK(c > 850);
        CHECK(c < 1150);
    }
    CHECK(rng.bits(13).size() == 13);
    CHECK_THROWS(rng.below(0));
}

TEST_CASE("parallel_map returns results in index order") {
    const auto out = amnesia::parallel_map<std::size_t>(1000, [](std::size_t i) { return i * i; });
    for (std::size_t i = 0; i < out.size(); ++i) {
        REQUIRE(out[i] == i * i);
    }
    std::atomic<std::size_t> calls{0};
    amnesia::parallel_for(257, [&](std::size_t) { ++calls; });
    CHECK(calls == 257);
    CHECK(amnesia::worker_count() >= 1);
}

TEST_CASE("parallel_for propagates exceptions") {
    CHECK_THROWS_AS(amnesia::parallel_for(10,
                                          [](std::size_t i) {
                                              if (i == 7) {
                                                  throw std::runtime_error("boom");
                                              }
                                          }),
                    std::runtime_error);
}

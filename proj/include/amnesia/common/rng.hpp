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

#include <cstdint>
#include <limits>
#include <random>

#include "amnesia/common/bits.hpp"

namespace amnesia {

/**
 * @brief Seeded random source used everywhere randomness is consumed.
 *
 * Wraps std::mt19937_64 (whose output sequence is fixed by the standard) and
 * derives bits, integers and doubles from raw 64-bit outputs only, so results
 * are identical across standard libraries. Never shared between threads.
 */
class Rng {
  public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Seed for stream `stream`, item `index` of a run seeded with `seed`.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);
    static Rng for_trial(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
        return Rng(derive(seed, stream, index));
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()() { return engine_(); }

    std::uint8_t bit();
    BitString bits(std::size_t n);
    /// Uniform on [0, 1) with 53 bits of resolution.
    double uniform();
    /// Uniform on {0, ..., bound - 1}; bound must be positive.
    std::uint64_t below(std::uint64_t bound);

  private:
    std::mt19937_64 engine_;
    std::uint64_t bit_buffer_ = 0;
    unsigned bits_left_ = 0;
};

} // namespace amnesia

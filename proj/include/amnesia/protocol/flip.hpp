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

#include "amnesia/common/rng.hpp"
#include "amnesia/protocol/commitment.hpp"

namespace amnesia::protocol {

struct FlipOptions {
    std::size_t lambda = 8;
    std::optional<std::uint8_t> alice_coin; ///< fixes a instead of sampling it
    std::optional<std::uint8_t> bob_bit;    ///< fixes b instead of sampling it
};

/// A cheating Alice: commits through `committer` and opens target ^ b.
struct CheatingAlice {
    CommitterStrategy *committer = nullptr;
    std::uint8_t target = 0;
};

struct FlipResult {
    Transcript transcript{"bob->alice", "alice->bob"};
    std::uint8_t a = 0; ///< value Alice opened
    std::uint8_t b = 0;
    std::optional<std::uint8_t> c_a;
    std::optional<std::uint8_t> c_b; ///< nullopt when Bob aborts
    /// Whether openings of both 0 and 1 would have been accepted.
    bool both_openings_verify = false;
    std::size_t forced_measurements = 0;
};

/**
 * Coin flipping from one commitment: Alice commits to a, Bob answers with b,
 * Alice opens, and both output a ^ b. Bob outputs nothing (abort) if the
 * opening is rejected.
 */
FlipResult amflip_run(Rng &alice_rng, Rng &bob_rng, const FlipOptions &options,
                      const CheatingAlice *adversary = nullptr);

} // namespace amnesia::protocol

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

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amnesia/common/bits.hpp"
#include "amnesia/hashing/toeplitz.hpp"
#include "amnesia/quantum/measurement.hpp"

namespace amnesia::adversary {

/// Memento: the outcome index of the pre-stall measurement on each qubit.
using Memento = std::vector<std::size_t>;

/**
 * Guesses of x0 = x restricted to {i : theta_i = 0} and x1 likewise. A side
 * marked uniform is answered with a uniformly random ell-bit guess of m_c
 * instead of hashing the guess.
 */
struct XGuess {
    BitString x0;
    BitString x1;
    bool uniform_m0 = false;
    bool uniform_m1 = false;
};

/// nullopt answers the corresponding m_c with a uniformly random guess.
struct HashGuess {
    std::optional<BitString> m0;
    std::optional<BitString> m1;
};

using XGuesser = std::function<XGuess(std::span<const std::size_t> w, const BitString &theta)>;
using HashGuesser =
    std::function<HashGuess(std::span<const std::size_t> w, const BitString &theta,
                            const hashing::HashDescriptor &h0, const hashing::HashDescriptor &h1)>;

/**
 * @brief Malicious random-OT receiver without quantum memory.
 *
 * Before the stall it measures every qubit with `measurement` and keeps only
 * the outcomes w. After receiving (h0, h1, theta) it outputs guesses of
 * (m0, m1). By default the guesses are h_c applied to the x guesses; a
 * `hash_guess` function replaces that step entirely. Both functions must be
 * deterministic.
 */
struct MementoOtStrategy {
    std::string id;
    quantum::SingleQubitMeasurement measurement;
    XGuesser x_guess;
    HashGuesser hash_guess;

    [[nodiscard]] HashGuess guess(std::span<const std::size_t> w, const BitString &theta,
                                  const hashing::HashDescriptor &h0,
                                  const hashing::HashDescriptor &h1) const;
};

/**
 * Per-qubit maximum-likelihood guess of x_i from (outcome, theta_i), ties to 0.
 * table[k][theta] is the guessed bit.
 */
std::vector<std::array<std::uint8_t, 2>> map_guess_table(const quantum::SingleQubitMeasurement &m);

/// x guesser applying map_guess_table() position by position.
XGuesser map_x_guesser(const quantum::SingleQubitMeasurement &m, bool uniform_m0 = false,
                       bool uniform_m1 = false);

/// Full x guess reassembled from (x0, x1) by theta.
BitString reassemble(const XGuess &g, const BitString &theta);

/**
 * Built-in attacks: "honest-b0", "honest-b1", "standard-basis",
 * "hadamard-basis", "breidbart", "bb84-four-outcome", "constant", "blind".
 */
std::vector<std::string> builtin_attack_ids();
MementoOtStrategy builtin_attack(const std::string &id);
std::vector<MementoOtStrategy> builtin_attacks();

} // namespace amnesia::adversary

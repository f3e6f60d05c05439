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

#include "amnesia/adversary/ot_attack.hpp"
#include "amnesia/common/rng.hpp"

namespace amnesia::adversary {

/**
 * @brief Distinguisher for (<h>, h(X_c), W, Theta, c) versus (<h>, U, W, Theta, c).
 *
 * Plays the attack's second stage on (h_c = h, a freshly sampled h_{1-c},
 * theta) with memento w and outputs 1 iff the guess m'_c equals the challenge.
 */
class Distinguisher {
  public:
    explicit Distinguisher(MementoOtStrategy strategy) : strategy_(std::move(strategy)) {}

    bool operator()(const hashing::HashDescriptor &h, const BitString &challenge,
                    std::span<const std::size_t> w, const BitString &theta, std::uint8_t c,
                    Rng &rng) const;

    [[nodiscard]] const MementoOtStrategy &strategy() const noexcept { return strategy_; }

  private:
    MementoOtStrategy strategy_;
};

Distinguisher build_distinguisher(const MementoOtStrategy &strategy);

struct DistinguisherEvaluation {
    double accept_hashed = 0.0;  ///< challenge h(x_c)
    double accept_uniform = 0.0; ///< uniformly random challenge
    double advantage = 0.0;
    double attack_success = 0.0; ///< Pr[guess both] on the same draws
    std::uint64_t trials = 0;    ///< 0 in exact mode
};

/// Exact acceptance rates by enumeration (lambda <= 6, enumerable hash family).
DistinguisherEvaluation distinguisher_exact(const MementoOtStrategy &strategy, std::size_t lambda,
                                            std::size_t ell, std::uint8_t c);

/// Both challenges and the attack itself evaluated on the same sampled (theta, x, w, h0, h1).
DistinguisherEvaluation distinguisher_sampled(const MementoOtStrategy &strategy,
                                              std::size_t lambda, std::size_t ell, std::uint8_t c,
                                              std::uint64_t trials, std::uint64_t seed);

} // namespace amnesia::adversary

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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amnesia/common/bits.hpp"
#include "amnesia/common/rng.hpp"
#include "amnesia/info/distribution.hpp"
#include "amnesia/quantum/measurement.hpp"

namespace amnesia::quantum {

inline constexpr std::size_t kMaxQubits = 24;

/// Amplitudes (alpha, beta) of alpha|0> + beta|1>.
using Qubit = std::array<Complex, 2>;

/// Classical description of a BB84 encoding: bits `a` in bases `theta` (1 = Hadamard).
struct BB84Secret {
    BitString a;
    BitString theta;
};

/**
 * @brief Pure state of n qubits, 1 <= n <= 24.
 *
 * Qubit 0 is the most significant bit of the amplitude index, so the
 * amplitude of |q0 q1 ... q(n-1)> sits at index sum_i q_i 2^(n-1-i).
 * Measuring a register consumes it; every operation on a consumed register
 * throws std::logic_error.
 *
 * Product states are held as their single-qubit factors, which single-qubit
 * gates preserve; the dense vector is built only when amplitudes() is read.
 */
class QuantumRegister {
  public:
    QuantumRegister(std::size_t qubits, std::vector<Complex> amplitudes);
    /// Computational basis state |bits>.
    static QuantumRegister basis_state(const BitString &bits);
    /// Tensor product of normalised single-qubit states, qubit 0 first.
    static QuantumRegister product_state(std::vector<Qubit> factors);

    [[nodiscard]] std::size_t qubits() const noexcept { return qubits_; }
    [[nodiscard]] bool alive() const noexcept { return alive_; }
    [[nodiscard]] bool is_product() const noexcept { return factors_.has_value(); }
    /// Single-qubit factors; only valid for product states.
    [[nodiscard]] const std::vector<Qubit> &factors() const;
    [[nodiscard]] const std::vector<Complex> &amplitudes() const;

    void apply(std::size_t qubit, const Matrix2 &u);
    void apply_hadamard(std::size_t qubit);
    /// Marks the register consumed and releases its amplitudes.
    void destroy();

  private:
    friend BitString measure_in_bases(QuantumRegister &, const BitString &, Rng &);
    friend std::vector<std::size_t> measure_product_povm_indices(
        QuantumRegister &, std::span<const SingleQubitMeasurement>, Rng &);

    void require_alive(const char *op) const;

    QuantumRegister() = default;

    std::size_t qubits_ = 0;
    mutable std::vector<Complex> amps_;
    std::optional<std::vector<Qubit>> factors_;
    bool alive_ = true;
};

QuantumRegister prepare_bb84(const BB84Secret &secret);

/**
 * Measures qubit i in the standard basis (bases[i] = 0) or the Hadamard basis
 * (bases[i] = 1) and returns the outcome bits. Consumes the register.
 */
BitString measure_in_bases(QuantumRegister &reg, const BitString &bases, Rng &rng);

/// Samples one outcome index per qubit under the product POVM. Consumes the register.
std::vector<std::size_t> measure_product_povm_indices(
    QuantumRegister &reg, std::span<const SingleQubitMeasurement> per_qubit, Rng &rng);

/// As measure_product_povm_indices(), returning outcome labels.
std::vector<std::string> measure_product_povm(QuantumRegister &reg,
                                              std::span<const SingleQubitMeasurement> per_qubit,
                                              Rng &rng);

/**
 * Exact joint outcome distribution of the product POVM, without consuming the
 * register. Axis i is named "q<i>" with the labels of measurement i.
 */
info::JointDistribution outcome_distribution(const QuantumRegister &reg,
                                             std::span<const SingleQubitMeasurement> per_qubit);

} // namespace amnesia::quantum

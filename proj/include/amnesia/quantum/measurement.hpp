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
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace amnesia::quantum {

using Complex = std::complex<double>;
/// Row-major 2x2 complex matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Complex, 4>;

inline constexpr double kOperatorTolerance = 1e-12;

struct MeasurementOutcome {
    std::string label;
    Matrix2 op;
};

/**
 * @brief A single-qubit POVM with labelled outcomes.
 *
 * Operators must be Hermitian, positive semidefinite and sum to the identity,
 * each within 1e-12. Labels are unique. Each outcome also carries a Kraus
 * operator (the Hermitian square root of its effect) used when sampling.
 */
class SingleQubitMeasurement {
  public:
    explicit SingleQubitMeasurement(std::vector<MeasurementOutcome> outcomes);

    /// Computational basis, labels "0", "1".
    static SingleQubitMeasurement standard();
    /// Hadamard basis, labels "0" (|+>) and "1" (|->).
    static SingleQubitMeasurement hadamard();
    /// standard() for bit 0, hadamard() for bit 1.
    static SingleQubitMeasurement basis(std::uint8_t bit);
    /**
     * Projective measurement onto cos(polar/2)|0> + e^(i azimuth) sin(polar/2)|1>
     * (label "0") and its orthogonal complement (label "1").
     */
    static SingleQubitMeasurement projective(double polar, double azimuth);
    /// Projective basis rotated by pi/8: |b0> = cos(pi/8)|0> + sin(pi/8)|1>.
    static SingleQubitMeasurement breidbart();
    /// {|0><0|, |1><1|, |+><+|, |-><-|} / 2 with labels "0", "1", "+", "-".
    static SingleQubitMeasurement bb84_four_outcome();

    [[nodiscard]] std::size_t size() const noexcept { return outcomes_.size(); }
    [[nodiscard]] const MeasurementOutcome &outcome(std::size_t i) const { return outcomes_.at(i); }
    [[nodiscard]] const std::string &label(std::size_t i) const { return outcomes_.at(i).label; }
    [[nodiscard]] const Matrix2 &kraus(std::size_t i) const { return kraus_.at(i); }
    [[nodiscard]] std::vector<std::string> labels() const;
    /// Index of a label; throws if absent.
    [[nodiscard]] std::size_t index_of(const std::string &label) const;

    /// <psi| E_i |psi> for the single-qubit state alpha|0> + beta|1>.
    [[nodiscard]] double probability(std::size_t i, Complex alpha, Complex beta) const;

    /**
     * Coarse-grains outcomes: outcome i is renamed to new_labels[i] and
     * outcomes sharing a name are merged by adding their effects. Merged
     * outcomes appear in order of first occurrence.
     */
    [[nodiscard]] SingleQubitMeasurement relabel(const std::vector<std::string> &new_labels) const;

  private:
    std::vector<MeasurementOutcome> outcomes_;
    std::vector<Matrix2> kraus_;
};

/// Hermitian square root of a 2x2 positive semidefinite matrix.
Matrix2 psd_sqrt(const Matrix2 &m);

} // namespace amnesia::quantum

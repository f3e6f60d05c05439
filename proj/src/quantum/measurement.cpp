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

#include "amnesia/quantum/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace amnesia::quantum {

namespace {

Matrix2 projector(Complex a, Complex b) {
    return {a * std::conj(a), a * std::conj(b), b * std::conj(a), b * std::conj(b)};
}

Matrix2 scaled(const Matrix2 &m, double s) { return {m[0] * s, m[1] * s, m[2] * s, m[3] * s}; }

Matrix2 added(const Matrix2 &a, const Matrix2 &b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

void check_effect(const MeasurementOutcome &o) {
    const auto &m = o.op;
    if (std::abs(m[1] - std::conj(m[2])) > kOperatorTolerance ||
        std::abs(m[0].imag()) > kOperatorTolerance || std::abs(m[3].imag()) > kOperatorTolerance) {
        throw std::invalid_argument("measurement outcome '" + o.label + "' is not Hermitian");
    }
    const double a = m[0].real();
    const double d = m[3].real();
    const double spread = std::sqrt((a - d) * (a - d) / 4.0 + std::norm(m[1]));
    if ((a + d) / 2.0 - spread < -kOperatorTolerance) {
        throw std::invalid_argument("measurement outcome '" + o.label +
                                    "' is not positive semidefinite");
    }
}

} // namespace

Matrix2 psd_sqrt(const Matrix2 &m) {
    const double a = m[0].real();
    const double d = m[3].real();
    const double det = std::max(0.0, a * d - std::norm(m[1]));
    const double s = std::sqrt(det);
    const double t = a + d + 2.0 * s;
    if (t <= 0.0) {
        return {};
    }
    const double inv = 1.0 / std::sqrt(t);
    return {Complex(a + s, 0.0) * inv, m[1] * inv, m[2] * inv, Complex(d + s, 0.0) * inv};
}

SingleQubitMeasurement::SingleQubitMeasurement(std::vector<MeasurementOutcome> outcomes)
    : outcomes_(std::move(outcomes)) {
    if (outcomes_.empty()) {
        throw std::invalid_argument("measurement needs at least one outcome");
    }
    Matrix2 sum{};
    for (std::size_t i = 0; i < outcomes_.size(); ++i) {
        check_effect(outcomes_[i]);
        for (std::size_t j = 0; j < i; ++j) {
            if (outcomes_[j].label == outcomes_[i].label) {
                throw std::invalid_argument("duplicate measurement label '" +
                                            outcomes_[i].label + "'");
            }
        }
        sum = added(sum, outcomes_[i].op);
    }
    const Matrix2 id{1.0, 0.0, 0.0, 1.0};
    for (std::size_t k = 0; k < 4; ++k) {
        if (std::abs(sum[k] - id[k]) > kOperatorTolerance) {
            throw std::invalid_argument("measurement effects do not sum to the identity");
        }
    }
    kraus_.reserve(outcomes_.size());
    for (const auto &o : outcomes_) {
        kraus_.push_back(psd_sqrt(o.op));
    }
}

SingleQubitMeasurement SingleQubitMeasurement::standard() { return projective(0.0, 0.0); }

SingleQubitMeasurement SingleQubitMeasurement::hadamard() {
    return projective(std::numbers::pi / 2.0, 0.0);
}

SingleQubitMeasurement SingleQubitMeasurement::basis(std::uint8_t bit) {
    return bit == 0 ? standard() : hadamard();
}

SingleQubitMeasurement SingleQubitMeasurement::projective(double polar, double azimuth) {
    const Complex phase = std::polar(1.0, azimuth);
    const Complex a0 = std::cos(polar / 2.0);
    const Complex b0 = phase * std::sin(polar / 2.0);
    // Orthogonal complement: -e^{-i phi} sin|0> + cos|1>, up to phase.
    const Complex a1 = -std::sin(polar / 2.0);
    const Complex b1 = phase * std::cos(polar / 2.0);
    return SingleQubitMeasurement({{"0", projector(a0, b0)}, {"1", projector(a1, b1)}});
}

SingleQubitMeasurement SingleQubitMeasurement::breidbart() {
    return projective(std::numbers::pi / 4.0, 0.0);
}

SingleQubitMeasurement SingleQubitMeasurement::bb84_four_outcome() {
    const double r = 1.0 / std::numbers::sqrt2;
    return SingleQubitMeasurement({{"0", scaled(projector(1.0, 0.0), 0.5)},
                                   {"1", scaled(projector(0.0, 1.0), 0.5)},
                                   {"+", scaled(projector(r, r), 0.5)},
                                   {"-", scaled(projector(r, -r), 0.5)}});
}

std::vector<std::string> SingleQubitMeasurement::labels() const {
    std::vector<std::string> out;
    out.reserve(outcomes_.size());
    for (const auto &o : outcomes_) {
        out.push_back(o.label);
    }
    return out;
}

std::size_t SingleQubitMeasurement::index_of(const std::string &label) const {
    for (std::size_t i = 0; i < outcomes_.size(); ++i) {
        if (outcomes_[i].label == label) {
            return i;
        }
    }
    throw std::invalid_argument("unknown measurement label '" + label + "'");
}

double SingleQubitMeasurement::probability(std::size_t i, Complex alpha, Complex beta) const {
    const auto &m = outcomes_.at(i).op;
    const Complex v = std::conj(alpha) * (m[0] * alpha + m[1] * beta) +
                      std::conj(beta) * (m[2] * alpha + m[3] * beta);
    return std::max(0.0, v.real());
}

SingleQubitMeasurement
SingleQubitMeasurement::relabel(const std::vector<std::string> &new_labels) const {
    if (new_labels.size() != outcomes_.size()) {
        throw std::invalid_argument("relabel: one label per outcome required");
    }
    std::vector<MeasurementOutcome> merged;
    for (std::size_t i = 0; i < outcomes_.size(); ++i) {
        const auto &name = new_labels[i];
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const MeasurementOutcome &o) { return o.label == name; });
        if (it == merged.end()) {
            merged.push_back({new_labels[i], outcomes_[i].op});
        } else {
            it->op = added(it->op, outcomes_[i].op);
        }
    }
    return SingleQubitMeasurement(std::move(merged));
}

} // namespace amnesia::quantum

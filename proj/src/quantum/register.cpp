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

#include "amnesia/quantum/register.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace amnesia::quantum {

namespace {

constexpr std::size_t kMaxDistributionAtoms = std::size_t{1} << 20;

// Applies u to qubit q of an amplitude vector over n qubits.
void apply_to(std::vector<Complex> &amps, std::size_t n, std::size_t q, const Matrix2 &u) {
    const std::size_t stride = std::size_t{1} << (n - 1 - q);
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex a0 = amps[i];
            const Complex a1 = amps[i + stride];
            amps[i] = u[0] * a0 + u[1] * a1;
            amps[i + stride] = u[2] * a0 + u[3] * a1;
        }
    }
}

double norm_sq(const std::vector<Complex> &amps) {
    double total = 0.0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    return total;
}

const Matrix2 &hadamard_matrix() {
    static const double r = 1.0 / std::numbers::sqrt2;
    static const Matrix2 h{r, r, r, -r};
    return h;
}

// Index k drawn with probability weights[k] / sum(weights).
std::size_t sample_index(std::span<const double> weights, double total, Rng &rng) {
    const double u = rng.uniform() * total;
    double acc = 0.0;
    std::size_t last = 0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (weights[k] <= 0.0) {
            continue;
        }
        acc += weights[k];
        last = k;
        if (u < acc) {
            return k;
        }
    }
    return last;
}

// Draws 0 with probability w0 / (w0 + w1).
std::uint8_t sample_bit(double w0, double w1, Rng &rng) {
    return rng.uniform() * (w0 + w1) < w0 ? 0 : 1;
}

void check_povms(const QuantumRegister &reg, std::span<const SingleQubitMeasurement> per_qubit) {
    if (per_qubit.size() != reg.qubits()) {
        throw std::invalid_argument("one measurement per qubit required");
    }
}

} // namespace

QuantumRegister::QuantumRegister(std::size_t qubits, std::vector<Complex> amplitudes)
    : qubits_(qubits), amps_(std::move(amplitudes)) {
    if (qubits_ == 0 || qubits_ > kMaxQubits) {
        throw std::invalid_argument("QuantumRegister: qubit count must be in [1, 24]");
    }
    if (amps_.size() != (std::size_t{1} << qubits_)) {
        throw std::invalid_argument("QuantumRegister: amplitude vector must have length 2^n");
    }
    if (std::abs(norm_sq(amps_) - 1.0) > 1e-12) {
        throw std::invalid_argument("QuantumRegister: state is not normalised");
    }
}

QuantumRegister QuantumRegister::basis_state(const BitString &bits) {
    std::vector<Qubit> factors;
    factors.reserve(bits.size());
    for (auto b : bits) {
        factors.push_back(b ? Qubit{0.0, 1.0} : Qubit{1.0, 0.0});
    }
    return product_state(std::move(factors));
}

QuantumRegister QuantumRegister::product_state(std::vector<Qubit> factors) {
    if (factors.empty() || factors.size() > kMaxQubits) {
        throw std::invalid_argument("product_state: qubit count must be in [1, 24]");
    }
    for (const auto &f : factors) {
        if (std::abs(std::norm(f[0]) + std::norm(f[1]) - 1.0) > 1e-12) {
            throw std::invalid_argument("product_state: factor is not normalised");
        }
    }
    QuantumRegister reg;
    reg.qubits_ = factors.size();
    reg.factors_ = std::move(factors);
    return reg;
}

const std::vector<Qubit> &QuantumRegister::factors() const {
    require_alive("factors");
    if (!factors_) {
        throw std::logic_error("factors: register is not a product state");
    }
    return *factors_;
}

const std::vector<Complex> &QuantumRegister::amplitudes() const {
    require_alive("amplitudes");
    if (factors_ && amps_.empty()) {
        amps_.assign(1, Complex{1.0});
        for (const auto &f : *factors_) {
            std::vector<Complex> next(amps_.size() * 2);
            for (std::size_t i = 0; i < amps_.size(); ++i) {
                next[2 * i] = amps_[i] * f[0];
                next[2 * i + 1] = amps_[i] * f[1];
            }
            amps_ = std::move(next);
        }
    }
    return amps_;
}

void QuantumRegister::require_alive(const char *op) const {
    if (!alive_) {
        throw std::logic_error(std::string(op) + ": register has already been consumed");
    }
}

void QuantumRegister::apply(std::size_t qubit, const Matrix2 &u) {
    require_alive("apply");
    if (qubit >= qubits_) {
        throw std::out_of_range("apply: qubit index out of range");
    }
    if (factors_) {
        auto &f = (*factors_)[qubit];
        f = {u[0] * f[0] + u[1] * f[1], u[2] * f[0] + u[3] * f[1]};
        amps_.clear();
        return;
    }
    apply_to(amps_, qubits_, qubit, u);
}

void QuantumRegister::apply_hadamard(std::size_t qubit) { apply(qubit, hadamard_matrix()); }

void QuantumRegister::destroy() {
    alive_ = false;
    factors_.reset();
    amps_.clear();
    amps_.shrink_to_fit();
}

QuantumRegister prepare_bb84(const BB84Secret &secret) {
    if (secret.a.size() != secret.theta.size()) {
        throw std::invalid_argument("prepare_bb84: a and theta differ in length");
    }
    auto reg = QuantumRegister::basis_state(secret.a);
    for (std::size_t i = 0; i < secret.theta.size(); ++i) {
        if (secret.theta[i] != 0) {
            reg.apply_hadamard(i);
        }
    }
    return reg;
}

BitString measure_in_bases(QuantumRegister &reg, const BitString &bases, Rng &rng) {
    reg.require_alive("measure_in_bases");
    if (bases.size() != reg.qubits_) {
        throw std::invalid_argument(
            "measure_in_bases: basis string length differs from qubit count");
    }
    if (reg.factors_) {
        const double r = 1.0 / std::numbers::sqrt2;
        BitString out(bases.size());
        for (std::size_t i = 0; i < bases.size(); ++i) {
            auto [c0, c1] = (*reg.factors_)[i];
            if (bases[i] != 0) {
                std::tie(c0, c1) = std::pair{r * (c0 + c1), r * (c0 - c1)};
            }
            out.set(i, sample_bit(std::norm(c0), std::norm(c1), rng));
        }
        reg.destroy();
        return out;
    }
    for (std::size_t i = 0; i < bases.size(); ++i) {
        if (bases[i] != 0) {
            apply_to(reg.amps_, reg.qubits_, i, hadamard_matrix());
        }
    }
    std::vector<double> weights(reg.amps_.size());
    double total = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        weights[k] = std::norm(reg.amps_[k]);
        total += weights[k];
    }
    const auto index = sample_index(weights, total, rng);
    const std::size_t n = reg.qubits_;
    reg.destroy();
    return BitString::from_uint(index, n);
}

std::vector<std::size_t> measure_product_povm_indices(
    QuantumRegister &reg, std::span<const SingleQubitMeasurement> per_qubit, Rng &rng) {
    reg.require_alive("measure_product_povm");
    check_povms(reg, per_qubit);
    const std::size_t n = reg.qubits_;
    std::vector<std::size_t> result(n);
    std::vector<Complex> branch;
    std::vector<double> weights;
    if (reg.factors_) {
        for (std::size_t q = 0; q < n; ++q) {
            const auto &m = per_qubit[q];
            const auto &f = (*reg.factors_)[q];
            weights.assign(m.size(), 0.0);
            double total = 0.0;
            for (std::size_t k = 0; k < m.size(); ++k) {
                weights[k] = m.probability(k, f[0], f[1]);
                total += weights[k];
            }
            result[q] = sample_index(weights, total, rng);
        }
        reg.destroy();
        return result;
    }
    for (std::size_t q = 0; q < n; ++q) {
        const auto &m = per_qubit[q];
        weights.assign(m.size(), 0.0);
        double total = 0.0;
        for (std::size_t k = 0; k < m.size(); ++k) {
            branch = reg.amps_;
            apply_to(branch, n, q, m.kraus(k));
            weights[k] = norm_sq(branch);
            total += weights[k];
        }
        const auto k = sample_index(weights, total, rng);
        result[q] = k;
        apply_to(reg.amps_, n, q, m.kraus(k));
        const double scale = 1.0 / std::sqrt(weights[k]);
        for (auto &a : reg.amps_) {
            a *= scale;
        }
    }
    reg.destroy();
    return result;
}

std::vector<std::string> measure_product_povm(QuantumRegister &reg,
                                              std::span<const SingleQubitMeasurement> per_qubit,
                                              Rng &rng) {
    const auto indices = measure_product_povm_indices(reg, per_qubit, rng);
    std::vector<std::string> labels;
    labels.reserve(indices.size());
    for (std::size_t q = 0; q < indices.size(); ++q) {
        labels.push_back(per_qubit[q].label(indices[q]));
    }
    return labels;
}

info::JointDistribution outcome_distribution(const QuantumRegister &reg,
                                             std::span<const SingleQubitMeasurement> per_qubit) {
    const auto &amps = reg.amplitudes();
    check_povms(reg, per_qubit);
    const std::size_t n = reg.qubits();
    std::vector<info::Axis> axes;
    std::size_t atoms = 1;
    for (std::size_t q = 0; q < n; ++q) {
        axes.push_back({"q" + std::to_string(q), per_qubit[q].labels()});
        atoms *= per_qubit[q].size();
        if (atoms > kMaxDistributionAtoms) {
            throw std::length_error("outcome_distribution: more than 2^20 joint outcomes");
        }
    }
    std::vector<double> probs(atoms, 0.0);
    // Depth-first over outcomes; branch states stay unnormalised so their
    // squared norm is the path probability.
    std::vector<std::vector<Complex>> stack(n + 1);
    stack[0] = amps;
    auto visit = [&](auto &&self, std::size_t q, std::size_t flat) -> void {
        if (q == n) {
            probs[flat] = norm_sq(stack[n]);
            return;
        }
        const auto &m = per_qubit[q];
        for (std::size_t k = 0; k < m.size(); ++k) {
            stack[q + 1] = stack[q];
            apply_to(stack[q + 1], n, q, m.kraus(k));
            if (norm_sq(stack[q + 1]) == 0.0) {
                continue;
            }
            self(self, q + 1, flat * m.size() + k);
        }
    };
    visit(visit, 0, 0);
    return info::JointDistribution(std::move(axes), std::move(probs));
}

} // namespace amnesia::quantum

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

#include "amnesia/adversary/ot_attack.hpp"

#include <numbers>
#include <stdexcept>

namespace amnesia::adversary {

namespace {

constexpr double kTieTolerance = 1e-12;

quantum::Complex amplitude(std::uint8_t bit, std::uint8_t basis, std::size_t component) {
    if (basis == 0) {
        return component == bit ? 1.0 : 0.0;
    }
    const double r = 1.0 / std::numbers::sqrt2;
    return component == 0 ? r : (bit == 0 ? r : -r);
}

XGuesser constant_guesser(bool uniform) {
    return [uniform](std::span<const std::size_t>, const BitString &theta) {
        XGuess g;
        g.x0 = BitString(positions_equal(theta, 0).size(), 0);
        g.x1 = BitString(positions_equal(theta, 1).size(), 0);
        g.uniform_m0 = uniform;
        g.uniform_m1 = uniform;
        return g;
    };
}

} // namespace

HashGuess MementoOtStrategy::guess(std::span<const std::size_t> w, const BitString &theta,
                                   const hashing::HashDescriptor &h0,
                                   const hashing::HashDescriptor &h1) const {
    if (hash_guess) {
        return hash_guess(w, theta, h0, h1);
    }
    const auto g = x_guess(w, theta);
    HashGuess out;
    if (!g.uniform_m0) {
        out.m0 = hashing::eval_hash(h0, g.x0);
    }
    if (!g.uniform_m1) {
        out.m1 = hashing::eval_hash(h1, g.x1);
    }
    return out;
}

std::vector<std::array<std::uint8_t, 2>> map_guess_table(const quantum::SingleQubitMeasurement &m) {
    std::vector<std::array<std::uint8_t, 2>> table(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
        for (std::uint8_t basis = 0; basis < 2; ++basis) {
            const double p0 = m.probability(k, amplitude(0, basis, 0), amplitude(0, basis, 1));
            const double p1 = m.probability(k, amplitude(1, basis, 0), amplitude(1, basis, 1));
            table[k][basis] = p1 > p0 + kTieTolerance ? 1 : 0;
        }
    }
    return table;
}

XGuesser map_x_guesser(const quantum::SingleQubitMeasurement &m, bool uniform_m0,
                       bool uniform_m1) {
    return [table = map_guess_table(m), uniform_m0, uniform_m1](std::span<const std::size_t> w,
                                                                const BitString &theta) {
        if (w.size() != theta.size()) {
            throw std::invalid_argument("x guesser: memento and theta differ in length");
        }
        XGuess g;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const auto bit = table.at(w[i])[theta[i]];
            (theta[i] == 0 ? g.x0 : g.x1).push_back(bit);
        }
        g.uniform_m0 = uniform_m0;
        g.uniform_m1 = uniform_m1;
        return g;
    };
}

BitString reassemble(const XGuess &g, const BitString &theta) {
    BitString out(theta.size(), 0);
    std::size_t i0 = 0;
    std::size_t i1 = 0;
    for (std::size_t i = 0; i < theta.size(); ++i) {
        if (theta[i] == 0) {
            out.set(i, g.x0.at(i0++));
        } else {
            out.set(i, g.x1.at(i1++));
        }
    }
    if (i0 != g.x0.size() || i1 != g.x1.size()) {
        throw std::invalid_argument("reassemble: guess lengths do not match theta");
    }
    return out;
}

std::vector<std::string> builtin_attack_ids() {
    return {"honest-b0",  "honest-b1",         "standard-basis", "hadamard-basis",
            "breidbart",  "bb84-four-outcome", "constant",       "blind"};
}

MementoOtStrategy builtin_attack(const std::string &id) {
    using quantum::SingleQubitMeasurement;
    MementoOtStrategy s{id, SingleQubitMeasurement::standard(), {}, {}};
    if (id == "honest-b0") {
        s.x_guess = map_x_guesser(s.measurement, false, true);
    } else if (id == "honest-b1") {
        s.measurement = SingleQubitMeasurement::hadamard();
        s.x_guess = map_x_guesser(s.measurement, true, false);
    } else if (id == "standard-basis") {
        s.x_guess = map_x_guesser(s.measurement);
    } else if (id == "hadamard-basis") {
        s.measurement = SingleQubitMeasurement::hadamard();
        s.x_guess = map_x_guesser(s.measurement);
    } else if (id == "breidbart") {
        s.measurement = SingleQubitMeasurement::breidbart();
        s.x_guess = map_x_guesser(s.measurement);
    } else if (id == "bb84-four-outcome") {
        s.measurement = SingleQubitMeasurement::bb84_four_outcome();
        s.x_guess = map_x_guesser(s.measurement);
    } else if (id == "constant") {
        s.x_guess = constant_guesser(false);
    } else if (id == "blind") {
        s.x_guess = constant_guesser(true);
    } else {
        throw std::invalid_argument("unknown attack '" + id + "'");
    }
    return s;
}

std::vector<MementoOtStrategy> builtin_attacks() {
    std::vector<MementoOtStrategy> out;
    for (const auto &id : builtin_attack_ids()) {
        out.push_back(builtin_attack(id));
    }
    return out;
}

} // namespace amnesia::adversary

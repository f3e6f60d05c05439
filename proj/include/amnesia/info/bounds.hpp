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

namespace amnesia::info {

/// cos^2(pi/8) = 1/2 + 1/(2 sqrt 2): single-qubit double-opening optimum.
double breidbart_value();

/// cos^(2 lambda)(pi/8), the product-strategy double-opening probability.
double binding_bound(std::size_t lambda);

/// (1/2 + 1/(2 sqrt 2))^lambda, the monogamy game winning bound.
double moe_bound(std::size_t lambda);

/// lambda * log2(4 - 2 sqrt 2), the joint min-entropy of (X0, X1) given the memento.
double joint_min_entropy_bound(std::size_t lambda);

/// (lambda/2) log2(4 - 2 sqrt 2) - 1 - log2(1/delta), the smooth entropy of the hard side.
double smooth_entropy_bound(std::size_t lambda, double delta);

/// 2^(-(h - ell)/2) + 2 delta, the leftover hash bound for smooth entropy h.
double lhl_rhs(double smooth_entropy, std::size_t ell, double delta);

/// Hash bound with delta = 2^(-lambda/20) substituted, before simplification.
double hash_bound_instantiated(std::size_t lambda, std::size_t ell);

/// 2 (2^(ell - 0.0071 lambda) + 2^(-lambda/20)). Requires lambda, ell >= 1.
double receiver_advantage_bound(std::size_t lambda, std::size_t ell);

} // namespace amnesia::info

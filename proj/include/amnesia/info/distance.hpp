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

#include "amnesia/common/numeric.hpp"
#include "amnesia/info/distribution.hpp"

namespace amnesia::info {

/// Half the entrywise absolute difference. Both tables must have the same shape.
double statistical_distance(const JointDistribution &a, const JointDistribution &b);
/// Exact variant; both tables must be in exact mode.
Rational statistical_distance_exact(const JointDistribution &a, const JointDistribution &b);
/// Unnormalised entrywise 1-norm, twice statistical_distance().
double l1_distance(const JointDistribution &a, const JointDistribution &b);

} // namespace amnesia::info

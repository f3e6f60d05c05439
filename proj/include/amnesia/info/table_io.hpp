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

#include <iosfwd>
#include <string>

#include "amnesia/info/distribution.hpp"

#include "json.hpp"

namespace amnesia::info {

// JSON layout: {"axes": [{"name": ..., "labels": [...]}, ...], "probs": [...]}
// with probs row-major. Exact tables additionally carry "weights" (integers
// over their sum); when present they take precedence over "probs".
nlohmann::json to_json(const JointDistribution &d);
JointDistribution from_json(const nlohmann::json &j);

// CSV layout: one column per axis (header = axis name) followed by "prob".
// One row per atom in row-major order; zero atoms are written too.
void write_csv(std::ostream &out, const JointDistribution &d);
/// Reads the CSV layout above. Labels are collected per axis in order of first
/// appearance; atoms missing from the file have probability 0.
JointDistribution read_csv(std::istream &in);

} // namespace amnesia::info

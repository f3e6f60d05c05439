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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "amnesia/cli/config.hpp"

#include "json.hpp"

namespace amnesia::cli {

inline constexpr int kReportSchema = 1;

const char *version_string();

std::string sha256_hex(std::span<const std::uint8_t> bytes);

/// {schema, version, command, seed, config}; callers add results, columns and rows.
nlohmann::json report_header(const ExperimentConfig &config);

/**
 * JSON is pretty-printed with sorted keys. CSV holds the report's "rows"
 * with a header line taken from its "columns" array, in that order.
 */
std::string render_report(const nlohmann::json &report, const std::string &format);

/// Writes the rendered report to config.out, or to stdout when it is empty.
void emit_report(const nlohmann::json &report, const ExperimentConfig &config);

} // namespace amnesia::cli

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
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace amnesia::cli {

/// Prefix shared by every environment override, e.g. AMNESIA_LAMBDA.
inline constexpr const char *kEnvPrefix = "AMNESIA_";

struct ExperimentConfig {
    std::string subcommand;
    std::string suite = "all"; ///< verify only
    std::size_t lambda = 8;
    std::size_t ell = 1;
    std::uint64_t seed = 1;
    std::uint64_t trials = 1000;
    std::string adversary;
    bool exact = false;
    std::string out;
    std::string format = "json";
    // ot-wrap inputs
    std::string m0;
    std::string m1;
    unsigned choice = 0;

    /// Throws std::invalid_argument on out-of-range values.
    void validate() const;
    [[nodiscard]] nlohmann::json to_json() const;
};

/// Thrown for configuration errors; maps to exit code 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace amnesia::cli

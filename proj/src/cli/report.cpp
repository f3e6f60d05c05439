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

#include "amnesia/cli/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#include "amnesia/common/bits.hpp"

#ifndef AMNESIA_VERSION_STRING
#define AMNESIA_VERSION_STRING "amnesia unknown"
#endif

namespace amnesia::cli {

namespace {

std::string csv_cell(const nlohmann::json &v) {
    if (v.is_null()) {
        return "";
    }
    std::string text = v.is_string() ? v.get<std::string>() : v.dump();
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char ch : text) {
        if (ch == '"') {
            quoted += '"';
        }
        quoted += ch;
    }
    return quoted + "\"";
}

} // namespace

const char *version_string() { return AMNESIA_VERSION_STRING; }

std::string sha256_hex(std::span<const std::uint8_t> bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256: digest computation failed");
    }
    return to_hex(std::span<const std::uint8_t>(digest, len));
}

nlohmann::json report_header(const ExperimentConfig &config) {
    return {{"schema", kReportSchema},
            {"version", version_string()},
            {"command", config.subcommand},
            {"seed", config.seed},
            {"config", config.to_json()}};
}

std::string render_report(const nlohmann::json &report, const std::string &format) {
    if (format == "json") {
        return report.dump(2) + "\n";
    }
    if (format != "csv") {
        throw UsageError("unknown report format '" + format + "'");
    }
    std::ostringstream out;
    const auto &columns = report.at("columns");
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out << (i ? "," : "") << columns[i].get<std::string>();
    }
    out << "\n";
    for (const auto &row : report.at("rows")) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            const auto &key = columns[i].get_ref<const std::string &>();
            out << (i ? "," : "") << (row.contains(key) ? csv_cell(row.at(key)) : "");
        }
        out << "\n";
    }
    return out.str();
}

void emit_report(const nlohmann::json &report, const ExperimentConfig &config) {
    const auto text = render_report(report, config.format);
    if (config.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open '" + config.out + "' for writing");
    }
    file << text;
}

} // namespace amnesia::cli

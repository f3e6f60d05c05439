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

#include "amnesia/info/table_io.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace amnesia::info {

nlohmann::json to_json(const JointDistribution &d) {
    nlohmann::json axes = nlohmann::json::array();
    for (const auto &a : d.axes()) {
        axes.push_back({{"name", a.name}, {"labels", a.labels}});
    }
    nlohmann::json j;
    j["axes"] = std::move(axes);
    j["probs"] = std::vector<double>(d.probs().begin(), d.probs().end());
    if (d.is_exact()) {
        j["weights"] = std::vector<std::uint64_t>(d.weights().begin(), d.weights().end());
    }
    return j;
}

JointDistribution from_json(const nlohmann::json &j) {
    std::vector<Axis> axes;
    for (const auto &a : j.at("axes")) {
        axes.push_back(Axis{a.at("name").get<std::string>(),
                            a.at("labels").get<std::vector<std::string>>()});
    }
    if (j.contains("weights")) {
        return JointDistribution::from_weights(std::move(axes),
                                               j.at("weights").get<std::vector<std::uint64_t>>());
    }
    return JointDistribution(std::move(axes), j.at("probs").get<std::vector<double>>());
}

namespace {

std::vector<std::string> split_row(const std::string &line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

} // namespace

void write_csv(std::ostream &out, const JointDistribution &d) {
    for (const auto &a : d.axes()) {
        out << a.name << ',';
    }
    out << "prob\n";
    std::ostringstream num;
    num.precision(17);
    for (std::size_t flat = 0; flat < d.size(); ++flat) {
        const auto c = d.coords(flat);
        for (std::size_t i = 0; i < c.size(); ++i) {
            out << d.axes()[i].labels[c[i]] << ',';
        }
        num.str("");
        num << d.prob(flat);
        out << num.str() << '\n';
    }
}

JointDistribution read_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("read_csv: missing header");
    }
    auto header = split_row(line);
    if (header.size() < 2 || header.back() != "prob") {
        throw std::invalid_argument("read_csv: header must end with a 'prob' column");
    }
    const std::size_t rank = header.size() - 1;
    std::vector<Axis> axes(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        axes[i].name = header[i];
    }
    std::vector<std::pair<std::vector<std::size_t>, double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto cells = split_row(line);
        if (cells.size() != rank + 1) {
            throw std::invalid_argument("read_csv: wrong number of cells in '" + line + "'");
        }
        std::vector<std::size_t> coords(rank);
        for (std::size_t i = 0; i < rank; ++i) {
            auto &labels = axes[i].labels;
            auto it = std::find(labels.begin(), labels.end(), cells[i]);
            if (it == labels.end()) {
                labels.push_back(cells[i]);
                it = labels.end() - 1;
            }
            coords[i] = static_cast<std::size_t>(it - labels.begin());
        }
        rows.emplace_back(std::move(coords), std::stod(cells[rank]));
    }
    std::size_t total = 1;
    for (const auto &a : axes) {
        if (a.labels.empty()) {
            throw std::invalid_argument("read_csv: no rows");
        }
        total *= a.size();
    }
    std::vector<double> probs(total, 0.0);
    for (const auto &[coords, p] : rows) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < rank; ++i) {
            idx = idx * axes[i].size() + coords[i];
        }
        probs[idx] += p;
    }
    return JointDistribution(std::move(axes), std::move(probs));
}

} // namespace amnesia::info

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

#include "amnesia/info/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace amnesia::info {

namespace {

std::size_t product_of_sizes(const std::vector<Axis> &axes) {
    std::size_t n = 1;
    for (const auto &a : axes) {
        if (a.size() == 0) {
            throw std::invalid_argument("JointDistribution: axis '" + a.name + "' is empty");
        }
        if (n > std::numeric_limits<std::size_t>::max() / a.size()) {
            throw std::length_error("JointDistribution: table too large");
        }
        n *= a.size();
    }
    return n;
}


// Flattened index of the sub-tuple `axes` of the atom at `coords`.
std::size_t sub_index(std::span<const std::size_t> coords, std::span<const std::size_t> axes,
                      const std::vector<std::size_t> &shape) {
    std::size_t idx = 0;
    for (auto a : axes) {
        idx = idx * shape[a] + coords[a];
    }
    return idx;
}

} // namespace

JointDistribution::JointDistribution(std::vector<Axis> axes, std::vector<double> probs)
    : axes_(std::move(axes)), probs_(std::move(probs)) {
    validate_axes();
    if (probs_.size() != product_of_sizes(axes_)) {
        throw std::invalid_argument("JointDistribution: table size does not match axes");
    }
    double total = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw std::invalid_argument("JointDistribution: entries must be finite and >= 0");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kMassTolerance) {
        throw std::invalid_argument("JointDistribution: total mass is not 1");
    }
}

JointDistribution JointDistribution::from_weights(std::vector<Axis> axes,
                                                  std::vector<std::uint64_t> weights) {
    JointDistribution d;
    d.axes_ = std::move(axes);
    d.validate_axes();
    if (weights.size() != product_of_sizes(d.axes_)) {
        throw std::invalid_argument("JointDistribution: table size does not match axes");
    }
    std::uint64_t total = 0;
    for (auto w : weights) {
        if (w > std::numeric_limits<std::uint64_t>::max() - total) {
            throw std::overflow_error("JointDistribution: weight sum overflows 64 bits");
        }
        total += w;
    }
    if (total == 0) {
        throw std::invalid_argument("JointDistribution: all weights are zero");
    }
    d.probs_.resize(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        d.probs_[i] = static_cast<double>(weights[i]) / static_cast<double>(total);
    }
    d.weights_ = std::move(weights);
    d.denominator_ = total;
    return d;
}

void JointDistribution::validate_axes() const {
    if (axes_.empty()) {
        throw std::invalid_argument("JointDistribution: at least one axis is required");
    }
    std::set<std::string> names;
    for (const auto &a : axes_) {
        if (!names.insert(a.name).second) {
            throw std::invalid_argument("JointDistribution: duplicate axis name '" + a.name + "'");
        }
        std::set<std::string> labels(a.labels.begin(), a.labels.end());
        if (labels.size() != a.labels.size()) {
            throw std::invalid_argument("JointDistribution: duplicate label on axis '" + a.name +
                                        "'");
        }
    }
}

std::vector<std::size_t> JointDistribution::shape() const {
    std::vector<std::size_t> s;
    s.reserve(axes_.size());
    for (const auto &a : axes_) {
        s.push_back(a.size());
    }
    return s;
}

std::span<const std::uint64_t> JointDistribution::weights() const {
    if (!weights_) {
        throw std::logic_error("JointDistribution: table is not in exact mode");
    }
    return *weights_;
}

std::size_t JointDistribution::axis(std::string_view name) const {
    for (std::size_t i = 0; i < axes_.size(); ++i) {
        if (axes_[i].name == name) {
            return i;
        }
    }
    throw std::out_of_range("JointDistribution: no axis named '" + std::string(name) + "'");
}

std::size_t JointDistribution::flat_index(std::span<const std::size_t> coords) const {
    if (coords.size() != axes_.size()) {
        throw std::invalid_argument("JointDistribution: wrong number of coordinates");
    }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] >= axes_[i].size()) {
            throw std::out_of_range("JointDistribution: coordinate out of range");
        }
        idx = idx * axes_[i].size() + coords[i];
    }
    return idx;
}

std::vector<std::size_t> JointDistribution::coords(std::size_t flat) const {
    std::vector<std::size_t> c(axes_.size());
    for (std::size_t i = axes_.size(); i-- > 0;) {
        c[i] = flat % axes_[i].size();
        flat /= axes_[i].size();
    }
    return c;
}

double JointDistribution::prob_of(std::span<const std::string> labels) const {
    if (labels.size() != axes_.size()) {
        throw std::invalid_argument("JointDistribution: wrong number of labels");
    }
    std::vector<std::size_t> c(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto &ls = axes_[i].labels;
        auto it = std::find(ls.begin(), ls.end(), labels[i]);
        if (it == ls.end()) {
            return 0.0;
        }
        c[i] = static_cast<std::size_t>(it - ls.begin());
    }
    return probs_[flat_index(c)];
}

JointDistribution JointDistribution::marginal(std::span<const std::size_t> keep) const {
    std::vector<Axis> kept;
    std::set<std::size_t> seen;
    for (auto k : keep) {
        if (k >= axes_.size() || !seen.insert(k).second) {
            throw std::invalid_argument("JointDistribution::marginal: bad axis list");
        }
        kept.push_back(axes_[k]);
    }
    const auto shp = shape();
    std::vector<std::size_t> c(axes_.size(), 0);
    if (weights_) {
        std::vector<std::uint64_t> w(product_of_sizes(kept), 0);
        for (std::size_t flat = 0; flat < probs_.size(); ++flat) {
            w[sub_index(c, keep, shp)] += (*weights_)[flat];
            for (std::size_t i = c.size(); i-- > 0;) {
                if (++c[i] < shp[i]) {
                    break;
                }
                c[i] = 0;
            }
        }
        return from_weights(std::move(kept), std::move(w));
    }
    std::vector<double> p(product_of_sizes(kept), 0.0);
    for (std::size_t flat = 0; flat < probs_.size(); ++flat) {
        p[sub_index(c, keep, shp)] += probs_[flat];
        for (std::size_t i = c.size(); i-- > 0;) {
            if (++c[i] < shp[i]) {
                break;
            }
            c[i] = 0;
        }
    }
    return JointDistribution(std::move(kept), std::move(p));
}

std::size_t JointDistribution::support_size() const {
    std::size_t n = 0;
    for (double p : probs_) {
        n += p > 0.0 ? 1 : 0;
    }
    return n;
}

ConditionalTable conditional_table(const JointDistribution &d, std::span<const std::size_t> target,
                                   std::span<const std::size_t> cond) {
    if (target.empty()) {
        throw std::invalid_argument("conditional_table: target axes must not be empty");
    }
    std::set<std::size_t> used;
    for (auto a : target) {
        if (a >= d.rank() || !used.insert(a).second) {
            throw std::invalid_argument("conditional_table: bad target axis list");
        }
    }
    for (auto a : cond) {
        if (a >= d.rank() || !used.insert(a).second) {
            throw std::invalid_argument("conditional_table: target and conditioning axes overlap");
        }
    }
    const auto shp = d.shape();
    ConditionalTable t;
    t.cols = 1;
    for (auto a : target) {
        t.cols *= shp[a];
    }
    t.rows = 1;
    for (auto a : cond) {
        t.rows *= shp[a];
    }
    t.values.assign(t.rows * t.cols, 0.0);
    if (d.is_exact()) {
        t.weights.emplace(t.rows * t.cols, 0);
        t.denominator = d.denominator();
    }
    std::vector<std::size_t> c(d.rank(), 0);
    for (std::size_t flat = 0; flat < d.size(); ++flat) {
        const auto cell = sub_index(c, cond, shp) * t.cols + sub_index(c, target, shp);
        t.values[cell] += d.prob(flat);
        if (t.weights) {
            (*t.weights)[cell] += d.weights()[flat];
        }
        for (std::size_t i = c.size(); i-- > 0;) {
            if (++c[i] < shp[i]) {
                break;
            }
            c[i] = 0;
        }
    }
    if (t.weights) {
        for (std::size_t i = 0; i < t.values.size(); ++i) {
            t.values[i] = static_cast<double>((*t.weights)[i]) / static_cast<double>(t.denominator);
        }
    }
    return t;
}

} // namespace amnesia::info

// Copyright 2026 The entcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entcert/outcome_pmf.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entcert {

OutcomePmf OutcomePmf::from_entries(std::vector<PmfEntry> entries) {
    for (const auto &e : entries) {
        if (!std::isfinite(e.probability) || e.probability < 0.0) {
            throw std::domain_error("OutcomePmf: probability must be finite and non-negative");
        }
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const PmfEntry &a, const PmfEntry &b) { return a.outcome < b.outcome; });
    OutcomePmf pmf;
    pmf.entries_.reserve(entries.size());
    for (auto &e : entries) {
        if (!pmf.entries_.empty() && pmf.entries_.back().outcome == e.outcome) {
            pmf.entries_.back().probability += e.probability;
        } else {
            pmf.entries_.push_back(e);
        }
    }
    return pmf;
}

OutcomePmf OutcomePmf::from_map(const std::map<Rational, double> &masses) {
    std::vector<PmfEntry> entries;
    entries.reserve(masses.size());
    for (const auto &[q, p] : masses) entries.push_back({q, p});
    return from_entries(std::move(entries));
}

OutcomePmf OutcomePmf::point_mass(const Rational &outcome) { return from_entries({{outcome, 1.0}}); }

std::vector<Rational> OutcomePmf::outcomes() const {
    std::vector<Rational> out;
    out.reserve(entries_.size());
    for (const auto &e : entries_) out.push_back(e.outcome);
    return out;
}

bool OutcomePmf::contains(const Rational &outcome) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), outcome,
                               [](const PmfEntry &e, const Rational &q) { return e.outcome < q; });
    return it != entries_.end() && it->outcome == outcome;
}

double OutcomePmf::probability(const Rational &outcome) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), outcome,
                               [](const PmfEntry &e, const Rational &q) { return e.outcome < q; });
    return (it != entries_.end() && it->outcome == outcome) ? it->probability : 0.0;
}

double OutcomePmf::total_mass() const {
    double total = 0.0;
    for (const auto &e : entries_) total += e.probability;
    return total;
}

double OutcomePmf::mass_where(const std::function<bool(const Rational &)> &predicate) const {
    double total = 0.0;
    for (const auto &e : entries_) {
        if (predicate(e.outcome)) total += e.probability;
    }
    return total;
}

Moments OutcomePmf::moments() const {
    double mean = 0.0;
    for (const auto &e : entries_) mean += e.probability * e.outcome.to_double();
    double variance = 0.0;
    for (const auto &e : entries_) {
        double d = e.outcome.to_double() - mean;
        variance += e.probability * d * d;
    }
    return {mean, variance};
}

OutcomePmf OutcomePmf::normalized() const {
    double total = total_mass();
    if (!(total > 0.0)) {
        throw std::domain_error("OutcomePmf::normalized: zero total mass");
    }
    OutcomePmf out = *this;
    for (auto &e : out.entries_) e.probability /= total;
    return out;
}

}  // namespace entcert

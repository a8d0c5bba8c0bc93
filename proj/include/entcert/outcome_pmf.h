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

#ifndef ENTCERT_OUTCOME_PMF_H
#define ENTCERT_OUTCOME_PMF_H

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "entcert/rational.h"

namespace entcert {

struct PmfEntry {
    Rational outcome;
    double probability = 0.0;

    bool operator==(const PmfEntry &) const = default;
};

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};

/// Probability mass function over an exact rational outcome grid.
///
/// Entries are strictly increasing in outcome. Zero-probability grid points are
/// allowed and kept, so that acceptance sets can refer to the whole grid.
class OutcomePmf {
   public:
    OutcomePmf() = default;

    /// Sorts and merges duplicate outcomes (adding their probabilities).
    /// Throws std::domain_error on negative or non-finite probabilities.
    static OutcomePmf from_entries(std::vector<PmfEntry> entries);
    static OutcomePmf from_map(const std::map<Rational, double> &masses);
    static OutcomePmf point_mass(const Rational &outcome);

    const std::vector<PmfEntry> &entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    std::vector<Rational> outcomes() const;
    bool contains(const Rational &outcome) const;
    /// Zero for outcomes off the grid.
    double probability(const Rational &outcome) const;
    double total_mass() const;
    double mass_where(const std::function<bool(const Rational &)> &predicate) const;

    /// Moments computed directly from the entries.
    Moments moments() const;

    /// Same grid, probabilities divided by the total mass.
    OutcomePmf normalized() const;

    bool operator==(const OutcomePmf &) const = default;

   private:
    std::vector<PmfEntry> entries_;
};

}  // namespace entcert

#endif  // ENTCERT_OUTCOME_PMF_H

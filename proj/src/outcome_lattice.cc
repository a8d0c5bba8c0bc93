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

#include "entcert/outcome_lattice.h"

#include <algorithm>
#include <stdexcept>

#include "entcert/finite_stats.h"

namespace entcert {
namespace {

std::vector<Rational> sorted_unique(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

std::uint32_t position(const std::vector<Rational> &grid, const Rational &value) {
    auto it = std::lower_bound(grid.begin(), grid.end(), value);
    return static_cast<std::uint32_t>(it - grid.begin());
}

}  // namespace

OutcomeLattice::OutcomeLattice(const WitnessKind &witness, std::span<const int> copies)
    : copies_(copies.begin(), copies.end()) {
    validate_witness(witness);
    if (static_cast<int>(copies_.size()) != setting_count(witness)) {
        throw std::domain_error("OutcomeLattice: " + std::to_string(copies_.size()) +
                                " copy counts for a witness with " + std::to_string(setting_count(witness)) +
                                " settings");
    }
    for (int n : copies_) {
        if (n < 1) throw std::domain_error("OutcomeLattice: copies must be >= 1");
    }
    const auto *linear = std::get_if<LinearWitness>(&witness);
    offset_ = linear ? linear->constant : Rational(0);

    stages_.push_back(Stage{{offset_}, {}, {}, {}});
    for (std::size_t j = 0; j < copies_.size(); ++j) {
        const int n = copies_[j];
        std::vector<Rational> raw;
        raw.reserve(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            Rational tau = tau_value(k, n);
            raw.push_back(linear ? linear->coefficients[j] * tau : tau * tau);
        }
        Stage stage;
        stage.local_values = sorted_unique(raw);
        stage.plus_to_local.reserve(raw.size());
        for (const auto &v : raw) stage.plus_to_local.push_back(position(stage.local_values, v));

        const auto &prev = stages_.back().grid;
        std::vector<Rational> sums;
        sums.reserve(prev.size() * stage.local_values.size());
        for (const auto &a : prev) {
            for (const auto &b : stage.local_values) sums.push_back(a + b);
        }
        stage.grid = sorted_unique(sums);
        stage.table.reserve(sums.size());
        for (const auto &s : sums) stage.table.push_back(position(stage.grid, s));
        stages_.push_back(std::move(stage));
    }
}

std::optional<std::size_t> OutcomeLattice::index_of(const Rational &outcome) const {
    const auto &grid = outcomes();
    auto it = std::lower_bound(grid.begin(), grid.end(), outcome);
    if (it == grid.end() || *it != outcome) return std::nullopt;
    return static_cast<std::size_t>(it - grid.begin());
}

void OutcomeLattice::evaluate(std::span<const double> correlations, std::vector<double> &out) const {
    if (correlations.size() != copies_.size()) {
        throw std::domain_error("OutcomeLattice::evaluate: correlation count mismatch");
    }
    thread_local std::vector<double> current;
    thread_local std::vector<double> local;
    current.assign(1, 1.0);
    for (std::size_t j = 0; j < copies_.size(); ++j) {
        const Stage &stage = stages_[j + 1];
        auto binom = binomial_probabilities(correlations[j], copies_[j]);
        local.assign(stage.local_values.size(), 0.0);
        for (std::size_t k = 0; k < binom.size(); ++k) local[stage.plus_to_local[k]] += binom[k];

        out.assign(stage.grid.size(), 0.0);
        const std::size_t width = local.size();
        for (std::size_t a = 0; a < current.size(); ++a) {
            const double pa = current[a];
            if (pa == 0.0) continue;
            const std::uint32_t *row = stage.table.data() + a * width;
            for (std::size_t b = 0; b < width; ++b) out[row[b]] += pa * local[b];
        }
        current.swap(out);
    }
    out = current;
}

std::vector<double> OutcomeLattice::evaluate(std::span<const double> correlations) const {
    std::vector<double> out;
    evaluate(correlations, out);
    return out;
}

OutcomePmf OutcomeLattice::pmf(std::span<const double> correlations) const {
    auto probs = evaluate(correlations);
    const auto &grid = outcomes();
    std::vector<PmfEntry> entries;
    entries.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) entries.push_back({grid[i], probs[i]});
    return OutcomePmf::from_entries(std::move(entries));
}

}  // namespace entcert

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

#include "entcert/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include <boost/math/special_functions/gamma.hpp>

#include "entcert/parallel.h"
#include "entcert/random.h"

namespace entcert {
namespace {

using KeyCounts = std::unordered_map<std::uint64_t, std::uint64_t>;

// Mixed-radix strides for the vector of "+1" counts (k_1, ..., k_M).
std::vector<std::uint64_t> strides_for(const std::vector<int> &copies) {
    std::vector<std::uint64_t> strides(copies.size());
    std::uint64_t stride = 1;
    for (std::size_t j = 0; j < copies.size(); ++j) {
        strides[j] = stride;
        const auto radix = static_cast<std::uint64_t>(copies[j]) + 1;
        if (stride > std::numeric_limits<std::uint64_t>::max() / radix) {
            throw std::domain_error("simulation: too many distinct count vectors");
        }
        stride *= radix;
    }
    return strides;
}

Rational witness_value(std::uint64_t key, const std::vector<int> &copies, const WitnessKind &witness) {
    Rational value = 0;
    const auto *lin = std::get_if<LinearWitness>(&witness);
    if (lin != nullptr) value = lin->constant;
    for (std::size_t j = 0; j < copies.size(); ++j) {
        const auto radix = static_cast<std::uint64_t>(copies[j]) + 1;
        const auto k = static_cast<std::int64_t>(key % radix);
        key /= radix;
        const Rational tau(2 * k - copies[j], copies[j]);
        value = value + (lin != nullptr ? lin->coefficients[j] * tau : tau * tau);
    }
    return value;
}

// Tallies the count-vector key returned by draw(rng) for every trial, block by block.
template <typename Draw>
std::map<Rational, std::uint64_t> run_blocks(const SimulationConfig &config, const WitnessKind &witness, int workers,
                                             Draw draw) {
    const std::uint64_t blocks = (config.trials + kSimulationBlock - 1) / kSimulationBlock;
    KeyCounts total;
    std::mutex mutex;
    parallel_for(static_cast<std::size_t>(blocks), workers, [&](std::size_t b) {
        Xoshiro256 rng(derive_seed(config.seed, b));
        const std::uint64_t begin = b * kSimulationBlock;
        const std::uint64_t end = std::min(config.trials, begin + kSimulationBlock);
        KeyCounts local;
        for (std::uint64_t t = begin; t < end; ++t) ++local[draw(rng)];
        std::lock_guard<std::mutex> lock(mutex);
        for (const auto &[key, count] : local) total[key] += count;
    });
    std::map<Rational, std::uint64_t> out;
    for (const auto &[key, count] : total) out[witness_value(key, config.copies, witness)] += count;
    return out;
}

std::uint64_t draw_counts(Xoshiro256 &rng, std::span<const double> correlations, const std::vector<int> &copies,
                          const std::vector<std::uint64_t> &strides) {
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < copies.size(); ++j) {
        const double plus = 0.5 * (1.0 + correlations[j]);
        std::uint64_t k = 0;
        for (int c = 0; c < copies[j]; ++c) k += rng.uniform() < plus ? 1 : 0;
        key += k * strides[j];
    }
    return key;
}

OutcomePmf to_frequencies(const std::map<Rational, std::uint64_t> &counts, std::uint64_t trials) {
    std::vector<PmfEntry> entries;
    for (const auto &[q, count] : counts) {
        entries.push_back({q, static_cast<double>(count) / static_cast<double>(trials)});
    }
    return OutcomePmf::from_entries(std::move(entries));
}

void check_copies(const std::vector<int> &copies) {
    if (copies.empty()) throw std::domain_error("simulation: at least one setting is required");
    for (int n : copies) {
        if (n < 1) throw std::domain_error("simulation: copies must be positive");
    }
}

}  // namespace

void SimulationConfig::validate() const {
    check_copies(copies);
    if (correlations.size() != copies.size()) throw std::domain_error("simulation: correlations/copies length mismatch");
    for (double t : correlations) {
        if (!(t >= -1.0 && t <= 1.0)) throw std::domain_error("simulation: correlations must lie in [-1, 1]");
    }
    if (trials < 1) throw std::domain_error("simulation: trials must be positive");
}

std::map<Rational, std::uint64_t> simulate_counts(const SimulationConfig &config, const WitnessKind &witness,
                                                  int workers) {
    config.validate();
    validate_witness(witness);
    if (static_cast<std::size_t>(setting_count(witness)) != config.copies.size()) {
        throw std::domain_error("simulation: witness does not match the number of settings");
    }
    const auto strides = strides_for(config.copies);
    return run_blocks(config, witness, workers,
                      [&](Xoshiro256 &rng) { return draw_counts(rng, config.correlations, config.copies, strides); });
}

OutcomePmf simulate_witness(const SimulationConfig &config, const WitnessKind &witness, int workers) {
    return to_frequencies(simulate_counts(config, witness, workers), config.trials);
}

OutcomePmf simulate_mixture(const SimulationConfig &config, const WitnessKind &witness,
                            const std::vector<PurityNode> &nodes, const std::vector<int> &signs, int workers) {
    check_copies(config.copies);
    validate_witness(witness);
    if (config.trials < 1) throw std::domain_error("simulation: trials must be positive");
    if (signs.size() != config.copies.size()) throw std::domain_error("simulation: signs/copies length mismatch");
    if (nodes.empty()) throw std::domain_error("simulation: empty purity grid");
    std::vector<double> cumulative;
    double sum = 0.0;
    for (const auto &node : nodes) {
        sum += node.weight;
        cumulative.push_back(sum);
    }
    const auto strides = strides_for(config.copies);
    auto counts = run_blocks(config, witness, workers, [&](Xoshiro256 &rng) {
        const double u = rng.uniform() * sum;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        if (it == cumulative.end()) --it;
        const double p = nodes[static_cast<std::size_t>(it - cumulative.begin())].purity;
        thread_local std::vector<double> t;
        t.resize(signs.size());
        for (std::size_t j = 0; j < signs.size(); ++j) t[j] = signs[j] * p;
        return draw_counts(rng, t, config.copies, strides);
    });
    return to_frequencies(counts, config.trials);
}

double simulate_tau_mean(double correlation, int copies, std::uint64_t trials, std::uint64_t seed) {
    SimulationConfig{{correlation}, {copies}, trials, seed}.validate();
    Xoshiro256 rng(seed);
    const double plus = 0.5 * (1.0 + correlation);
    std::uint64_t k = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (int c = 0; c < copies; ++c) k += rng.uniform() < plus ? 1 : 0;
    }
    const double total = static_cast<double>(trials) * copies;
    return (2.0 * static_cast<double>(k) - total) / total;
}

ChiSquareResult chi_square_compare(const OutcomePmf &empirical, const OutcomePmf &exact, std::uint64_t trials) {
    if (trials < 1) throw std::domain_error("chi_square_compare: trials must be positive");
    std::set<Rational> grid;
    for (const auto &e : empirical) grid.insert(e.outcome);
    for (const auto &e : exact) grid.insert(e.outcome);

    const double n = static_cast<double>(trials);
    std::vector<double> expected_bins;
    std::vector<double> observed_bins;
    double expected = 0.0;
    double observed = 0.0;
    for (const auto &q : grid) {
        expected += exact.probability(q) * n;
        observed += std::round(empirical.probability(q) * n);
        if (expected >= 5.0) {
            expected_bins.push_back(expected);
            observed_bins.push_back(observed);
            expected = 0.0;
            observed = 0.0;
        }
    }
    if (expected > 0.0 || observed > 0.0) {
        if (expected_bins.empty()) {
            expected_bins.push_back(expected);
            observed_bins.push_back(observed);
        } else {
            expected_bins.back() += expected;
            observed_bins.back() += observed;
        }
    }

    ChiSquareResult result;
    result.bins = static_cast<int>(expected_bins.size());
    if (result.bins < 2) {
        result.degenerate = true;
        return result;
    }
    for (std::size_t i = 0; i < expected_bins.size(); ++i) {
        const double diff = observed_bins[i] - expected_bins[i];
        result.statistic += diff * diff / expected_bins[i];
    }
    result.degrees_of_freedom = result.bins - 1;
    result.p_value = boost::math::gamma_q(0.5 * result.degrees_of_freedom, 0.5 * result.statistic);
    return result;
}

}  // namespace entcert

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

// Monte Carlo simulation of finite-copy experiments.
//
// Trials are split into fixed-size blocks, each driven by xoshiro256** seeded
// with derive_seed(seed, block). Counts are integers, so the result is the
// same for any worker count.

#ifndef ENTCERT_ORACLE_H
#define ENTCERT_ORACLE_H

#include <cstdint>
#include <map>
#include <vector>

#include "entcert/outcome_pmf.h"
#include "entcert/rational.h"
#include "entcert/state_models.h"
#include "entcert/witness.h"

namespace entcert {

struct SimulationConfig {
    std::vector<double> correlations;
    std::vector<int> copies;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;

    void validate() const;
};

inline constexpr std::uint64_t kSimulationBlock = 1 << 16;

/// Outcome counts over all trials.
std::map<Rational, std::uint64_t> simulate_counts(const SimulationConfig &config, const WitnessKind &witness,
                                                  int workers = 1);

/// Empirical frequencies.
OutcomePmf simulate_witness(const SimulationConfig &config, const WitnessKind &witness, int workers = 1);

/// Each trial first draws a purity from the discretized prior, then
/// correlations sign_j * p. `config.correlations` is ignored.
OutcomePmf simulate_mixture(const SimulationConfig &config, const WitnessKind &witness,
                            const std::vector<PurityNode> &nodes, const std::vector<int> &signs, int workers = 1);

/// Mean of tau over all copies of one setting, from simulated counts.
double simulate_tau_mean(double correlation, int copies, std::uint64_t trials, std::uint64_t seed);

struct ChiSquareResult {
    double statistic = 0.0;
    int degrees_of_freedom = 0;
    double p_value = 1.0;
    int bins = 0;
    /// Fewer than two bins after merging; reported as passing.
    bool degenerate = false;
};

/// Pearson goodness of fit of the empirical frequencies against `exact`.
/// Adjacent outcomes are merged until each bin expects at least 5 counts.
ChiSquareResult chi_square_compare(const OutcomePmf &empirical, const OutcomePmf &exact, std::uint64_t trials);

}  // namespace entcert

#endif  // ENTCERT_ORACLE_H

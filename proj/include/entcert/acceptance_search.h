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

// Construction of optimal acceptance sets for a fixed allocation.

#ifndef ENTCERT_ACCEPTANCE_SEARCH_H
#define ENTCERT_ACCEPTANCE_SEARCH_H

#include <map>
#include <span>
#include <vector>

#include "entcert/acceptance_set.h"
#include "entcert/inference.h"
#include "entcert/outcome_pmf.h"
#include "entcert/separability.h"
#include "entcert/state_models.h"
#include "entcert/witness.h"

namespace entcert {

/// Grids with at most this many candidate outcomes are searched exhaustively.
inline constexpr std::size_t kExhaustiveSearchLimit = 24;

struct FrequentistDesign {
    AcceptanceSet acceptance;
    double power = 0.0;
    WorstCaseResult worst_case;  // G_acc of the chosen set
    bool feasible = false;       // false: even the empty set was the only option
    bool exhaustive = true;      // false: greedy likelihood-ratio path
    int optimizations = 0;       // full worst-case searches performed
};

/// Power-maximizing explicit acceptance set with worst-case separable mass
/// at most alpha.
FrequentistDesign frequentist_design(const WitnessKind &witness, std::span<const int> copies,
                                     const OutcomePmf &ent_pmf, double alpha, const WorstCaseOptions &options = {});

struct BayesianDesign {
    AcceptanceSet acceptance;
    std::map<Rational, double> posteriors;  // outcomes whose G_Q was fully optimized
    std::vector<Rational> screened;         // rejected by a known separable point alone
    double acceptance_level = 1.0;
    double power = 0.0;
    double expected_loss = 0.0;
    WorstCaseResult worst_case;  // G_acc of the chosen set
};

/// Posterior-threshold acceptance set at q_b, scored by the worst-case loss.
/// With `full_posteriors` every outcome gets a fully optimized G_Q;
/// otherwise outcomes already excluded by a cheap lower bound on G_Q skip it.
BayesianDesign bayesian_design(const WitnessKind &witness, std::span<const int> copies, const OutcomePmf &ent_pmf,
                               const PriorPair &priors, double q_b, const WorstCaseOptions &options = {},
                               bool full_posteriors = true);

}  // namespace entcert

#endif  // ENTCERT_ACCEPTANCE_SEARCH_H

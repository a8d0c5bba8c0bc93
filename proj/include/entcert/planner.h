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

// Experiment design under a copy budget.

#ifndef ENTCERT_PLANNER_H
#define ENTCERT_PLANNER_H

#include <string>
#include <vector>

#include "entcert/acceptance_search.h"
#include "entcert/acceptance_set.h"
#include "entcert/inference.h"
#include "entcert/separability.h"
#include "entcert/state_models.h"
#include "entcert/witness.h"

namespace entcert {

enum class Framework { kFrequentist, kBayesian };

std::string framework_name(Framework framework);
Framework other_framework(Framework framework);

/// Witness family instantiated for any number of settings.
enum class WitnessFamily { kLinearGhz, kQuadratic };

WitnessKind make_witness(WitnessFamily family, int settings);

struct PlanSpec {
    int eta = 1;
    int max_settings = 1;
    double q_min = 0.5;
    Framework framework = Framework::kFrequentist;
    bool allow_unused_copies = true;
    bool equal_allocation_only = false;

    void validate() const;
};

/// Canonical multisets {n_j} (descending), ordered by M, then lexicographically descending.
std::vector<std::vector<int>> enumerate_allocations(const PlanSpec &spec);

/// Slot orders to evaluate for one multiset: the multiset itself for a
/// symmetric witness; for the linear witness one order per distinct value
/// placed in the distinguished first slot.
std::vector<std::vector<int>> slot_assignments(const std::vector<int> &allocation, WitnessFamily family);

/// Source of P(Q|ent) for an allocation.
struct EntangledModel {
    enum class Kind { kFixedPurity, kMixture };

    Kind kind = Kind::kFixedPurity;
    double purity = 0.75;
    TruncatedGaussianPrior prior;
    double step = 0.01;

    OutcomePmf pmf(const WitnessKind &witness, std::span<const int> copies) const;
};

struct PlanOptions {
    WorstCaseOptions worst_case;
    PriorPair priors;
    int workers = 1;
};

struct Plan {
    std::vector<int> copies;
    AcceptanceSet acceptance;
    TestReport report;
    WorstCaseResult worst_case;
    bool exhaustive = true;
    bool feasible = false;
    /// Validity in the plan's framework: confidence or acceptance level.
    double validity = 0.0;

    int settings() const { return static_cast<int>(copies.size()); }
    int copies_used() const;
};

struct PlanResult {
    std::vector<Plan> plans;  // best first
    bool feasible = false;
    /// Largest validity over all candidates (meaningful when infeasible).
    double best_validity = 0.0;

    const Plan &best() const { return plans.front(); }
};

/// Builds the optimal acceptance set for one allocation.
Plan evaluate_allocation(std::span<const int> copies, Framework framework, double q_min, WitnessFamily family,
                         const EntangledModel &model, const PlanOptions &options);

/// Ranks every enumerated allocation; plans.front() is the optimum.
PlanResult optimize_plan(const PlanSpec &spec, WitnessFamily family, const EntangledModel &model,
                         const PlanOptions &options);

/// Re-evaluates the allocation of `plan` with the other framework's optimal set.
Plan cross_evaluate(const Plan &plan, Framework other, double q_min, WitnessFamily family,
                    const EntangledModel &model, const PlanOptions &options);

/// Error trade-off of an equal split: the threshold minimizing the larger
/// of P(acc|sep) and P(rej|ent).
struct SplitErrors {
    int settings = 0;
    int copies = 0;
    Rational bound;
    double false_positive = 0.0;  // worst-case P(acc | sep)
    double false_negative = 0.0;  // 1 - power
    double max_error() const { return std::max(false_positive, false_negative); }
};

std::vector<SplitErrors> equal_split_sweep(int eta, WitnessFamily family, const EntangledModel &model,
                                           const WorstCaseOptions &options = {});

}  // namespace entcert

#endif  // ENTCERT_PLANNER_H

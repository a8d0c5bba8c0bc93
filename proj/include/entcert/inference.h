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

// Frequentist and Bayesian evaluation of an entanglement test.

#ifndef ENTCERT_INFERENCE_H
#define ENTCERT_INFERENCE_H

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "entcert/acceptance_set.h"
#include "entcert/outcome_pmf.h"
#include "entcert/rational.h"
#include "entcert/separability.h"
#include "entcert/state_models.h"
#include "entcert/witness.h"

namespace entcert {

struct TestReport {
    double confidence = 1.0;
    double power = 0.0;
    std::map<Rational, double> posterior_by_outcome;
    double acceptance_level = 1.0;
    double expected_loss = 0.0;
};

/// 1 - g_acc_mass. Throws std::domain_error if the mass is outside [0, 1].
double confidence(const AcceptanceSet &acc, double g_acc_mass);

/// Weighted mass of the acceptance set under P(Q|ent).
double power(const AcceptanceSet &acc, const OutcomePmf &ent_pmf);

/// Lower bound on P(ent|Q) with P(Q|sep) replaced by its worst case gq_value.
/// Throws UndefinedOutcomeError when both likelihoods vanish.
double posterior(const Rational &outcome, const OutcomePmf &ent_pmf, double gq_value, const PriorPair &priors);

/// {Q : posterior(Q) >= q_b} as an explicit set.
AcceptanceSet bayes_acceptance(double q_b, const std::map<Rational, double> &posteriors);

/// Minimum posterior over the accepted outcomes (1 for an empty set).
double acceptance_level(const AcceptanceSet &acc, const std::map<Rational, double> &posteriors);

/// q_b G_acc P_sep + (1 - q_b) P(Q in rej | ent) P_ent.
double expected_loss(const AcceptanceSet &acc, double q_b, const PriorPair &priors, double g_acc_mass,
                     const OutcomePmf &ent_pmf);

struct RandomizedTest {
    AcceptanceSet acceptance;
    double sep_mass = 0.0;
    double power = 0.0;
    /// False when the whole grid carries less separable mass than alpha.
    bool attains_alpha = true;
};

/// Most powerful test at level alpha for a simple separable hypothesis.
RandomizedTest np_randomized_test(double alpha, const OutcomePmf &sep_pmf, const OutcomePmf &ent_pmf);

/// G_Q for every outcome of the grid.
struct PointwiseBounds {
    std::vector<Rational> outcomes;
    std::vector<double> bounds;
    std::vector<std::vector<double>> correlations;
    bool converged = true;

    std::optional<double> bound(const Rational &outcome) const;
};

/// Runs the point-mass maximization for the listed outcomes (all grid
/// outcomes when `only` is empty).
PointwiseBounds pointwise_worst_case(const WitnessKind &witness, std::span<const int> copies,
                                     const WorstCaseOptions &options = {}, std::span<const Rational> only = {});

/// Posterior bounds for every outcome where at least one likelihood is positive.
std::map<Rational, double> posterior_map(const OutcomePmf &ent_pmf, const PointwiseBounds &bounds,
                                         const PriorPair &priors);

/// Fills every field of a report for a fixed acceptance set. Posteriors are
/// only computed when `bounds` is given.
TestReport make_report(const AcceptanceSet &acc, const OutcomePmf &ent_pmf, double g_acc_mass, const PriorPair &priors,
                       double q_b, const PointwiseBounds *bounds = nullptr);

}  // namespace entcert

#endif  // ENTCERT_INFERENCE_H

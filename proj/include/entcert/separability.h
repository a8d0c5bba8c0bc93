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

// Worst-case correlations compatible with separability.
//
// A correlation vector is "compatible with separability" when the witness is
// not violated in the infinite-statistics limit: E_W >= 0 for a linear
// witness, S <= 1 for the quadratic one, and every |T_j| <= 1. Such vectors
// need not belong to a physical separable state. Maximizing the acceptance
// probability over them upper-bounds P(Q in acc | sep) (G_acc); maximizing a
// single point mass bounds P(Q | sep) outcome by outcome (G_Q).

#ifndef ENTCERT_SEPARABILITY_H
#define ENTCERT_SEPARABILITY_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "entcert/acceptance_set.h"
#include "entcert/annealing.h"
#include "entcert/nelder_mead.h"
#include "entcert/outcome_lattice.h"
#include "entcert/outcome_pmf.h"
#include "entcert/random.h"
#include "entcert/witness.h"

namespace entcert {

class SeparableConstraint {
   public:
    /// Throws InfeasibleConstraintError if no vector in the box satisfies it.
    static SeparableConstraint for_witness(const WitnessKind &witness);

    bool quadratic() const { return quadratic_; }
    std::size_t dimension() const { return dimension_; }

    /// Signed margin: a.T + c for linear, 1 - |T|^2 for quadratic (>= 0 when satisfied).
    double margin(std::span<const double> t) const;
    /// Total amount by which the box or the witness constraint is violated.
    double violation(std::span<const double> t) const;
    bool satisfied(std::span<const double> t, double tolerance = 1e-9) const;

    /// Nearest feasible point. Quadratic: |T| clamped to [0, 1] and radially
    /// scaled into the unit ball. Linear: box clamp, then a shift along the
    /// witness gradient until a.T + c >= 0.
    std::vector<double> project(std::span<const double> t) const;

    /// Uniform random feasible point (in [0,1]^M for the quadratic witness).
    std::vector<double> sample(Xoshiro256 &rng) const;

   private:
    bool quadratic_ = true;
    std::size_t dimension_ = 0;
    std::vector<double> coefficients_;
    double constant_ = 0.0;
};

struct WorstCaseOptions {
    int restarts = 32;
    std::uint64_t seed = 0x5eedc0ffee;
    optim::NelderMeadOptions simplex{0.25, 1e-9, 1e-13, 20000};
    bool anneal = true;
    optim::AnnealingOptions annealing;
    /// Weight of the squared distance between the raw simplex point and its projection.
    double penalty = 1.0;
    /// Candidates within this of the best objective tie; the lexicographically smallest wins.
    double tie_tolerance = 1e-6;
    int workers = 1;
};

struct WorstCaseResult {
    std::vector<double> correlations;  // T*
    double objective = 0.0;            // weighted acceptance mass at T*
    OutcomePmf distribution;           // P(Q | T*)
    int restarts_used = 0;
    bool converged = true;  // false: best candidate hit the evaluation budget
};

/// Closed-form worst case for equal allocations and strict thresholds:
/// linear witness with unit coefficients and constant 1 -> T_j = -a_j/M;
/// quadratic -> T_j = 1/sqrt(M). Throws std::domain_error for other shapes.
std::vector<double> analytic_worst_case(const WitnessKind &witness, int settings);
std::optional<std::vector<double>> try_analytic_worst_case(const WitnessKind &witness);

/// Maximizes sum_i weights[i] P(outcome_i | T) over separable-compatible T.
/// `seeds` are extra starting points tried before the random restarts.
WorstCaseResult maximize_separable_mass(const OutcomeLattice &lattice, const WitnessKind &witness,
                                        std::span<const double> weights, const WorstCaseOptions &options = {},
                                        std::span<const std::vector<double>> seeds = {});

/// G_acc: worst-case P(Q in acc | sep).
WorstCaseResult worst_case_acc(const WitnessKind &witness, std::span<const int> copies, const AcceptanceSet &acc,
                               const WorstCaseOptions &options = {});

/// G_Q: worst-case P(Q | sep) for one outcome.
WorstCaseResult worst_case_pointwise(const WitnessKind &witness, std::span<const int> copies, const Rational &outcome,
                                     const WorstCaseOptions &options = {});

}  // namespace entcert

#endif  // ENTCERT_SEPARABILITY_H

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

#ifndef ENTCERT_ACCEPTANCE_SET_H
#define ENTCERT_ACCEPTANCE_SET_H

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entcert/outcome_pmf.h"
#include "entcert/rational.h"

namespace entcert {

enum class ThresholdDirection {
    kAcceptLow,   // accept Q <= bound (linear witnesses)
    kAcceptHigh,  // accept Q >= bound (quadratic witness)
};

/// Set of outcomes on which entanglement is declared.
///
/// Either a threshold rule (boundary included on the accept side) or an
/// explicit list of outcomes. A randomized test additionally designates one
/// boundary outcome that is accepted with probability gamma; the boundary
/// weight overrides membership.
class AcceptanceSet {
   public:
    AcceptanceSet() = default;

    static AcceptanceSet threshold(const Rational &bound, ThresholdDirection direction);
    static AcceptanceSet accept_at_most(const Rational &bound) {
        return threshold(bound, ThresholdDirection::kAcceptLow);
    }
    static AcceptanceSet accept_at_least(const Rational &bound) {
        return threshold(bound, ThresholdDirection::kAcceptHigh);
    }
    static AcceptanceSet explicit_set(std::vector<Rational> outcomes);
    static AcceptanceSet empty_set() { return explicit_set({}); }

    /// Copy with a randomized boundary outcome. Throws unless gamma is in [0, 1].
    AcceptanceSet with_boundary(const Rational &outcome, double gamma) const;

    bool is_threshold() const { return threshold_.has_value(); }
    const std::optional<Rational> &bound() const { return threshold_; }
    ThresholdDirection direction() const { return direction_; }
    /// Explicit outcomes (sorted); empty for threshold sets.
    const std::vector<Rational> &outcomes() const { return outcomes_; }
    const std::optional<Rational> &boundary() const { return boundary_; }
    double gamma() const { return gamma_; }
    bool randomized() const { return boundary_.has_value() && gamma_ > 0.0; }

    bool contains(const Rational &outcome) const;
    /// Acceptance probability for an observed outcome: 1, 0 or gamma.
    double weight(const Rational &outcome) const;
    /// sum_Q weight(Q) P(Q).
    double mass(const OutcomePmf &pmf) const;
    /// Weights aligned with a sorted grid.
    std::vector<double> weights(std::span<const Rational> grid) const;

    /// Explicit outcomes of the grid accepted with weight 1.
    std::vector<Rational> resolve(std::span<const Rational> grid) const;
    /// True if no grid point is accepted with positive weight.
    bool is_empty_on(std::span<const Rational> grid) const;
    /// Throws std::domain_error if an explicit outcome or the boundary is off the grid.
    void check_on_grid(std::span<const Rational> grid) const;

    std::string describe() const;

    bool operator==(const AcceptanceSet &) const = default;

   private:
    std::optional<Rational> threshold_;
    ThresholdDirection direction_ = ThresholdDirection::kAcceptHigh;
    std::vector<Rational> outcomes_;
    std::optional<Rational> boundary_;
    double gamma_ = 0.0;
};

}  // namespace entcert

#endif  // ENTCERT_ACCEPTANCE_SET_H

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

#include "entcert/acceptance_set.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace entcert {

AcceptanceSet AcceptanceSet::threshold(const Rational &bound, ThresholdDirection direction) {
    AcceptanceSet s;
    s.threshold_ = bound;
    s.direction_ = direction;
    return s;
}

AcceptanceSet AcceptanceSet::explicit_set(std::vector<Rational> outcomes) {
    std::sort(outcomes.begin(), outcomes.end());
    outcomes.erase(std::unique(outcomes.begin(), outcomes.end()), outcomes.end());
    AcceptanceSet s;
    s.outcomes_ = std::move(outcomes);
    return s;
}

AcceptanceSet AcceptanceSet::with_boundary(const Rational &outcome, double gamma) const {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw std::domain_error("randomization probability must lie in [0, 1]");
    }
    AcceptanceSet s = *this;
    s.boundary_ = outcome;
    s.gamma_ = gamma;
    return s;
}

bool AcceptanceSet::contains(const Rational &q) const {
    if (threshold_) {
        return direction_ == ThresholdDirection::kAcceptLow ? q <= *threshold_ : q >= *threshold_;
    }
    return std::binary_search(outcomes_.begin(), outcomes_.end(), q);
}

double AcceptanceSet::weight(const Rational &q) const {
    if (boundary_ && *boundary_ == q) return gamma_;
    return contains(q) ? 1.0 : 0.0;
}

double AcceptanceSet::mass(const OutcomePmf &pmf) const {
    double total = 0.0;
    for (const auto &e : pmf) total += weight(e.outcome) * e.probability;
    return total;
}

std::vector<double> AcceptanceSet::weights(std::span<const Rational> grid) const {
    std::vector<double> w;
    w.reserve(grid.size());
    for (const auto &q : grid) w.push_back(weight(q));
    return w;
}

std::vector<Rational> AcceptanceSet::resolve(std::span<const Rational> grid) const {
    std::vector<Rational> out;
    for (const auto &q : grid) {
        if (weight(q) == 1.0) out.push_back(q);
    }
    return out;
}

bool AcceptanceSet::is_empty_on(std::span<const Rational> grid) const {
    return std::none_of(grid.begin(), grid.end(), [&](const Rational &q) { return weight(q) > 0.0; });
}

void AcceptanceSet::check_on_grid(std::span<const Rational> grid) const {
    auto on_grid = [&](const Rational &q) { return std::binary_search(grid.begin(), grid.end(), q); };
    for (const auto &q : outcomes_) {
        if (!on_grid(q)) throw std::domain_error("acceptance outcome " + q.str() + " is not on the outcome grid");
    }
    if (boundary_ && !on_grid(*boundary_)) {
        throw std::domain_error("boundary outcome " + boundary_->str() + " is not on the outcome grid");
    }
}

std::string AcceptanceSet::describe() const {
    std::ostringstream out;
    if (threshold_) {
        out << (direction_ == ThresholdDirection::kAcceptLow ? "Q <= " : "Q >= ") << threshold_->str();
    } else {
        out << "{";
        for (std::size_t i = 0; i < outcomes_.size(); ++i) out << (i ? ", " : "") << outcomes_[i].str();
        out << "}";
    }
    if (boundary_) out << " + " << gamma_ << " x {" << boundary_->str() << "}";
    return out.str();
}

}  // namespace entcert

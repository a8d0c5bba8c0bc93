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

#include "entcert/inference.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "entcert/errors.h"
#include "entcert/outcome_lattice.h"
#include "entcert/parallel.h"

namespace entcert {
namespace {

void check_probability(double value, const char *what) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw std::domain_error(std::string(what) + " must lie in [0, 1]");
    }
}

}  // namespace

double confidence(const AcceptanceSet &, double g_acc_mass) {
    // Allow for rounding in masses summed from many outcomes.
    if (g_acc_mass > 1.0 && g_acc_mass < 1.0 + 1e-12) g_acc_mass = 1.0;
    check_probability(g_acc_mass, "worst-case acceptance mass");
    return 1.0 - g_acc_mass;
}

double power(const AcceptanceSet &acc, const OutcomePmf &ent_pmf) { return acc.mass(ent_pmf); }

double posterior(const Rational &outcome, const OutcomePmf &ent_pmf, double gq_value, const PriorPair &priors) {
    priors.validate();
    if (!(gq_value >= 0.0)) throw std::domain_error("worst-case point mass must be non-negative");
    const double ent = ent_pmf.probability(outcome) * priors.entangled;
    const double denominator = gq_value * priors.separable() + ent;
    if (denominator <= 0.0) {
        throw UndefinedOutcomeError("posterior undefined at " + outcome.str() + ": both likelihoods vanish");
    }
    return ent / denominator;
}

AcceptanceSet bayes_acceptance(double q_b, const std::map<Rational, double> &posteriors) {
    std::vector<Rational> accepted;
    for (const auto &[q, value] : posteriors) {
        if (value >= q_b) accepted.push_back(q);
    }
    return AcceptanceSet::explicit_set(std::move(accepted));
}

double acceptance_level(const AcceptanceSet &acc, const std::map<Rational, double> &posteriors) {
    double level = 1.0;
    for (const auto &[q, value] : posteriors) {
        if (acc.weight(q) > 0.0) level = std::min(level, value);
    }
    return level;
}

double expected_loss(const AcceptanceSet &acc, double q_b, const PriorPair &priors, double g_acc_mass,
                     const OutcomePmf &ent_pmf) {
    check_probability(q_b, "q_B");
    priors.validate();
    const double miss = std::max(0.0, 1.0 - power(acc, ent_pmf));
    return q_b * g_acc_mass * priors.separable() + (1.0 - q_b) * miss * priors.entangled;
}

RandomizedTest np_randomized_test(double alpha, const OutcomePmf &sep_pmf, const OutcomePmf &ent_pmf) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("np_randomized_test: alpha must lie in (0, 1)");

    struct Item {
        Rational outcome;
        double sep;
        double ent;
    };
    std::map<Rational, Item> merged;
    for (const auto &e : sep_pmf) merged.try_emplace(e.outcome, Item{e.outcome, 0.0, 0.0}).first->second.sep = e.probability;
    for (const auto &e : ent_pmf) merged.try_emplace(e.outcome, Item{e.outcome, 0.0, 0.0}).first->second.ent = e.probability;

    std::vector<Item> items;
    for (const auto &[q, item] : merged) {
        if (item.sep > 0.0 || item.ent > 0.0) items.push_back(item);
    }
    // Likelihood ratio descending, infinite ratios first, ties toward larger Q.
    std::sort(items.begin(), items.end(), [](const Item &a, const Item &b) {
        const double ra = a.sep > 0.0 ? a.ent / a.sep : std::numeric_limits<double>::infinity();
        const double rb = b.sep > 0.0 ? b.ent / b.sep : std::numeric_limits<double>::infinity();
        if (ra != rb) return ra > rb;
        return a.outcome > b.outcome;
    });

    RandomizedTest test;
    std::vector<Rational> accepted;
    double cumulative = 0.0;
    double pow = 0.0;
    std::optional<Rational> boundary;
    double gamma = 0.0;
    for (const auto &item : items) {
        if (cumulative + item.sep <= alpha) {
            accepted.push_back(item.outcome);
            cumulative += item.sep;
            pow += item.ent;
            continue;
        }
        gamma = (alpha - cumulative) / item.sep;
        if (gamma > 0.0) {
            boundary = item.outcome;
            cumulative = alpha;
            pow += gamma * item.ent;
        }
        break;
    }
    test.acceptance = AcceptanceSet::explicit_set(accepted);
    if (boundary) test.acceptance = test.acceptance.with_boundary(*boundary, std::clamp(gamma, 0.0, 1.0));
    test.sep_mass = cumulative;
    test.power = pow;
    test.attains_alpha = cumulative >= alpha - 1e-12;
    return test;
}

std::optional<double> PointwiseBounds::bound(const Rational &outcome) const {
    auto it = std::lower_bound(outcomes.begin(), outcomes.end(), outcome);
    if (it == outcomes.end() || *it != outcome) return std::nullopt;
    return bounds[static_cast<std::size_t>(it - outcomes.begin())];
}

PointwiseBounds pointwise_worst_case(const WitnessKind &witness, std::span<const int> copies,
                                     const WorstCaseOptions &options, std::span<const Rational> only) {
    OutcomeLattice lattice(witness, copies);
    std::vector<std::size_t> targets;
    if (only.empty()) {
        for (std::size_t i = 0; i < lattice.size(); ++i) targets.push_back(i);
    } else {
        for (const auto &q : only) {
            auto idx = lattice.index_of(q);
            if (!idx) throw std::domain_error("outcome " + q.str() + " is not on the outcome grid");
            targets.push_back(*idx);
        }
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    }

    WorstCaseOptions inner = options;
    inner.workers = 1;
    std::vector<WorstCaseResult> results(targets.size());
    parallel_for(targets.size(), options.workers, [&](std::size_t k) {
        std::vector<double> weights(lattice.size(), 0.0);
        weights[targets[k]] = 1.0;
        results[k] = maximize_separable_mass(lattice, witness, weights, inner);
    });

    PointwiseBounds out;
    for (std::size_t k = 0; k < targets.size(); ++k) {
        out.outcomes.push_back(lattice.outcomes()[targets[k]]);
        out.bounds.push_back(results[k].objective);
        out.correlations.push_back(results[k].correlations);
        out.converged = out.converged && results[k].converged;
    }
    return out;
}

std::map<Rational, double> posterior_map(const OutcomePmf &ent_pmf, const PointwiseBounds &bounds,
                                         const PriorPair &priors) {
    std::map<Rational, double> out;
    for (std::size_t i = 0; i < bounds.outcomes.size(); ++i) {
        const auto &q = bounds.outcomes[i];
        if (bounds.bounds[i] <= 0.0 && ent_pmf.probability(q) <= 0.0) continue;
        out.emplace(q, posterior(q, ent_pmf, bounds.bounds[i], priors));
    }
    return out;
}

TestReport make_report(const AcceptanceSet &acc, const OutcomePmf &ent_pmf, double g_acc_mass, const PriorPair &priors,
                       double q_b, const PointwiseBounds *bounds) {
    TestReport report;
    report.confidence = confidence(acc, g_acc_mass);
    report.power = power(acc, ent_pmf);
    report.expected_loss = expected_loss(acc, q_b, priors, g_acc_mass, ent_pmf);
    if (bounds != nullptr) {
        report.posterior_by_outcome = posterior_map(ent_pmf, *bounds, priors);
        report.acceptance_level = acceptance_level(acc, report.posterior_by_outcome);
    }
    return report;
}

}  // namespace entcert

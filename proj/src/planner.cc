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

#include "entcert/planner.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "entcert/inference.h"
#include "entcert/outcome_lattice.h"
#include "entcert/parallel.h"

namespace entcert {
namespace {

constexpr double kMetricTie = 1e-12;

// True if a is the better plan under the framework's ranking.
bool ranks_before(const Plan &a, const Plan &b, Framework framework) {
    if (a.feasible != b.feasible) return a.feasible;
    if (!a.feasible) {
        if (std::abs(a.validity - b.validity) > kMetricTie) return a.validity > b.validity;
    } else if (framework == Framework::kFrequentist) {
        if (std::abs(a.report.power - b.report.power) > kMetricTie) return a.report.power > b.report.power;
    } else {
        if (std::abs(a.report.expected_loss - b.report.expected_loss) > kMetricTie) {
            return a.report.expected_loss < b.report.expected_loss;
        }
    }
    if (a.copies_used() != b.copies_used()) return a.copies_used() < b.copies_used();
    return std::lexicographical_compare(b.copies.begin(), b.copies.end(), a.copies.begin(), a.copies.end());
}

Plan evaluate_fixed(std::span<const int> copies, Framework framework, double q_min, WitnessFamily family,
                    const EntangledModel &model, const PlanOptions &options) {
    const auto witness = make_witness(family, static_cast<int>(copies.size()));
    const auto ent = model.pmf(witness, copies);
    Plan plan;
    plan.copies.assign(copies.begin(), copies.end());
    if (framework == Framework::kFrequentist) {
        auto design = frequentist_design(witness, copies, ent, 1.0 - q_min, options.worst_case);
        plan.acceptance = design.acceptance;
        plan.worst_case = design.worst_case;
        plan.exhaustive = design.exhaustive;
        plan.report = make_report(plan.acceptance, ent, plan.worst_case.objective, options.priors, q_min);
        plan.validity = plan.report.confidence;
        plan.feasible = design.feasible && plan.validity >= q_min - kMetricTie;
        if (!design.feasible) {
            // Best confidence of any nonempty set, reached by a single outcome.
            std::vector<Rational> reachable;
            for (const auto &e : ent) {
                if (e.probability > 0.0) reachable.push_back(e.outcome);
            }
            const auto bounds = pointwise_worst_case(witness, copies, options.worst_case, reachable);
            plan.validity = 0.0;
            for (double g : bounds.bounds) plan.validity = std::max(plan.validity, 1.0 - g);
        }
    } else {
        auto design = bayesian_design(witness, copies, ent, options.priors, q_min, options.worst_case, false);
        plan.acceptance = design.acceptance;
        plan.worst_case = design.worst_case;
        plan.report = make_report(plan.acceptance, ent, plan.worst_case.objective, options.priors, q_min);
        plan.report.posterior_by_outcome = design.posteriors;
        plan.report.acceptance_level = design.acceptance_level;
        plan.validity = design.acceptance_level;
        // Best posterior reached anywhere, for infeasibility reports.
        if (design.acceptance.outcomes().empty()) {
            double best = 0.0;
            for (const auto &[q, value] : design.posteriors) best = std::max(best, value);
            plan.validity = best;
        }
        plan.feasible = !design.acceptance.outcomes().empty();
    }
    return plan;
}

}  // namespace

std::string framework_name(Framework framework) {
    return framework == Framework::kFrequentist ? "frequentist" : "bayesian";
}

Framework other_framework(Framework framework) {
    return framework == Framework::kFrequentist ? Framework::kBayesian : Framework::kFrequentist;
}

WitnessKind make_witness(WitnessFamily family, int settings) {
    if (settings < 1) throw std::domain_error("witness needs at least one setting");
    if (family == WitnessFamily::kLinearGhz) return LinearWitness::ghz(settings);
    return QuadraticWitness{settings};
}

void PlanSpec::validate() const {
    if (eta < 1) throw std::domain_error("plan: eta must be positive");
    if (max_settings < 1) throw std::domain_error("plan: M_max must be positive");
    if (!(q_min > 0.0 && q_min < 1.0)) throw std::domain_error("plan: q_min must lie in (0, 1)");
}

std::vector<std::vector<int>> enumerate_allocations(const PlanSpec &spec) {
    spec.validate();
    std::vector<std::vector<int>> out;
    const int max_m = std::min(spec.max_settings, spec.eta);
    for (int m = 1; m <= max_m; ++m) {
        if (spec.equal_allocation_only) {
            for (int n = spec.eta / m; n >= 1; --n) {
                if (!spec.allow_unused_copies && m * n != spec.eta) continue;
                out.emplace_back(static_cast<std::size_t>(m), n);
            }
            continue;
        }
        // Non-increasing sequences of length m, emitted in descending lexicographic order.
        std::vector<int> current;
        std::function<void(int, int)> extend = [&](int remaining, int cap) {
            const int slots = m - static_cast<int>(current.size());
            if (slots == 0) {
                if (spec.allow_unused_copies || remaining == 0) out.push_back(current);
                return;
            }
            const int hi = std::min(cap, remaining - (slots - 1));
            for (int n = hi; n >= 1; --n) {
                if (!spec.allow_unused_copies && n * slots < remaining) break;
                current.push_back(n);
                extend(remaining - n, n);
                current.pop_back();
            }
        };
        extend(spec.eta, spec.eta);
    }
    return out;
}

std::vector<std::vector<int>> slot_assignments(const std::vector<int> &allocation, WitnessFamily family) {
    if (family == WitnessFamily::kQuadratic || allocation.size() <= 1) return {allocation};
    std::vector<std::vector<int>> out;
    std::vector<int> distinct = allocation;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v : distinct) {
        std::vector<int> order{v};
        bool skipped = false;
        for (int n : allocation) {
            if (n == v && !skipped) {
                skipped = true;
                continue;
            }
            order.push_back(n);
        }
        out.push_back(std::move(order));
    }
    return out;
}

OutcomePmf EntangledModel::pmf(const WitnessKind &witness, std::span<const int> copies) const {
    const auto signs = violating_signs(witness);
    if (kind == Kind::kMixture) return mixture_pmf(prior, signs, copies, witness, step);
    if (!(purity >= 0.0 && purity <= 1.0)) throw std::domain_error("purity must lie in [0, 1]");
    std::vector<double> correlations;
    for (int s : signs) correlations.push_back(s * purity);
    return witness_pmf(make_settings(correlations, copies), witness);
}

int Plan::copies_used() const { return std::accumulate(copies.begin(), copies.end(), 0); }

Plan evaluate_allocation(std::span<const int> copies, Framework framework, double q_min, WitnessFamily family,
                         const EntangledModel &model, const PlanOptions &options) {
    const std::vector<int> allocation(copies.begin(), copies.end());
    std::optional<Plan> best;
    for (const auto &order : slot_assignments(allocation, family)) {
        Plan plan = evaluate_fixed(order, framework, q_min, family, model, options);
        if (!best || ranks_before(plan, *best, framework)) best = std::move(plan);
    }
    return *best;
}

PlanResult optimize_plan(const PlanSpec &spec, WitnessFamily family, const EntangledModel &model,
                         const PlanOptions &options) {
    const auto allocations = enumerate_allocations(spec);
    PlanOptions inner = options;
    if (options.workers > 1) inner.worst_case.workers = 1;
    std::vector<Plan> plans(allocations.size());
    parallel_for(allocations.size(), options.workers, [&](std::size_t i) {
        plans[i] = evaluate_allocation(allocations[i], spec.framework, spec.q_min, family, model, inner);
    });
    std::stable_sort(plans.begin(), plans.end(),
                     [&](const Plan &a, const Plan &b) { return ranks_before(a, b, spec.framework); });

    PlanResult result;
    result.plans = std::move(plans);
    result.feasible = !result.plans.empty() && result.plans.front().feasible;
    for (const auto &p : result.plans) result.best_validity = std::max(result.best_validity, p.validity);
    return result;
}

Plan cross_evaluate(const Plan &plan, Framework other, double q_min, WitnessFamily family,
                    const EntangledModel &model, const PlanOptions &options) {
    return evaluate_fixed(plan.copies, other, q_min, family, model, options);
}

std::vector<SplitErrors> equal_split_sweep(int eta, WitnessFamily family, const EntangledModel &model,
                                           const WorstCaseOptions &options) {
    if (eta < 1) throw std::domain_error("equal_split_sweep: eta must be positive");
    std::vector<SplitErrors> out;
    for (int m = 1; m <= eta; ++m) {
        if (eta % m != 0) continue;
        const int n = eta / m;
        const auto witness = make_witness(family, m);
        const std::vector<int> copies(static_cast<std::size_t>(m), n);
        const auto ent = model.pmf(witness, copies);
        OutcomeLattice lattice(witness, copies);

        std::optional<SplitErrors> best;
        for (const auto &bound : lattice.outcomes()) {
            const auto acc = family == WitnessFamily::kLinearGhz ? AcceptanceSet::accept_at_most(bound)
                                                                 : AcceptanceSet::accept_at_least(bound);
            SplitErrors e;
            e.settings = m;
            e.copies = n;
            e.bound = bound;
            e.false_negative = std::max(0.0, 1.0 - power(acc, ent));
            // The worst case only matters if it can beat the incumbent.
            if (best && e.false_negative >= best->max_error()) continue;
            e.false_positive = worst_case_acc(witness, copies, acc, options).objective;
            if (!best || e.max_error() < best->max_error() - kMetricTie) best = e;
        }
        out.push_back(*best);
    }
    return out;
}

}  // namespace entcert

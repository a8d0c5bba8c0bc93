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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

namespace entcert {
namespace {

using Alloc = std::vector<std::vector<int>>;

EntangledModel mixture_model() {
    EntangledModel m;
    m.kind = EntangledModel::Kind::kMixture;
    return m;
}

TEST(Enumerate, SmallBudget) {
    PlanSpec spec;
    spec.eta = 4;
    spec.max_settings = 2;
    EXPECT_EQ(enumerate_allocations(spec), (Alloc{{4}, {3}, {2}, {1}, {3, 1}, {2, 2}, {2, 1}, {1, 1}}));
    spec.allow_unused_copies = false;
    EXPECT_EQ(enumerate_allocations(spec), (Alloc{{4}, {3, 1}, {2, 2}}));
    spec.equal_allocation_only = true;
    EXPECT_EQ(enumerate_allocations(spec), (Alloc{{4}, {2, 2}}));
    spec.allow_unused_copies = true;
    EXPECT_EQ(enumerate_allocations(spec), (Alloc{{4}, {3}, {2}, {1}, {2, 2}, {1, 1}}));
}

TEST(Enumerate, AllocationsAreValid) {
    PlanSpec spec;
    spec.eta = 13;
    spec.max_settings = 3;
    const auto all = enumerate_allocations(spec);
    EXPECT_EQ(all.size(), 122u);
    for (const auto &a : all) {
        EXPECT_LE(std::accumulate(a.begin(), a.end(), 0), 13);
        EXPECT_TRUE(std::is_sorted(a.rbegin(), a.rend()));
        EXPECT_GE(a.back(), 1);
    }
    EXPECT_NE(std::find(all.begin(), all.end(), std::vector<int>{4, 4, 4}), all.end());
    EXPECT_NE(std::find(all.begin(), all.end(), std::vector<int>{5, 3, 3}), all.end());
}

TEST(Enumerate, RejectsBadSpec) {
    PlanSpec spec;
    spec.eta = 0;
    EXPECT_THROW(enumerate_allocations(spec), std::domain_error);
    spec.eta = 3;
    spec.q_min = 1.0;
    EXPECT_THROW(enumerate_allocations(spec), std::domain_error);
}

TEST(SlotAssignments, LinearTriesEachDistinctSize) {
    EXPECT_EQ(slot_assignments({5, 3, 3}, WitnessFamily::kLinearGhz), (Alloc{{5, 3, 3}, {3, 5, 3}}));
    EXPECT_EQ(slot_assignments({4, 4, 4}, WitnessFamily::kLinearGhz), (Alloc{{4, 4, 4}}));
    EXPECT_EQ(slot_assignments({5, 3, 3}, WitnessFamily::kQuadratic), (Alloc{{5, 3, 3}}));
}

TEST(Framework, Names) {
    EXPECT_EQ(framework_name(Framework::kFrequentist), "frequentist");
    EXPECT_EQ(framework_name(Framework::kBayesian), "bayesian");
    EXPECT_EQ(other_framework(Framework::kBayesian), Framework::kFrequentist);
    EXPECT_TRUE(is_linear(make_witness(WitnessFamily::kLinearGhz, 3)));
    EXPECT_THROW(make_witness(WitnessFamily::kQuadratic, 0), std::domain_error);
}

TEST(OptimizePlan, BestDominatesAndIsDeterministic) {
    PlanSpec spec;
    spec.eta = 7;
    spec.max_settings = 3;
    spec.q_min = 0.7;
    PlanOptions options;
    options.priors = PriorPair{2.0 / 3.0};
    const auto model = mixture_model();
    const auto a = optimize_plan(spec, WitnessFamily::kQuadratic, model, options);
    ASSERT_TRUE(a.feasible);
    for (const auto &p : a.plans) {
        if (p.feasible) {
            EXPECT_GE(a.best().report.power, p.report.power - 1e-12);
            EXPECT_GE(p.validity, 0.7 - 1e-12);
        }
    }
    options.workers = 2;
    const auto b = optimize_plan(spec, WitnessFamily::kQuadratic, model, options);
    ASSERT_EQ(a.plans.size(), b.plans.size());
    for (std::size_t i = 0; i < a.plans.size(); ++i) {
        EXPECT_EQ(a.plans[i].copies, b.plans[i].copies);
        EXPECT_EQ(a.plans[i].report.power, b.plans[i].report.power);
    }
}

TEST(OptimizePlan, BayesianRanksByLoss) {
    PlanSpec spec;
    spec.eta = 6;
    spec.max_settings = 3;
    spec.q_min = 0.7;
    spec.framework = Framework::kBayesian;
    PlanOptions options;
    options.priors = PriorPair{2.0 / 3.0};
    const auto r = optimize_plan(spec, WitnessFamily::kQuadratic, mixture_model(), options);
    ASSERT_TRUE(r.feasible);
    for (const auto &p : r.plans) {
        if (!p.feasible) continue;
        EXPECT_LE(r.best().report.expected_loss, p.report.expected_loss + 1e-12);
        EXPECT_GE(p.report.acceptance_level, 0.7);
    }
}

TEST(OptimizePlan, PowerGrowsWithBudget) {
    PlanOptions options;
    double previous = -1.0;
    for (int eta = 8; eta <= 13; ++eta) {
        PlanSpec spec;
        spec.eta = eta;
        spec.max_settings = 2;
        spec.q_min = 0.7;
        const auto r = optimize_plan(spec, WitnessFamily::kQuadratic, mixture_model(), options);
        ASSERT_TRUE(r.feasible);
        EXPECT_GE(r.best().report.power, previous - 1e-9) << "eta " << eta;
        previous = r.best().report.power;
    }
}

TEST(OptimizePlan, ReportsInfeasibility) {
    PlanSpec spec;
    spec.eta = 2;
    spec.max_settings = 2;
    spec.q_min = 0.999;
    const auto r = optimize_plan(spec, WitnessFamily::kQuadratic, mixture_model(), {});
    EXPECT_FALSE(r.feasible);
    EXPECT_LT(r.best_validity, 0.999);
    for (const auto &p : r.plans) EXPECT_FALSE(p.feasible);
}

TEST(EvaluateAllocation, ProductSetFixture) {
    PlanOptions options;
    options.priors = PriorPair{2.0 / 3.0};
    const auto p = evaluate_allocation(std::vector<int>{4, 4, 4}, Framework::kFrequentist, 0.7,
                                       WitnessFamily::kQuadratic, mixture_model(), options);
    EXPECT_TRUE(p.feasible);
    EXPECT_EQ(p.acceptance.outcomes(), (std::vector<Rational>{Rational(0), Rational(1), Rational(9, 4), Rational(3)}));
    EXPECT_NEAR(p.report.expected_loss, 0.137, 4e-3);
    const auto cross = cross_evaluate(p, Framework::kBayesian, 0.7, WitnessFamily::kQuadratic, mixture_model(), options);
    EXPECT_EQ(cross.acceptance.outcomes(), (std::vector<Rational>{Rational(9, 4), Rational(3)}));
    EXPECT_EQ(cross.copies, p.copies);
}

TEST(EqualSplitSweep, QuadraticTwentyCopies) {
    const auto sweep = equal_split_sweep(20, WitnessFamily::kQuadratic, EntangledModel{});
    ASSERT_EQ(sweep.size(), 6u);
    const auto best = std::min_element(sweep.begin(), sweep.end(), [](const SplitErrors &a, const SplitErrors &b) {
        return a.max_error() < b.max_error();
    });
    EXPECT_EQ(best->settings, 5);
    EXPECT_EQ(best->copies, 4);
    for (const auto &e : sweep) EXPECT_EQ(e.settings * e.copies, 20);
}

}  // namespace
}  // namespace entcert

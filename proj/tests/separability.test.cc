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


#include "entcert/separability.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "entcert/errors.h"
#include "support/brute_force.h"

namespace entcert {
namespace {

WorstCaseResult search_without_seeds(const WitnessKind &w, const std::vector<int> &copies, const AcceptanceSet &acc) {
    OutcomeLattice lattice(w, copies);
    return maximize_separable_mass(lattice, w, acc.weights(lattice.outcomes()));
}

TEST(SeparableConstraint, Margins) {
    const auto lin = SeparableConstraint::for_witness(LinearWitness::ghz(2));
    EXPECT_FALSE(lin.quadratic());
    EXPECT_EQ(lin.dimension(), 2u);
    EXPECT_DOUBLE_EQ(lin.margin(std::vector<double>{-0.5, 0.5}), 0.0);
    EXPECT_TRUE(lin.satisfied(std::vector<double>{-0.5, 0.5}));
    EXPECT_FALSE(lin.satisfied(std::vector<double>{-0.75, 0.75}));
    const auto quad = SeparableConstraint::for_witness(QuadraticWitness{2});
    EXPECT_DOUBLE_EQ(quad.margin(std::vector<double>{0.6, 0.8}), 0.0);
    EXPECT_FALSE(quad.satisfied(std::vector<double>{0.75, 0.75}));
    EXPECT_GT(quad.violation(std::vector<double>{1.5, 0.0}), 0.0);
}

TEST(SeparableConstraint, InfeasibleLinearWitness) {
    LinearWitness w{{Rational(1)}, Rational(-2)};
    EXPECT_THROW(SeparableConstraint::for_witness(w), InfeasibleConstraintError);
}

TEST(SeparableConstraint, ProjectionIsFeasibleAndIdempotent) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> wide(-2.0, 2.0);
    LinearWitness odd{{Rational(2), Rational(-1, 2), Rational(-3)}, Rational(1, 3)};
    for (const WitnessKind &w : {WitnessKind(LinearWitness::ghz(3)), WitnessKind(QuadraticWitness{3}), WitnessKind(odd)}) {
        const auto c = SeparableConstraint::for_witness(w);
        for (int i = 0; i < 500; ++i) {
            std::vector<double> x{wide(rng), wide(rng), wide(rng)};
            const auto p = c.project(x);
            ASSERT_TRUE(c.satisfied(p, 1e-12));
            const auto q = c.project(p);
            for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(p[j], q[j], 1e-12);
        }
    }
}

TEST(SeparableConstraint, LinearProjectionIsNearest) {
    // For a half-space cut of the box the projection is the clamped shift along the normal.
    const auto c = SeparableConstraint::for_witness(LinearWitness::ghz(2));
    const auto p = c.project(std::vector<double>{-0.75, 0.75});
    EXPECT_NEAR(p[0], -0.5, 1e-12);
    EXPECT_NEAR(p[1], 0.5, 1e-12);
}

TEST(SeparableConstraint, SamplesAreFeasible) {
    Xoshiro256 rng(17);
    for (const WitnessKind &w : {WitnessKind(LinearWitness::ghz(5)), WitnessKind(QuadraticWitness{5})}) {
        const auto c = SeparableConstraint::for_witness(w);
        for (int i = 0; i < 1000; ++i) ASSERT_TRUE(c.satisfied(c.sample(rng)));
    }
}

TEST(AnalyticWorstCase, ClosedForms) {
    EXPECT_EQ(analytic_worst_case(LinearWitness::ghz(4), 4), (std::vector<double>{-0.25, 0.25, 0.25, 0.25}));
    const auto q = analytic_worst_case(QuadraticWitness{5}, 5);
    for (double t : q) EXPECT_NEAR(t * t, 0.2, 1e-15);
    EXPECT_THROW(analytic_worst_case(QuadraticWitness{5}, 4), std::domain_error);
    LinearWitness scaled{{Rational(2), Rational(-1)}, Rational(1)};
    EXPECT_FALSE(try_analytic_worst_case(scaled).has_value());
    EXPECT_TRUE(try_analytic_worst_case(LinearWitness::ghz(2)).has_value());
}

TEST(WorstCase, RecoversLinearAnalyticSolution) {
    struct Case {
        int m;
        int n;
        Rational bound;
    };
    for (const auto &c : {Case{2, 10, Rational(-4, 5)}, Case{5, 4, Rational(-5, 2)}, Case{5, 4, Rational(-3)}}) {
        const auto w = LinearWitness::ghz(c.m);
        const std::vector<int> copies(c.m, c.n);
        const auto acc = AcceptanceSet::accept_at_most(c.bound);
        const auto r = search_without_seeds(w, copies, acc);
        const auto analytic = analytic_worst_case(w, c.m);
        for (int j = 0; j < c.m; ++j) EXPECT_NEAR(r.correlations[j], analytic[j], 1e-2);
        const auto exact = witness_pmf(make_settings(analytic, copies), w);
        EXPECT_NEAR(r.objective, acc.mass(exact), 1e-3);
        EXPECT_GE(r.objective, acc.mass(exact) - 1e-9);
    }
}

TEST(WorstCase, RecoversQuadraticAnalyticSolution) {
    for (int m : {2, 3, 5}) {
        const QuadraticWitness w{m};
        const std::vector<int> copies(m, 4);
        const auto acc = AcceptanceSet::accept_at_least(Rational(m));
        const auto r = search_without_seeds(w, copies, acc);
        for (double t : r.correlations) EXPECT_NEAR(t * t, 1.0 / m, 1e-2);
    }
}

TEST(WorstCase, TwentyCopyLinearFixtures) {
    const auto w = LinearWitness::ghz(5);
    const std::vector<int> copies(5, 4);
    EXPECT_NEAR(worst_case_acc(w, copies, AcceptanceSet::accept_at_most(Rational(-5, 2))).objective, 0.0159612, 5e-7);
    EXPECT_NEAR(worst_case_acc(w, copies, AcceptanceSet::accept_at_most(Rational(-3))).objective, 0.00361147, 5e-8);
    EXPECT_NEAR(worst_case_acc(w, copies, AcceptanceSet::accept_at_most(Rational(-4))).objective, 3.656e-5, 5e-8);
}

TEST(WorstCase, PointwiseMatchesGridSearch) {
    // P(S = 2) for n = 10 is a product of the single-setting extremal masses.
    auto extremal = [](double t) { return std::pow((1 + t) / 2, 10) + std::pow((1 - t) / 2, 10); };
    double grid_best = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        for (int j = 0; j <= 1000; ++j) {
            const double a = i / 1000.0;
            const double b = j / 1000.0;
            if (a * a + b * b > 1.0) continue;
            grid_best = std::max(grid_best, extremal(a) * extremal(b));
        }
    }
    const auto r = worst_case_pointwise(QuadraticWitness{2}, std::vector<int>{10, 10}, Rational(2));
    EXPECT_NEAR(r.objective, 0.042, 1e-3);
    EXPECT_GE(r.objective, grid_best - 1e-12);
    EXPECT_LE(r.objective, grid_best + 1e-3);
}

TEST(WorstCase, LinearPointwiseMatchesDenseGrid) {
    const auto w = LinearWitness::ghz(2);
    const std::vector<int> copies{10, 10};
    double grid_best = 0.0;
    for (int i = 0; i <= 200; ++i) {
        for (int j = 0; j <= 200; ++j) {
            const std::vector<double> t{-1.0 + i / 100.0, -1.0 + j / 100.0};
            if (1 + t[0] - t[1] < 0) continue;
            grid_best = std::max(grid_best, testing::brute_force_pmf(t, copies, w)[Rational(-1)]);
        }
    }
    const auto r = worst_case_pointwise(w, copies, Rational(-1));
    EXPECT_GE(r.objective, grid_best - 1e-12);
    EXPECT_LE(r.objective, grid_best + 1e-3);
}

TEST(WorstCase, ResultsAreFeasibleAndConsistent) {
    std::mt19937_64 rng(23);
    const std::vector<std::vector<int>> allocations{{3, 2}, {4, 4, 4}, {5, 3, 3}, {2, 2, 2, 2}};
    for (const auto &copies : allocations) {
        const int m = static_cast<int>(copies.size());
        for (const WitnessKind &w : {WitnessKind(LinearWitness::ghz(m)), WitnessKind(QuadraticWitness{m})}) {
            OutcomeLattice lattice(w, copies);
            std::vector<Rational> chosen;
            std::bernoulli_distribution pick(0.3);
            for (const auto &q : lattice.outcomes()) {
                if (pick(rng)) chosen.push_back(q);
            }
            const auto acc = AcceptanceSet::explicit_set(chosen);
            WorstCaseOptions o;
            o.restarts = 8;
            const auto r = worst_case_acc(w, copies, acc, o);
            EXPECT_LE(SeparableConstraint::for_witness(w).violation(r.correlations), 1e-9);
            EXPECT_NEAR(r.objective, acc.mass(r.distribution), 1e-12);
        }
    }
}

TEST(WorstCase, DeterministicForAnyWorkerCount) {
    const auto w = QuadraticWitness{3};
    const std::vector<int> copies{5, 3, 3};
    const auto acc = AcceptanceSet::explicit_set({Rational(131, 225), Rational(59, 25), Rational(3)});
    WorstCaseOptions one;
    WorstCaseOptions three;
    three.workers = 3;
    const auto a = worst_case_acc(w, copies, acc, one);
    const auto b = worst_case_acc(w, copies, acc, one);
    const auto c = worst_case_acc(w, copies, acc, three);
    EXPECT_EQ(a.correlations, b.correlations);
    EXPECT_EQ(a.correlations, c.correlations);
    EXPECT_EQ(a.objective, c.objective);
}

TEST(WorstCase, PointwiseRejectsOffGridOutcome) {
    EXPECT_THROW(worst_case_pointwise(QuadraticWitness{2}, std::vector<int>{4, 4}, Rational(1, 3)), std::domain_error);
    EXPECT_THROW(worst_case_acc(QuadraticWitness{2}, std::vector<int>{4, 4}, AcceptanceSet::explicit_set({Rational(1, 3)})),
                 std::domain_error);
}

}  // namespace
}  // namespace entcert

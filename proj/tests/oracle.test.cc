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


#include "entcert/oracle.h"

#include <gtest/gtest.h>

#include <cmath>

#include "entcert/planner.h"
#include "entcert/state_models.h"

namespace entcert {
namespace {

OutcomePmf exact_pmf(const SimulationConfig &c, const WitnessKind &w) {
    return witness_pmf(make_settings(c.correlations, c.copies), w);
}

TEST(Simulation, IndependentOfWorkerCount) {
    const SimulationConfig c{{-0.5, 0.5}, {10, 10}, 200000, 7};
    const auto w = LinearWitness::ghz(2);
    const auto one = simulate_counts(c, w, 1);
    const auto four = simulate_counts(c, w, 4);
    EXPECT_EQ(one, four);
    std::uint64_t total = 0;
    for (const auto &[q, n] : one) total += n;
    EXPECT_EQ(total, c.trials);
}

TEST(Simulation, SeedChangesStream) {
    const auto w = QuadraticWitness{2};
    const auto a = simulate_counts({{0.5, 0.5}, {4, 4}, 10000, 1}, w);
    const auto b = simulate_counts({{0.5, 0.5}, {4, 4}, 10000, 2}, w);
    EXPECT_NE(a, b);
}

TEST(Simulation, PerfectCorrelationsGivePointMass) {
    const auto w = LinearWitness::ghz(3);
    const auto pmf = simulate_witness({{-1.0, 1.0, 1.0}, {3, 5, 2}, 1000, 3}, w);
    ASSERT_EQ(pmf.size(), 1u);
    EXPECT_EQ(pmf.entries().front().outcome, Rational(-2));
    EXPECT_EQ(pmf.entries().front().probability, 1.0);
}

TEST(Simulation, RejectsBadConfig) {
    const auto w = QuadraticWitness{2};
    EXPECT_THROW(simulate_counts({{0.5}, {4, 4}, 10, 0}, w), std::domain_error);
    EXPECT_THROW(simulate_counts({{1.5, 0.0}, {4, 4}, 10, 0}, w), std::domain_error);
    EXPECT_THROW(simulate_counts({{0.5, 0.5}, {4, 4}, 0, 0}, w), std::domain_error);
    EXPECT_THROW(simulate_counts({{0.5, 0.5, 0.5}, {4, 4, 4}, 10, 0}, w), std::domain_error);
}

TEST(Simulation, TauMeanWithinFourSigma) {
    for (double t : {-0.8, 0.0, 0.3, 0.75}) {
        for (int n : {1, 4, 10}) {
            const std::uint64_t trials = 100000;
            const double mean = simulate_tau_mean(t, n, trials, 11);
            const double sigma = std::sqrt((1.0 - t * t) / n / static_cast<double>(trials));
            EXPECT_LE(std::abs(mean - t), 4.0 * sigma + 1e-12) << "T=" << t << " n=" << n;
        }
    }
}

TEST(Simulation, LimitedSignificanceFrequencies) {
    const SimulationConfig c{{-0.5, 0.5}, {10, 10}, 1000000, 42};
    const auto w = LinearWitness::ghz(2);
    const auto sim = simulate_witness(c, w);
    const auto exact = exact_pmf(c, w);
    auto check = [&](const std::function<bool(const Rational &)> &pred) {
        const double p = exact.mass_where(pred);
        const double sigma = std::sqrt(p * (1 - p) / 1e6);
        EXPECT_LE(std::abs(sim.mass_where(pred) - p), 3.0 * sigma);
    };
    check([](const Rational &q) { return q < Rational(0); });
    check([](const Rational &q) { return q <= Rational(-4, 5); });

    const SimulationConfig cq{{std::sqrt(0.5), std::sqrt(0.5)}, {10, 10}, 1000000, 43};
    const auto sq = simulate_witness(cq, QuadraticWitness{2});
    const double p2 = exact_pmf(cq, QuadraticWitness{2}).probability(Rational(2));
    EXPECT_LE(std::abs(sq.probability(Rational(2)) - p2), 3.0 * std::sqrt(p2 * (1 - p2) / 1e6));
}

TEST(Simulation, MixtureMatchesExactMixture) {
    const QuadraticWitness w{3};
    const std::vector<int> copies(3, 4);
    const TruncatedGaussianPrior prior;
    const auto nodes = discretize_prior(prior, 0.01);
    const auto signs = violating_signs(w);
    SimulationConfig c;
    c.copies = copies;
    c.trials = 500000;
    c.seed = 5;
    const auto sim = simulate_mixture(c, w, nodes, signs);
    const auto exact = mixture_pmf(prior, signs, copies, w, 0.01);
    EXPECT_GT(chi_square_compare(sim, exact, c.trials).p_value, 1e-3);
}

TEST(ChiSquare, ExactAgainstItself) {
    const SimulationConfig c{{0.2, -0.4, 0.6}, {3, 4, 2}, 1000, 0};
    const auto exact = exact_pmf(c, LinearWitness::ghz(3));
    const auto r = chi_square_compare(exact, exact, 1000000);
    EXPECT_NEAR(r.statistic, 0.0, 1e-3);
    EXPECT_GT(r.p_value, 0.999);
    EXPECT_GE(r.bins, 2);
    EXPECT_EQ(r.degrees_of_freedom, r.bins - 1);
}

TEST(ChiSquare, NegativeControlFails) {
    const auto w = LinearWitness::ghz(5);
    const std::vector<int> copies(5, 4);
    const auto sim = simulate_witness({{-0.5, 0.5, 0.5, 0.5, 0.5}, copies, 1000000, 9}, w);
    const auto wrong = witness_pmf(make_settings(std::vector<double>{-0.75, 0.75, 0.75, 0.75, 0.75}, copies), w);
    const auto right = witness_pmf(make_settings(std::vector<double>{-0.5, 0.5, 0.5, 0.5, 0.5}, copies), w);
    EXPECT_LT(chi_square_compare(sim, wrong, 1000000).p_value, 1e-6);
    EXPECT_GT(chi_square_compare(sim, right, 1000000).p_value, 1e-3);
}

TEST(ChiSquare, DegenerateWhenOneBin) {
    const auto point = OutcomePmf::point_mass(Rational(1));
    const auto r = chi_square_compare(point, point, 100);
    EXPECT_TRUE(r.degenerate);
    EXPECT_EQ(r.bins, 1);
    EXPECT_THROW(chi_square_compare(point, point, 0), std::domain_error);
}

}  // namespace
}  // namespace entcert

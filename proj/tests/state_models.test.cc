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


#include "entcert/state_models.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

namespace entcert {
namespace {

TEST(StateModels, SeparabilityThresholdAndFamily) {
    EXPECT_DOUBLE_EQ(separability_threshold(3), 0.2);
    NoisyPureFamily ghz{0.75, 3, {1, -1, -1}};
    EXPECT_TRUE(ghz.entangled());
    EXPECT_EQ(family_correlations(ghz), (std::vector<double>{0.75, -0.75, -0.75}));
    ghz.purity = 0.2;
    EXPECT_FALSE(ghz.entangled());
    ghz.signs = {2};
    EXPECT_THROW(ghz.validate(), std::domain_error);
}

TEST(StateModels, ViolatingSigns) {
    EXPECT_EQ(violating_signs(LinearWitness::ghz(3)), (std::vector<int>{-1, 1, 1}));
    EXPECT_EQ(violating_signs(QuadraticWitness{2}), (std::vector<int>{1, 1}));
}

TEST(StateModels, NaturalPrior) {
    EXPECT_DOUBLE_EQ(natural_prior(3).entangled, 0.8);
    EXPECT_DOUBLE_EQ(natural_prior(3).separable(), 0.2);
    EXPECT_THROW(natural_prior(1), std::domain_error);
    EXPECT_THROW(PriorPair{1.5}.validate(), std::domain_error);
}

TEST(StateModels, NoiseCurveClosedForm) {
    for (int i = 0; i <= 100; ++i) {
        const double p = i / 100.0;
        const double closed = std::pow((1 + 6 * p * p + p * p * p * p) / 8, 5);
        EXPECT_NEAR(white_noise_success_probability(p, 4, 5), closed, 1e-12);
    }
    EXPECT_DOUBLE_EQ(white_noise_success_probability(1.0, 4, 5), 1.0);
}

TEST(StateModels, NoiseCurveIsTheAllExtremalMass) {
    for (double p : {0.0, 0.3, 0.75, 1.0}) {
        const std::vector<double> t(5, p);
        const auto pmf = witness_pmf(make_settings(t, std::vector<int>(5, 4)), QuadraticWitness{5});
        EXPECT_NEAR(pmf.probability(Rational(5)), white_noise_success_probability(p, 4, 5), 1e-14);
    }
}

TEST(StateModels, PriorGridIsNormalizedMidpoints) {
    const auto nodes = discretize_prior({}, 0.01);
    ASSERT_EQ(nodes.size(), 80u);
    EXPECT_NEAR(nodes.front().purity, 0.205, 1e-12);
    EXPECT_NEAR(nodes.back().purity, 0.995, 1e-12);
    double total = 0.0;
    for (const auto &n : nodes) total += n.weight;
    EXPECT_NEAR(total, 1.0, 1e-14);
    const auto peak = std::max_element(nodes.begin(), nodes.end(),
                                       [](const PurityNode &a, const PurityNode &b) { return a.weight < b.weight; });
    EXPECT_NEAR(peak->purity, 0.795, 0.0100001);
}

TEST(StateModels, PriorGridClipsLastCell) {
    const auto nodes = discretize_prior({0.8, 0.1, 0.25}, 0.1);
    ASSERT_EQ(nodes.size(), 8u);
    EXPECT_NEAR(nodes.back().purity, 0.975, 1e-12);
}

TEST(StateModels, PriorValidation) {
    EXPECT_THROW(discretize_prior({0.8, 0.0, 0.2}, 0.01), std::domain_error);
    EXPECT_THROW(discretize_prior({0.8, 0.1, 1.0}, 0.01), std::domain_error);
    EXPECT_THROW(discretize_prior({0.8, 0.1, 0.2}, 0.0), std::domain_error);
}

TEST(StateModels, NarrowPriorReducesToFixedPurity) {
    const TruncatedGaussianPrior narrow{0.75, 1e-6, 0.205};
    const std::vector<int> copies{4, 4, 4};
    const auto signs = violating_signs(QuadraticWitness{3});
    const auto mix = mixture_pmf(narrow, signs, copies, QuadraticWitness{3});
    const auto fixed = witness_pmf(make_settings(std::vector<double>{0.75, 0.75, 0.75}, copies), QuadraticWitness{3});
    for (const auto &e : fixed) EXPECT_NEAR(mix.probability(e.outcome), e.probability, 1e-12);
}

TEST(StateModels, MixtureFixtureForEqualSplit) {
    const std::vector<int> copies{4, 4, 4};
    const auto pmf = mixture_pmf({}, violating_signs(QuadraticWitness{3}), copies, QuadraticWitness{3});
    EXPECT_NEAR(pmf.total_mass(), 1.0, 1e-12);
    EXPECT_EQ(pmf.size(), 10u);
    EXPECT_NEAR(pmf.probability(Rational(9, 4)), 0.3329, 5e-5);
    EXPECT_NEAR(pmf.probability(Rational(3)), 0.3227, 5e-5);
    EXPECT_NEAR(pmf.probability(Rational(3, 2)), 0.1577, 5e-5);
    EXPECT_NEAR(pmf.probability(Rational(0)), 0.0005, 5e-5);
}

}  // namespace
}  // namespace entcert

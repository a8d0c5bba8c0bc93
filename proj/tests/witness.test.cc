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


#include "entcert/witness.h"

#include <gtest/gtest.h>

#include <random>

#include "entcert/outcome_lattice.h"
#include "support/brute_force.h"

namespace entcert {
namespace {

void expect_matches_brute_force(const std::vector<double> &t, const std::vector<int> &copies, const WitnessKind &w) {
    const auto pmf = witness_pmf(make_settings(t, copies), w);
    const auto brute = testing::brute_force_pmf(t, copies, w);
    ASSERT_EQ(pmf.size(), brute.size());
    auto it = brute.begin();
    for (const auto &e : pmf) {
        EXPECT_EQ(e.outcome, it->first);
        EXPECT_NEAR(e.probability, it->second, 1e-13);
        ++it;
    }
}

TEST(Witness, GhzPattern) {
    const auto w = LinearWitness::ghz(3);
    EXPECT_EQ(w.coefficients, (std::vector<Rational>{1, -1, -1}));
    EXPECT_EQ(w.constant, Rational(1));
    EXPECT_EQ(setting_count(w), 3);
    EXPECT_TRUE(is_linear(w));
    EXPECT_FALSE(is_linear(QuadraticWitness{2}));
}

TEST(Witness, IdealValues) {
    EXPECT_DOUBLE_EQ(ideal_witness_value(std::vector<double>{-0.75, 0.75}, LinearWitness::ghz(2)), -0.5);
    EXPECT_DOUBLE_EQ(ideal_witness_value(std::vector<double>{0.75, 0.75}, QuadraticWitness{2}), 1.125);
    EXPECT_THROW(ideal_witness_value(std::vector<double>{0.5}, QuadraticWitness{2}), std::domain_error);
}

TEST(Witness, LengthMismatchIsRejected) {
    EXPECT_THROW(witness_pmf(make_settings(std::vector<double>{0.5}, std::vector<int>{3}), QuadraticWitness{2}),
                 std::domain_error);
    EXPECT_THROW(make_settings(std::vector<double>{0.5, 0.5}, std::vector<int>{3}), std::domain_error);
    EXPECT_THROW(validate_witness(QuadraticWitness{0}), std::domain_error);
}

TEST(Witness, LinearTwoSettingExample) {
    const std::vector<int> copies{10, 10};
    const auto sep = witness_pmf(make_settings(std::vector<double>{-0.5, 0.5}, copies), LinearWitness::ghz(2));
    EXPECT_NEAR(sep.mass_where([](const Rational &q) { return q < Rational(0); }), 0.414842, 5e-7);
    EXPECT_NEAR(sep.mass_where([](const Rational &q) { return q <= Rational(-4, 5); }), 0.0243126, 5e-8);
    const auto ent = witness_pmf(make_settings(std::vector<double>{-0.75, 0.75}, copies), LinearWitness::ghz(2));
    EXPECT_NEAR(ent.mass_where([](const Rational &q) { return q <= Rational(-4, 5); }), 0.266948, 5e-7);
}

TEST(Witness, QuadraticTwoSettingExample) {
    const std::vector<int> copies{10, 10};
    const double r = std::sqrt(0.5);
    const auto sep = witness_pmf(make_settings(std::vector<double>{r, r}, copies), QuadraticWitness{2});
    EXPECT_NEAR(sep.probability(Rational(2)), 0.0421322, 5e-8);
    const auto ent = witness_pmf(make_settings(std::vector<double>{0.75, -0.75}, copies), QuadraticWitness{2});
    EXPECT_NEAR(ent.probability(Rational(2)), 0.0692088, 5e-8);
}

TEST(Witness, LargeCopyCountConcentratesAtIdealValue) {
    const std::vector<int> copies{100, 100};
    const auto pmf = witness_pmf(make_settings(std::vector<double>{0.75, 0.75}, copies), QuadraticWitness{2});
    const double near = pmf.mass_where([](const Rational &q) {
        return q.to_double() > 1.125 - 0.25 && q.to_double() < 1.125 + 0.25;
    });
    EXPECT_GT(near, 0.9);
    EXPECT_NEAR(pmf.moments().mean, 1.125 + 2 * (1 - 0.5625) / 100, 1e-12);
}

TEST(Witness, OutcomeKeysAreExactAcrossPaths) {
    const std::vector<int> copies{5, 3, 3};
    const auto pmf = witness_pmf(make_settings(std::vector<double>{0.8, 0.8, 0.8}, copies), QuadraticWitness{3});
    EXPECT_TRUE(pmf.contains(Rational(131, 225)));
    EXPECT_TRUE(pmf.contains(Rational(59, 25)));
    EXPECT_TRUE(pmf.contains(Rational(3)));
}

TEST(Witness, ClosedFormMomentsMatchPmf) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> corr(-1.0, 1.0);
    std::uniform_int_distribution<int> n(1, 12);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 1 + trial % 4;
        std::vector<double> t(m);
        std::vector<int> copies(m);
        for (int j = 0; j < m; ++j) {
            t[j] = corr(rng);
            copies[j] = n(rng);
        }
        for (const WitnessKind &w : {WitnessKind(LinearWitness::ghz(m)), WitnessKind(QuadraticWitness{m})}) {
            const auto settings = make_settings(t, copies);
            const auto exact = witness_pmf(settings, w).moments();
            const auto closed = witness_moments(settings, w);
            EXPECT_NEAR(exact.mean, closed.mean, 1e-12);
            EXPECT_NEAR(exact.variance, closed.variance, 1e-12);
        }
    }
}

TEST(Witness, MatchesExhaustiveEnumeration) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> corr(-1.0, 1.0);
    const std::vector<std::vector<int>> allocations{{1}, {7}, {3, 2}, {10, 10}, {4, 4, 4}, {5, 3, 3}, {2, 2, 2, 2, 2},
                                                    {4, 4, 4, 4, 4}, {1, 1, 1, 1, 1, 1, 1, 1}};
    for (const auto &copies : allocations) {
        const int m = static_cast<int>(copies.size());
        std::vector<double> t(m);
        for (auto &v : t) v = corr(rng);
        LinearWitness custom;
        for (int j = 0; j < m; ++j) custom.coefficients.push_back(Rational(j % 2 == 0 ? 2 : -1, 3));
        custom.constant = Rational(1, 2);
        expect_matches_brute_force(t, copies, LinearWitness::ghz(m));
        expect_matches_brute_force(t, copies, custom);
        expect_matches_brute_force(t, copies, QuadraticWitness{m});
    }
}

TEST(OutcomeLattice, IndexAndEvaluate) {
    const std::vector<int> copies{4, 4};
    OutcomeLattice lattice(QuadraticWitness{2}, copies);
    EXPECT_EQ(lattice.settings(), 2u);
    EXPECT_TRUE(std::is_sorted(lattice.outcomes().begin(), lattice.outcomes().end()));
    ASSERT_TRUE(lattice.index_of(Rational(5, 4)).has_value());
    EXPECT_FALSE(lattice.index_of(Rational(1, 3)).has_value());
    const std::vector<double> t{0.3, -0.6};
    const auto probs = lattice.evaluate(t);
    const auto pmf = lattice.pmf(t);
    ASSERT_EQ(probs.size(), lattice.size());
    for (std::size_t i = 0; i < probs.size(); ++i) {
        EXPECT_DOUBLE_EQ(pmf.probability(lattice.outcomes()[i]), probs[i]);
    }
}

}  // namespace
}  // namespace entcert

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


#include "entcert/outcome_pmf.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

namespace entcert {
namespace {

TEST(OutcomePmf, MergesAndSorts) {
    auto pmf = OutcomePmf::from_entries({{Rational(1), 0.25}, {Rational(-1, 2), 0.5}, {Rational(2, 2), 0.25}});
    ASSERT_EQ(pmf.size(), 2u);
    EXPECT_EQ(pmf.entries()[0].outcome, Rational(-1, 2));
    EXPECT_DOUBLE_EQ(pmf.probability(Rational(1)), 0.5);
    EXPECT_DOUBLE_EQ(pmf.probability(Rational(7)), 0.0);
    EXPECT_TRUE(pmf.contains(Rational(1)));
    EXPECT_FALSE(pmf.contains(Rational(0)));
    EXPECT_DOUBLE_EQ(pmf.total_mass(), 1.0);
}

TEST(OutcomePmf, RejectsInvalidMass) {
    EXPECT_THROW(OutcomePmf::from_entries({{Rational(0), -0.1}}), std::domain_error);
    EXPECT_THROW(OutcomePmf::from_entries({{Rational(0), std::nan("")}}), std::domain_error);
}

TEST(OutcomePmf, MomentsAndMasses) {
    auto pmf = OutcomePmf::from_map({{Rational(-1), 0.25}, {Rational(1), 0.75}});
    const auto m = pmf.moments();
    EXPECT_DOUBLE_EQ(m.mean, 0.5);
    EXPECT_DOUBLE_EQ(m.variance, 0.75);
    EXPECT_DOUBLE_EQ(pmf.mass_where([](const Rational &q) { return q < Rational(0); }), 0.25);
}

TEST(OutcomePmf, PointMassAndNormalize) {
    auto pm = OutcomePmf::point_mass(Rational(9, 8));
    EXPECT_EQ(pm.size(), 1u);
    EXPECT_DOUBLE_EQ(pm.total_mass(), 1.0);
    auto half = OutcomePmf::from_map({{Rational(0), 0.25}, {Rational(1), 0.25}}).normalized();
    EXPECT_DOUBLE_EQ(half.probability(Rational(0)), 0.5);
    EXPECT_EQ(half.outcomes(), (std::vector<Rational>{Rational(0), Rational(1)}));
}

}  // namespace
}  // namespace entcert

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


#include <gtest/gtest.h>

#include <cmath>

#include "entcert/annealing.h"
#include "entcert/nelder_mead.h"
#include "entcert/parallel.h"
#include "entcert/random.h"

namespace entcert {
namespace {

double rosenbrock(std::span<const double> x) {
    return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
}

TEST(NelderMead, Quadratic) {
    auto f = [](std::span<const double> x) { return std::pow(x[0] - 0.3, 2) + 2 * std::pow(x[1] + 0.1, 2); };
    const auto r = optim::nelder_mead(f, {0.0, 0.0});
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.x[0], 0.3, 1e-6);
    EXPECT_NEAR(r.x[1], -0.1, 1e-6);
}

TEST(NelderMead, Rosenbrock) {
    optim::NelderMeadOptions o;
    o.max_evaluations = 50000;
    const auto r = optim::nelder_mead(rosenbrock, {-1.2, 1.0}, o);
    EXPECT_NEAR(r.x[0], 1.0, 1e-4);
    EXPECT_NEAR(r.x[1], 1.0, 1e-4);
}

TEST(NelderMead, BudgetIsRespected) {
    optim::NelderMeadOptions o;
    o.max_evaluations = 30;
    const auto r = optim::nelder_mead(rosenbrock, {-1.2, 1.0}, o);
    EXPECT_FALSE(r.converged);
    EXPECT_LE(r.evaluations, 32);
}

TEST(Annealing, FindsGlobalBasin) {
    // Two wells; the deeper one is at x = 2.
    auto f = [](std::span<const double> x) {
        return std::min(std::pow(x[0] + 1, 2), std::pow(x[0] - 2, 2) - 0.5);
    };
    Xoshiro256 rng(3);
    optim::AnnealingOptions o;
    o.initial_temperature = 1.0;
    o.initial_step = 1.0;
    const auto r = optim::simulated_annealing(f, {-1.0}, rng, o);
    EXPECT_NEAR(r.x[0], 2.0, 0.1);
    EXPECT_THROW(optim::simulated_annealing(f, {}, rng, o), std::invalid_argument);
}

TEST(Random, Xoshiro256IsDeterministic) {
    Xoshiro256 a(42);
    Xoshiro256 b(42);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    double sum = 0.0;
    Xoshiro256 c(9);
    for (int i = 0; i < 100000; ++i) {
        const double u = c.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

TEST(Random, SplitMixReferenceValue) {
    std::uint64_t state = 1234567;
    EXPECT_EQ(splitmix64(state), 6457827717110365317ULL);
    EXPECT_EQ(splitmix64(state), 3203168211198807973ULL);
}

TEST(Parallel, CoversEveryIndexAndRethrows) {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) EXPECT_EQ(h, 1);
    EXPECT_THROW(parallel_for(10, 3,
                              [](std::size_t i) {
                                  if (i == 5) throw std::runtime_error("boom");
                              }),
                 std::runtime_error);
}

}  // namespace
}  // namespace entcert

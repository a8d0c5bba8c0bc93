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

#ifndef ENTCERT_WITNESS_H
#define ENTCERT_WITNESS_H

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "entcert/finite_stats.h"
#include "entcert/outcome_pmf.h"
#include "entcert/rational.h"

namespace entcert {

/// E_W = sum_j a_j tau_j + c. Non-negative on separable states; entanglement
/// is indicated by small (negative) values.
struct LinearWitness {
    std::vector<Rational> coefficients;
    Rational constant;

    /// (1, -1, ..., -1) with constant 1: E = T_1 - T_2 - ... - T_M + 1.
    static LinearWitness ghz(int settings);
};

/// S = sum_j tau_j^2 over M full correlations. S <= 1 on separable states.
struct QuadraticWitness {
    int settings = 1;
};

using WitnessKind = std::variant<LinearWitness, QuadraticWitness>;

int setting_count(const WitnessKind &witness);
bool is_linear(const WitnessKind &witness);
std::string witness_name(const WitnessKind &witness);
/// Throws std::domain_error when the witness has no settings.
void validate_witness(const WitnessKind &witness);

/// Exact distribution of E_W, by left-to-right convolution of the per-setting grids.
OutcomePmf linear_pmf(std::span<const CorrelationSetting> settings, const LinearWitness &witness);
/// Exact distribution of S = sum tau_j^2.
OutcomePmf quadratic_pmf(std::span<const CorrelationSetting> settings);
OutcomePmf witness_pmf(std::span<const CorrelationSetting> settings, const WitnessKind &witness);

/// Closed-form mean and variance of the witness estimator.
Moments witness_moments(std::span<const CorrelationSetting> settings, const WitnessKind &witness);

/// Value of the witness in the infinite-statistics limit.
double ideal_witness_value(std::span<const double> correlations, const WitnessKind &witness);

std::vector<CorrelationSetting> make_settings(std::span<const double> correlations, std::span<const int> copies);

}  // namespace entcert

#endif  // ENTCERT_WITNESS_H

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

// Finite-copy model of one correlation measurement. Each of the n copies
// yields a product of local outcomes equal to +1 with probability (1+T)/2, so
// the estimator tau = (n+ - n-)/n lives on {-1, -1+2/n, ..., 1} and n+ is
// binomial.

#ifndef ENTCERT_FINITE_STATS_H
#define ENTCERT_FINITE_STATS_H

#include <vector>

#include "entcert/outcome_pmf.h"
#include "entcert/rational.h"

namespace entcert {

struct CorrelationSetting {
    double correlation = 0.0;  // ideal value T in [-1, 1]
    int copies = 1;            // n >= 1

    /// Throws std::domain_error unless |T| <= 1 and n >= 1.
    void validate() const;
};

/// P(n+ = k) for k = 0..n. Index k corresponds to tau = (2k - n)/n.
std::vector<double> binomial_probabilities(double correlation, int copies);

/// Grid value (2k - n)/n.
Rational tau_value(int plus_count, int copies);

OutcomePmf tau_pmf(const CorrelationSetting &setting);
/// mean = T, variance = (1 - T^2)/n.
Moments tau_moments(const CorrelationSetting &setting);

/// Distribution of tau^2: P(v) = P(tau = sqrt v) + P(tau = -sqrt v).
OutcomePmf tau_sq_pmf(const CorrelationSetting &setting);
/// mean = T^2 + (1 - T^2)/n,
/// variance = 2(n-1)(1-T^2)[(2n-3)T^2 + 1]/n^3.
Moments tau_sq_moments(const CorrelationSetting &setting);

}  // namespace entcert

#endif  // ENTCERT_FINITE_STATS_H

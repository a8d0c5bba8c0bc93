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

#ifndef ENTCERT_STATE_MODELS_H
#define ENTCERT_STATE_MODELS_H

#include <span>
#include <vector>

#include "entcert/outcome_pmf.h"
#include "entcert/witness.h"

namespace entcert {

/// rho = p |psi><psi| + (1 - p) white noise, where |psi> has perfect
/// correlations with the given signs on the measured settings.
struct NoisyPureFamily {
    double purity = 1.0;
    int qubits = 3;
    std::vector<int> signs;

    void validate() const;
    /// Entangled iff p > 1/(2^(N-1) + 1).
    bool entangled() const;
};

/// Threshold purity 1/(2^(N-1) + 1) below which the family is separable.
double separability_threshold(int qubits);

/// T_j = sign_j * p.
std::vector<double> family_correlations(const NoisyPureFamily &family);

/// Gaussian density in p, truncated to [lower, 1].
struct TruncatedGaussianPrior {
    double mean = 0.8;
    double stddev = 0.1;
    double lower = 0.2;

    void validate() const;
};

struct PurityNode {
    double purity = 0.0;
    double weight = 0.0;
};

/// Midpoint discretization of the prior on cells of width `step` covering
/// [lower, 1]; the last cell is clipped at 1. Weights are density times cell
/// width, renormalized to sum to 1.
std::vector<PurityNode> discretize_prior(const TruncatedGaussianPrior &prior, double step);

/// P(Q|ent) averaged over the discretized prior.
OutcomePmf mixture_pmf(const TruncatedGaussianPrior &prior, std::span<const int> signs, std::span<const int> copies,
                       const WitnessKind &witness, double step = 0.01);

/// P(S = M) for the white-noise family with every setting measured n times:
/// [((1+p)/2)^n + ((1-p)/2)^n]^M.
double white_noise_success_probability(double purity, int copies, int settings);

struct PriorPair {
    double entangled = 0.5;

    double separable() const { return 1.0 - entangled; }
    void validate() const;
};

/// Uniform prior over p in [0, 1]: P(ent) = 2^(N-1)/(2^(N-1) + 1).
PriorPair natural_prior(int qubits);

/// Signs that make the noisy pure state violate `witness`: -sign(a_j) for a
/// linear witness, all +1 for the quadratic one.
std::vector<int> violating_signs(const WitnessKind &witness);

}  // namespace entcert

#endif  // ENTCERT_STATE_MODELS_H

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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "entcert/outcome_lattice.h"

namespace entcert {

void NoisyPureFamily::validate() const {
    if (!(purity >= 0.0 && purity <= 1.0)) throw std::domain_error("purity must lie in [0, 1]");
    if (qubits < 2) throw std::domain_error("need at least two qubits");
    for (int s : signs) {
        if (s != 1 && s != -1) throw std::domain_error("correlation signs must be +1 or -1");
    }
}

bool NoisyPureFamily::entangled() const { return purity > separability_threshold(qubits); }

double separability_threshold(int qubits) {
    if (qubits < 1 || qubits > 62) throw std::domain_error("qubit count out of range");
    return 1.0 / (std::ldexp(1.0, qubits - 1) + 1.0);
}

std::vector<double> family_correlations(const NoisyPureFamily &family) {
    family.validate();
    std::vector<double> t;
    t.reserve(family.signs.size());
    for (int s : family.signs) t.push_back(s * family.purity);
    return t;
}

void TruncatedGaussianPrior::validate() const {
    if (!std::isfinite(mean)) throw std::domain_error("prior mean must be finite");
    if (!(stddev > 0.0) || !std::isfinite(stddev)) throw std::domain_error("prior stddev must be positive");
    if (!(lower >= 0.0 && lower <= 1.0)) throw std::domain_error("prior lower bound must lie in [0, 1]");
}

std::vector<PurityNode> discretize_prior(const TruncatedGaussianPrior &prior, double step) {
    prior.validate();
    if (!(step > 0.0) || !std::isfinite(step)) throw std::domain_error("grid step must be positive");
    const double span = 1.0 - prior.lower;
    const auto cells = static_cast<long>(std::ceil(span / step - 1e-9));
    if (cells <= 0) throw std::domain_error("prior support [lower, 1] yields an empty grid");
    if (cells > 10'000'000) throw std::domain_error("grid step too small");

    std::vector<PurityNode> nodes;
    nodes.reserve(static_cast<std::size_t>(cells));
    std::vector<double> log_weights;
    log_weights.reserve(static_cast<std::size_t>(cells));
    for (long k = 0; k < cells; ++k) {
        const double a = prior.lower + static_cast<double>(k) * step;
        const double b = std::min(1.0, prior.lower + static_cast<double>(k + 1) * step);
        if (b <= a) continue;
        const double mid = 0.5 * (a + b);
        const double z = (mid - prior.mean) / prior.stddev;
        nodes.push_back({mid, 0.0});
        log_weights.push_back(-0.5 * z * z + std::log(b - a));
    }
    // Subtract the maximum so narrow priors do not underflow to all zeros.
    const double top = *std::max_element(log_weights.begin(), log_weights.end());
    double total = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        nodes[i].weight = std::exp(log_weights[i] - top);
        total += nodes[i].weight;
    }
    for (auto &n : nodes) n.weight /= total;
    return nodes;
}

OutcomePmf mixture_pmf(const TruncatedGaussianPrior &prior, std::span<const int> signs, std::span<const int> copies,
                       const WitnessKind &witness, double step) {
    if (signs.size() != copies.size()) throw std::domain_error("mixture_pmf: signs/copies length mismatch");
    const auto nodes = discretize_prior(prior, step);
    OutcomeLattice lattice(witness, copies);

    std::vector<double> total(lattice.size(), 0.0);
    std::vector<double> t(signs.size());
    std::vector<double> probs;
    // Fixed node order keeps the summation deterministic.
    for (const auto &node : nodes) {
        for (std::size_t j = 0; j < signs.size(); ++j) t[j] = signs[j] * node.purity;
        lattice.evaluate(t, probs);
        for (std::size_t i = 0; i < probs.size(); ++i) total[i] += node.weight * probs[i];
    }
    std::vector<PmfEntry> entries;
    entries.reserve(total.size());
    for (std::size_t i = 0; i < total.size(); ++i) entries.push_back({lattice.outcomes()[i], total[i]});
    return OutcomePmf::from_entries(std::move(entries));
}

double white_noise_success_probability(double purity, int copies, int settings) {
    if (!(purity >= 0.0 && purity <= 1.0)) throw std::domain_error("purity must lie in [0, 1]");
    if (copies < 1 || settings < 1) throw std::domain_error("copies and settings must be >= 1");
    const double single = std::pow((1.0 + purity) / 2.0, copies) + std::pow((1.0 - purity) / 2.0, copies);
    return std::pow(single, settings);
}

void PriorPair::validate() const {
    if (!(entangled >= 0.0 && entangled <= 1.0)) throw std::domain_error("P(ent) must lie in [0, 1]");
}

PriorPair natural_prior(int qubits) {
    if (qubits < 2) throw std::domain_error("natural_prior: need at least two qubits");
    const double half = std::ldexp(1.0, qubits - 1);
    return {half / (half + 1.0)};
}

std::vector<int> violating_signs(const WitnessKind &witness) {
    std::vector<int> signs(static_cast<std::size_t>(setting_count(witness)), 1);
    if (const auto *lin = std::get_if<LinearWitness>(&witness)) {
        for (std::size_t j = 0; j < signs.size(); ++j) {
            signs[j] = lin->coefficients[j] > Rational(0) ? -1 : 1;
        }
    }
    return signs;
}

}  // namespace entcert

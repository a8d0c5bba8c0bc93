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

#include "entcert/finite_stats.h"

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace entcert {
namespace {

// Largest n for which every C(n, k) fits in uint64.
constexpr int kExactBinomialLimit = 62;

std::uint64_t binomial_coefficient(int n, int k) {
    if (k > n - k) k = n - k;
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        // c * (n - k + i) / i stays integral at every step.
        unsigned __int128 t = static_cast<unsigned __int128>(c) * static_cast<unsigned>(n - k + i);
        c = static_cast<std::uint64_t>(t / static_cast<unsigned>(i));
    }
    return c;
}

}  // namespace

void CorrelationSetting::validate() const {
    if (!std::isfinite(correlation) || correlation < -1.0 || correlation > 1.0) {
        throw std::domain_error("correlation must lie in [-1, 1], got " + std::to_string(correlation));
    }
    if (copies < 1) {
        throw std::domain_error("copies must be >= 1, got " + std::to_string(copies));
    }
}

std::vector<double> binomial_probabilities(double correlation, int copies) {
    CorrelationSetting{correlation, copies}.validate();
    const double p = (1.0 + correlation) / 2.0;
    const double q = (1.0 - correlation) / 2.0;
    std::vector<double> probs(static_cast<std::size_t>(copies) + 1, 0.0);
    if (copies <= kExactBinomialLimit) {
        for (int k = 0; k <= copies; ++k) {
            probs[static_cast<std::size_t>(k)] = static_cast<double>(binomial_coefficient(copies, k)) *
                                                 std::pow(p, k) * std::pow(q, copies - k);
        }
        return probs;
    }
    // Repeated convolution with a single Bernoulli trial; all terms are
    // non-negative, so there is no cancellation.
    probs[0] = 1.0;
    for (int m = 1; m <= copies; ++m) {
        for (int k = m; k >= 1; --k) {
            probs[static_cast<std::size_t>(k)] =
                probs[static_cast<std::size_t>(k)] * q + probs[static_cast<std::size_t>(k - 1)] * p;
        }
        probs[0] *= q;
    }
    return probs;
}

Rational tau_value(int plus_count, int copies) { return Rational(2 * plus_count - copies, copies); }

OutcomePmf tau_pmf(const CorrelationSetting &setting) {
    auto probs = binomial_probabilities(setting.correlation, setting.copies);
    std::vector<PmfEntry> entries;
    entries.reserve(probs.size());
    for (int k = 0; k <= setting.copies; ++k) {
        entries.push_back({tau_value(k, setting.copies), probs[static_cast<std::size_t>(k)]});
    }
    return OutcomePmf::from_entries(std::move(entries));
}

Moments tau_moments(const CorrelationSetting &setting) {
    setting.validate();
    const double t = setting.correlation;
    return {t, (1.0 - t * t) / setting.copies};
}

OutcomePmf tau_sq_pmf(const CorrelationSetting &setting) {
    auto probs = binomial_probabilities(setting.correlation, setting.copies);
    std::vector<PmfEntry> entries;
    entries.reserve(probs.size());
    for (int k = 0; k <= setting.copies; ++k) {
        Rational tau = tau_value(k, setting.copies);
        entries.push_back({tau * tau, probs[static_cast<std::size_t>(k)]});
    }
    return OutcomePmf::from_entries(std::move(entries));
}

Moments tau_sq_moments(const CorrelationSetting &setting) {
    setting.validate();
    const double t2 = setting.correlation * setting.correlation;
    const double n = setting.copies;
    const double mean = t2 + (1.0 - t2) / n;
    const double variance = 2.0 * (n - 1.0) * (1.0 - t2) * ((2.0 * n - 3.0) * t2 + 1.0) / (n * n * n);
    return {mean, variance};
}

}  // namespace entcert

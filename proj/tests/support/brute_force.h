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


// Exhaustive enumeration of finite-copy experiments, kept independent of the
// convolution code: every vector (k_1, ..., k_M) of "+1" counts is visited and
// its witness value and probability are computed from scratch.

#ifndef ENTCERT_TESTS_SUPPORT_BRUTE_FORCE_H
#define ENTCERT_TESTS_SUPPORT_BRUTE_FORCE_H

#include <cmath>
#include <map>
#include <span>
#include <vector>

#include "entcert/rational.h"
#include "entcert/witness.h"

namespace entcert::testing {

inline double binomial_coefficient(int n, int k) {
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

inline double count_probability(double t, int n, int k) {
    const double plus = 0.5 * (1.0 + t);
    return binomial_coefficient(n, k) * std::pow(plus, k) * std::pow(1.0 - plus, n - k);
}

inline Rational brute_witness_value(std::span<const int> k, std::span<const int> copies, const WitnessKind &w) {
    Rational value = 0;
    const auto *lin = std::get_if<LinearWitness>(&w);
    if (lin != nullptr) value = lin->constant;
    for (std::size_t j = 0; j < copies.size(); ++j) {
        const Rational tau(2 * k[j] - copies[j], copies[j]);
        value = value + (lin != nullptr ? lin->coefficients[j] * tau : tau * tau);
    }
    return value;
}

inline std::map<Rational, double> brute_force_pmf(std::span<const double> t, std::span<const int> copies,
                                                  const WitnessKind &w) {
    std::map<Rational, double> out;
    std::vector<int> k(copies.size(), 0);
    while (true) {
        double p = 1.0;
        for (std::size_t j = 0; j < copies.size(); ++j) p *= count_probability(t[j], copies[j], k[j]);
        out[brute_witness_value(k, copies, w)] += p;
        std::size_t j = 0;
        while (j < k.size() && k[j] == copies[j]) k[j++] = 0;
        if (j == k.size()) break;
        ++k[j];
    }
    return out;
}

/// Number of count vectors, prod (n_j + 1).
inline double count_vectors(std::span<const int> copies) {
    double c = 1.0;
    for (int n : copies) c *= n + 1;
    return c;
}

}  // namespace entcert::testing

#endif  // ENTCERT_TESTS_SUPPORT_BRUTE_FORCE_H

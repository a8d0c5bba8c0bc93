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

#include <stdexcept>

#include "entcert/outcome_lattice.h"

namespace entcert {
namespace {

std::vector<int> copies_of(std::span<const CorrelationSetting> settings) {
    std::vector<int> copies;
    copies.reserve(settings.size());
    for (const auto &s : settings) {
        s.validate();
        copies.push_back(s.copies);
    }
    return copies;
}

std::vector<double> correlations_of(std::span<const CorrelationSetting> settings) {
    std::vector<double> t;
    t.reserve(settings.size());
    for (const auto &s : settings) t.push_back(s.correlation);
    return t;
}

void check_length(std::span<const CorrelationSetting> settings, const WitnessKind &witness) {
    if (static_cast<int>(settings.size()) != setting_count(witness)) {
        throw std::domain_error("witness expects " + std::to_string(setting_count(witness)) + " settings, got " +
                                std::to_string(settings.size()));
    }
}

}  // namespace

LinearWitness LinearWitness::ghz(int settings) {
    if (settings < 1) throw std::domain_error("LinearWitness::ghz: need at least one setting");
    LinearWitness w;
    w.coefficients.assign(static_cast<std::size_t>(settings), Rational(-1));
    w.coefficients[0] = Rational(1);
    w.constant = Rational(1);
    return w;
}

int setting_count(const WitnessKind &witness) {
    if (const auto *lin = std::get_if<LinearWitness>(&witness)) {
        return static_cast<int>(lin->coefficients.size());
    }
    return std::get<QuadraticWitness>(witness).settings;
}

bool is_linear(const WitnessKind &witness) { return std::holds_alternative<LinearWitness>(witness); }

std::string witness_name(const WitnessKind &witness) { return is_linear(witness) ? "linear" : "quadratic"; }

void validate_witness(const WitnessKind &witness) {
    if (setting_count(witness) < 1) {
        throw std::domain_error(witness_name(witness) + " witness needs at least one setting");
    }
}

OutcomePmf linear_pmf(std::span<const CorrelationSetting> settings, const LinearWitness &witness) {
    return witness_pmf(settings, WitnessKind{witness});
}

OutcomePmf quadratic_pmf(std::span<const CorrelationSetting> settings) {
    return witness_pmf(settings, WitnessKind{QuadraticWitness{static_cast<int>(settings.size())}});
}

OutcomePmf witness_pmf(std::span<const CorrelationSetting> settings, const WitnessKind &witness) {
    validate_witness(witness);
    check_length(settings, witness);
    auto copies = copies_of(settings);
    OutcomeLattice lattice(witness, copies);
    return lattice.pmf(correlations_of(settings));
}

Moments witness_moments(std::span<const CorrelationSetting> settings, const WitnessKind &witness) {
    validate_witness(witness);
    check_length(settings, witness);
    Moments total{0.0, 0.0};
    if (const auto *lin = std::get_if<LinearWitness>(&witness)) {
        total.mean = lin->constant.to_double();
        for (std::size_t j = 0; j < settings.size(); ++j) {
            const double a = lin->coefficients[j].to_double();
            const auto m = tau_moments(settings[j]);
            total.mean += a * m.mean;
            total.variance += a * a * m.variance;
        }
        return total;
    }
    for (const auto &s : settings) {
        const auto m = tau_sq_moments(s);
        total.mean += m.mean;
        total.variance += m.variance;
    }
    return total;
}

double ideal_witness_value(std::span<const double> correlations, const WitnessKind &witness) {
    if (static_cast<int>(correlations.size()) != setting_count(witness)) {
        throw std::domain_error("ideal_witness_value: correlation count mismatch");
    }
    double value = 0.0;
    if (const auto *lin = std::get_if<LinearWitness>(&witness)) {
        value = lin->constant.to_double();
        for (std::size_t j = 0; j < correlations.size(); ++j) {
            value += lin->coefficients[j].to_double() * correlations[j];
        }
        return value;
    }
    for (double t : correlations) value += t * t;
    return value;
}

std::vector<CorrelationSetting> make_settings(std::span<const double> correlations, std::span<const int> copies) {
    if (correlations.size() != copies.size()) {
        throw std::domain_error("make_settings: " + std::to_string(correlations.size()) + " correlations but " +
                                std::to_string(copies.size()) + " copy counts");
    }
    std::vector<CorrelationSetting> settings;
    settings.reserve(copies.size());
    for (std::size_t j = 0; j < copies.size(); ++j) {
        CorrelationSetting s{correlations[j], copies[j]};
        s.validate();
        settings.push_back(s);
    }
    return settings;
}

}  // namespace entcert

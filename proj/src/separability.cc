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

#include "entcert/separability.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "entcert/errors.h"
#include "entcert/parallel.h"

namespace entcert {
namespace {

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

struct Candidate {
    std::vector<double> t;
    double objective = -1.0;
    bool converged = false;
};

// Strictly better objective, or a tie broken toward the lexicographically smaller vector.
bool better(const Candidate &a, const Candidate &b, double tie) {
    if (a.objective > b.objective + tie) return true;
    if (b.objective > a.objective + tie) return false;
    return std::lexicographical_compare(a.t.begin(), a.t.end(), b.t.begin(), b.t.end());
}

}  // namespace

SeparableConstraint SeparableConstraint::for_witness(const WitnessKind &witness) {
    validate_witness(witness);
    SeparableConstraint c;
    c.dimension_ = static_cast<std::size_t>(setting_count(witness));
    if (const auto *lin = std::get_if<LinearWitness>(&witness)) {
        c.quadratic_ = false;
        c.constant_ = lin->constant.to_double();
        double reach = c.constant_;
        for (const auto &a : lin->coefficients) {
            c.coefficients_.push_back(a.to_double());
            reach += std::abs(a.to_double());
        }
        if (reach < 0.0) {
            throw InfeasibleConstraintError("no correlations in [-1,1]^M keep the linear witness non-negative");
        }
    }
    return c;
}

double SeparableConstraint::margin(std::span<const double> t) const {
    if (quadratic_) {
        double s = 0.0;
        for (double v : t) s += v * v;
        return 1.0 - s;
    }
    double m = constant_;
    for (std::size_t j = 0; j < t.size(); ++j) m += coefficients_[j] * t[j];
    return m;
}

double SeparableConstraint::violation(std::span<const double> t) const {
    double v = std::max(0.0, -margin(t));
    for (double x : t) v += std::max(0.0, std::abs(x) - 1.0);
    return v;
}

bool SeparableConstraint::satisfied(std::span<const double> t, double tolerance) const {
    return t.size() == dimension_ && violation(t) <= tolerance;
}

std::vector<double> SeparableConstraint::project(std::span<const double> t) const {
    std::vector<double> out(t.size());
    if (quadratic_) {
        double norm2 = 0.0;
        for (std::size_t j = 0; j < t.size(); ++j) {
            out[j] = std::min(std::abs(t[j]), 1.0);
            norm2 += out[j] * out[j];
        }
        if (norm2 > 1.0) {
            const double scale = 1.0 / std::sqrt(norm2);
            norm2 = 0.0;
            for (auto &v : out) {
                v *= scale;
                norm2 += v * v;
            }
            // Rounding can leave |T|^2 a few ulps above 1.
            while (norm2 > 1.0) {
                norm2 = 0.0;
                for (auto &v : out) {
                    v = std::nextafter(v, 0.0);
                    norm2 += v * v;
                }
            }
        }
        return out;
    }

    for (std::size_t j = 0; j < t.size(); ++j) out[j] = clamp_unit(t[j]);
    if (margin(out) >= 0.0) return out;

    // Euclidean projection onto box and half-space: clamp(t + lambda a) with the
    // smallest lambda >= 0 that restores a.T + c >= 0.
    auto shifted = [&](double lambda) {
        std::vector<double> s(t.size());
        for (std::size_t j = 0; j < t.size(); ++j) s[j] = clamp_unit(t[j] + lambda * coefficients_[j]);
        return s;
    };
    double lo = 0.0;
    double hi = 1.0;
    while (margin(shifted(hi)) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e6) break;
    }
    for (int iter = 0; iter < 200 && hi - lo > 1e-16 * std::max(1.0, hi); ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (margin(shifted(mid)) >= 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    out = shifted(hi);
    if (margin(out) < 0.0) {
        // Only reachable when the feasible set is the single sign corner.
        for (std::size_t j = 0; j < out.size(); ++j) {
            if (coefficients_[j] != 0.0) out[j] = coefficients_[j] > 0.0 ? 1.0 : -1.0;
        }
    }
    return out;
}

std::vector<double> SeparableConstraint::sample(Xoshiro256 &rng) const {
    std::vector<double> t(dimension_);
    if (quadratic_) {
        // Uniform in the positive orthant of the unit ball.
        double norm2 = 0.0;
        for (auto &v : t) {
            v = std::abs(rng.normal());
            norm2 += v * v;
        }
        const double radius = std::pow(rng.uniform(), 1.0 / static_cast<double>(dimension_));
        const double scale = norm2 > 0.0 ? radius / std::sqrt(norm2) : 0.0;
        for (auto &v : t) v *= scale;
        return project(t);
    }
    for (int attempt = 0; attempt < 256; ++attempt) {
        for (auto &v : t) v = rng.uniform(-1.0, 1.0);
        if (margin(t) >= 0.0) return t;
    }
    return project(t);
}

std::vector<double> analytic_worst_case(const WitnessKind &witness, int settings) {
    if (settings < 1 || settings != setting_count(witness)) {
        throw std::domain_error("analytic_worst_case: setting count does not match the witness");
    }
    const double m = settings;
    if (const auto *lin = std::get_if<LinearWitness>(&witness)) {
        if (lin->constant != Rational(1)) {
            throw std::domain_error("analytic worst case needs a linear witness with constant 1");
        }
        std::vector<double> t;
        for (const auto &a : lin->coefficients) {
            if (a != Rational(1) && a != Rational(-1)) {
                throw std::domain_error("analytic worst case needs unit linear coefficients");
            }
            t.push_back(-a.to_double() / m);
        }
        return t;
    }
    return std::vector<double>(static_cast<std::size_t>(settings), 1.0 / std::sqrt(m));
}

std::optional<std::vector<double>> try_analytic_worst_case(const WitnessKind &witness) {
    try {
        return analytic_worst_case(witness, setting_count(witness));
    } catch (const std::domain_error &) {
        return std::nullopt;
    }
}

WorstCaseResult maximize_separable_mass(const OutcomeLattice &lattice, const WitnessKind &witness,
                                        std::span<const double> weights, const WorstCaseOptions &options,
                                        std::span<const std::vector<double>> seeds) {
    if (weights.size() != lattice.size()) {
        throw std::domain_error("maximize_separable_mass: weights do not match the outcome grid");
    }
    const auto constraint = SeparableConstraint::for_witness(witness);
    const std::size_t dim = constraint.dimension();
    if (dim != lattice.settings()) throw std::domain_error("maximize_separable_mass: lattice/witness mismatch");

    auto mass_at = [&](std::span<const double> t) {
        thread_local std::vector<double> probs;
        lattice.evaluate(t, probs);
        double m = 0.0;
        for (std::size_t i = 0; i < probs.size(); ++i) m += weights[i] * probs[i];
        return m;
    };
    auto objective = [&](std::span<const double> x) {
        auto t = constraint.project(x);
        double dist2 = 0.0;
        for (std::size_t j = 0; j < dim; ++j) dist2 += (x[j] - t[j]) * (x[j] - t[j]);
        return -mass_at(t) + options.penalty * dist2;
    };
    auto polish = [&](std::vector<double> start) {
        auto nm = optim::nelder_mead(objective, std::move(start), options.simplex);
        Candidate c;
        c.t = constraint.project(nm.x);
        c.objective = mass_at(c.t);
        c.converged = nm.converged;
        return c;
    };

    std::vector<std::vector<double>> starts;
    for (const auto &s : seeds) {
        if (s.size() == dim) starts.push_back(constraint.project(s));
    }
    const std::size_t seeded = starts.size();
    const int restarts = std::max(1, options.restarts);
    for (int r = 0; r < restarts; ++r) {
        Xoshiro256 rng(derive_seed(options.seed, static_cast<std::uint64_t>(r)));
        starts.push_back(constraint.sample(rng));
    }

    std::vector<Candidate> candidates(starts.size());
    parallel_for(starts.size(), options.workers, [&](std::size_t i) { candidates[i] = polish(starts[i]); });

    Candidate best = candidates.front();
    for (const auto &c : candidates) {
        if (better(c, best, options.tie_tolerance)) best = c;
    }

    if (options.anneal) {
        Xoshiro256 rng(derive_seed(options.seed, 0xa11ea1ULL));
        auto sa = optim::simulated_annealing(objective, best.t, rng, options.annealing);
        Candidate refined = polish(sa.x);
        if (refined.objective > best.objective + options.tie_tolerance) best = refined;
    }

    // Final tie-break among everything within tolerance of the best objective.
    for (const auto &c : candidates) {
        if (c.objective >= best.objective - options.tie_tolerance && better(c, best, options.tie_tolerance)) best = c;
    }

    WorstCaseResult result;
    result.correlations = best.t;
    result.objective = mass_at(best.t);
    result.distribution = lattice.pmf(best.t);
    result.restarts_used = static_cast<int>(starts.size() - seeded);
    result.converged = best.converged;
    return result;
}

WorstCaseResult worst_case_acc(const WitnessKind &witness, std::span<const int> copies, const AcceptanceSet &acc,
                               const WorstCaseOptions &options) {
    OutcomeLattice lattice(witness, copies);
    acc.check_on_grid(lattice.outcomes());
    const auto weights = acc.weights(lattice.outcomes());
    std::vector<std::vector<double>> seeds;
    bool equal = std::adjacent_find(copies.begin(), copies.end(), std::not_equal_to<>()) == copies.end();
    if (equal) {
        if (auto analytic = try_analytic_worst_case(witness)) seeds.push_back(*analytic);
    }
    return maximize_separable_mass(lattice, witness, weights, options, seeds);
}

WorstCaseResult worst_case_pointwise(const WitnessKind &witness, std::span<const int> copies, const Rational &outcome,
                                     const WorstCaseOptions &options) {
    OutcomeLattice lattice(witness, copies);
    auto index = lattice.index_of(outcome);
    if (!index) throw std::domain_error("outcome " + outcome.str() + " is not on the outcome grid");
    std::vector<double> weights(lattice.size(), 0.0);
    weights[*index] = 1.0;
    return maximize_separable_mass(lattice, witness, weights, options);
}

}  // namespace entcert

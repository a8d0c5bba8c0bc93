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

#include "entcert/acceptance_search.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "entcert/outcome_lattice.h"

namespace entcert {
namespace {

constexpr double kMassSlack = 1e-12;

// Separable points seen so far together with their outcome distributions.
struct PointLibrary {
    std::vector<std::vector<double>> points;
    std::vector<std::vector<double>> probabilities;

    void add(const OutcomeLattice &lattice, std::vector<double> t) {
        probabilities.push_back(lattice.evaluate(t));
        points.push_back(std::move(t));
    }

    // Largest mass any known point puts on the accepted indices.
    double lower_bound(std::span<const std::size_t> accepted) const {
        double best = 0.0;
        for (const auto &probs : probabilities) {
            double m = 0.0;
            for (std::size_t i : accepted) m += probs[i];
            best = std::max(best, m);
        }
        return best;
    }
};

std::vector<double> aligned_probabilities(const OutcomeLattice &lattice, const OutcomePmf &pmf) {
    std::vector<double> out(lattice.size(), 0.0);
    for (const auto &e : pmf) {
        if (e.probability <= 0.0) continue;
        auto idx = lattice.index_of(e.outcome);
        if (!idx) throw std::domain_error("entangled pmf has outcome " + e.outcome.str() + " off the witness grid");
        out[*idx] = e.probability;
    }
    return out;
}

bool equal_copies(std::span<const int> copies) {
    return std::adjacent_find(copies.begin(), copies.end(), std::not_equal_to<>()) == copies.end();
}

void seed_library(PointLibrary &library, const OutcomeLattice &lattice, const WitnessKind &witness,
                  std::span<const int> copies) {
    if (equal_copies(copies)) {
        if (auto analytic = try_analytic_worst_case(witness)) library.add(lattice, *analytic);
    }
}

WorstCaseResult optimize_set(const OutcomeLattice &lattice, const WitnessKind &witness,
                             std::span<const std::size_t> accepted, const PointLibrary &library,
                             const WorstCaseOptions &options) {
    std::vector<double> weights(lattice.size(), 0.0);
    for (std::size_t i : accepted) weights[i] = 1.0;
    return maximize_separable_mass(lattice, witness, weights, options, library.points);
}

AcceptanceSet explicit_from(const OutcomeLattice &lattice, std::span<const std::size_t> accepted) {
    std::vector<Rational> outcomes;
    for (std::size_t i : accepted) outcomes.push_back(lattice.outcomes()[i]);
    return AcceptanceSet::explicit_set(std::move(outcomes));
}

WorstCaseResult empty_result(const OutcomeLattice &lattice, const WitnessKind &witness) {
    WorstCaseResult r;
    r.correlations = std::vector<double>(lattice.settings(), 0.0);
    if (auto analytic = try_analytic_worst_case(witness)) {
        if (analytic->size() == lattice.settings()) r.correlations = *analytic;
    }
    r.objective = 0.0;
    r.distribution = lattice.pmf(r.correlations);
    return r;
}

}  // namespace

FrequentistDesign frequentist_design(const WitnessKind &witness, std::span<const int> copies,
                                     const OutcomePmf &ent_pmf, double alpha, const WorstCaseOptions &options) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("frequentist_design: alpha must lie in [0, 1]");
    OutcomeLattice lattice(witness, copies);
    const auto ent = aligned_probabilities(lattice, ent_pmf);

    // Candidate outcomes in ascending entangled mass (removal order).
    std::vector<std::size_t> items;
    for (std::size_t i = 0; i < ent.size(); ++i) {
        if (ent[i] > 0.0) items.push_back(i);
    }
    std::stable_sort(items.begin(), items.end(), [&](std::size_t a, std::size_t b) { return ent[a] < ent[b]; });

    PointLibrary library;
    seed_library(library, lattice, witness, copies);

    FrequentistDesign design;
    auto finish = [&](std::vector<std::size_t> accepted, WorstCaseResult worst) {
        std::sort(accepted.begin(), accepted.end());
        design.acceptance = explicit_from(lattice, accepted);
        design.power = 0.0;
        for (std::size_t i : accepted) design.power += ent[i];
        design.worst_case = std::move(worst);
        design.feasible = !accepted.empty();
        return design;
    };

    if (items.size() <= kExhaustiveSearchLimit) {
        // Removal sets in ascending removed mass, i.e. accepted sets in
        // descending power. Each node is (mask, last); its successors append
        // the next item or replace the last one with it.
        struct Node {
            double removed;
            std::uint32_t mask;
            int last;
        };
        auto worse = [](const Node &a, const Node &b) {
            if (a.removed != b.removed) return a.removed > b.removed;
            return a.mask > b.mask;
        };
        std::priority_queue<Node, std::vector<Node>, decltype(worse)> heap(worse);
        heap.push(Node{0.0, 0u, -1});
        const int count = static_cast<int>(items.size());
        std::vector<std::size_t> accepted;
        while (!heap.empty()) {
            const Node node = heap.top();
            heap.pop();
            const int next = node.last + 1;
            if (next < count) {
                heap.push(Node{node.removed + ent[items[next]], node.mask | (1u << next), next});
                if (node.last >= 0) {
                    heap.push(Node{node.removed - ent[items[node.last]] + ent[items[next]],
                                   (node.mask & ~(1u << node.last)) | (1u << next), next});
                }
            }
            accepted.clear();
            for (int k = 0; k < count; ++k) {
                if (!(node.mask & (1u << k))) accepted.push_back(items[k]);
            }
            if (accepted.empty()) return finish({}, empty_result(lattice, witness));
            if (library.lower_bound(accepted) > alpha + kMassSlack) continue;
            auto worst = optimize_set(lattice, witness, accepted, library, options);
            ++design.optimizations;
            if (worst.objective <= alpha + kMassSlack) return finish(accepted, std::move(worst));
            library.add(lattice, worst.correlations);
        }
        return finish({}, empty_result(lattice, witness));
    }

    // Greedy likelihood-ratio path: drop the outcome with the smallest
    // P(Q|ent)/P(Q|T*) until the worst case fits under alpha.
    design.exhaustive = false;
    std::vector<std::size_t> accepted = items;
    while (!accepted.empty()) {
        std::vector<double> witness_probs;
        double best_known = 0.0;
        for (const auto &probs : library.probabilities) {
            double m = 0.0;
            for (std::size_t i : accepted) m += probs[i];
            if (m > best_known) {
                best_known = m;
                witness_probs = probs;
            }
        }
        if (best_known <= alpha + kMassSlack) {
            auto worst = optimize_set(lattice, witness, accepted, library, options);
            ++design.optimizations;
            if (worst.objective <= alpha + kMassSlack) return finish(accepted, std::move(worst));
            library.add(lattice, worst.correlations);
            witness_probs = library.probabilities.back();
        }
        auto drop = std::min_element(accepted.begin(), accepted.end(), [&](std::size_t a, std::size_t b) {
            // ent[a]/p[a] < ent[b]/p[b] without dividing by zero.
            const double lhs = ent[a] * witness_probs[b];
            const double rhs = ent[b] * witness_probs[a];
            if (lhs != rhs) return lhs < rhs;
            return a < b;
        });
        accepted.erase(drop);
    }
    return finish({}, empty_result(lattice, witness));
}

BayesianDesign bayesian_design(const WitnessKind &witness, std::span<const int> copies, const OutcomePmf &ent_pmf,
                               const PriorPair &priors, double q_b, const WorstCaseOptions &options,
                               bool full_posteriors) {
    priors.validate();
    if (!(q_b >= 0.0 && q_b <= 1.0)) throw std::domain_error("bayesian_design: q_B must lie in [0, 1]");
    OutcomeLattice lattice(witness, copies);
    const auto ent = aligned_probabilities(lattice, ent_pmf);
    const auto &grid = lattice.outcomes();

    BayesianDesign design;
    std::vector<Rational> targets;
    if (full_posteriors) {
        targets = grid;
    } else {
        PointLibrary library;
        seed_library(library, lattice, witness, copies);
        const auto constraint = SeparableConstraint::for_witness(witness);
        for (int k = 0; k < 64; ++k) {
            Xoshiro256 rng(derive_seed(options.seed, 0x5c0000ULL + static_cast<std::uint64_t>(k)));
            library.add(lattice, constraint.sample(rng));
        }
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const std::size_t one[] = {i};
            const double lb = library.lower_bound(one);
            const double e = ent[i] * priors.entangled;
            const double upper = e > 0.0 ? e / (lb * priors.separable() + e) : 0.0;
            if (upper < q_b) {
                design.screened.push_back(grid[i]);
            } else {
                targets.push_back(grid[i]);
            }
        }
    }

    if (!targets.empty()) {
        const auto bounds = pointwise_worst_case(witness, copies, options, targets);
        design.posteriors = posterior_map(ent_pmf, bounds, priors);
    }
    design.acceptance = bayes_acceptance(q_b, design.posteriors);
    const auto accepted = design.acceptance.resolve(grid);
    if (accepted.empty()) {
        design.worst_case = empty_result(lattice, witness);
    } else {
        std::vector<std::size_t> idx;
        for (const auto &q : accepted) idx.push_back(*lattice.index_of(q));
        PointLibrary library;
        seed_library(library, lattice, witness, copies);
        design.worst_case = optimize_set(lattice, witness, idx, library, options);
    }
    design.acceptance_level = acceptance_level(design.acceptance, design.posteriors);
    design.power = power(design.acceptance, ent_pmf);
    design.expected_loss = expected_loss(design.acceptance, q_b, priors, design.worst_case.objective, ent_pmf);
    return design;
}

}  // namespace entcert

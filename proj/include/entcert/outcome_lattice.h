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

#ifndef ENTCERT_OUTCOME_LATTICE_H
#define ENTCERT_OUTCOME_LATTICE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "entcert/outcome_pmf.h"
#include "entcert/rational.h"
#include "entcert/witness.h"

namespace entcert {

/// Precomputed convolution structure of a witness for a fixed copy allocation.
///
/// The outcome grid and the index tables of every pairwise convolution stage
/// depend only on the witness and the copy counts. Evaluating the distribution
/// for a new correlation vector then needs only floating-point work, which is
/// what the worst-case optimizers call in their inner loop.
class OutcomeLattice {
   public:
    OutcomeLattice(const WitnessKind &witness, std::span<const int> copies);

    std::size_t settings() const { return copies_.size(); }
    const std::vector<int> &copies() const { return copies_; }
    /// Sorted final outcome grid.
    const std::vector<Rational> &outcomes() const { return stages_.back().grid; }
    std::size_t size() const { return outcomes().size(); }
    std::optional<std::size_t> index_of(const Rational &outcome) const;

    /// Probabilities aligned with outcomes(). `out` is resized as needed.
    void evaluate(std::span<const double> correlations, std::vector<double> &out) const;
    std::vector<double> evaluate(std::span<const double> correlations) const;
    OutcomePmf pmf(std::span<const double> correlations) const;

   private:
    struct Stage {
        std::vector<Rational> grid;  // grid after this stage
        // Per-setting local values and the map from n+ to the local index.
        std::vector<Rational> local_values;
        std::vector<std::uint32_t> plus_to_local;
        // next index for (previous index, local index), row-major over local.
        std::vector<std::uint32_t> table;
    };

    std::vector<int> copies_;
    Rational offset_;
    std::vector<Stage> stages_;  // stage 0 holds only the initial grid {offset}
};

}  // namespace entcert

#endif  // ENTCERT_OUTCOME_LATTICE_H

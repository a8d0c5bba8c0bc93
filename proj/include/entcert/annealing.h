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

#ifndef ENTCERT_ANNEALING_H
#define ENTCERT_ANNEALING_H

#include <vector>

#include "entcert/nelder_mead.h"
#include "entcert/random.h"

namespace entcert::optim {

struct AnnealingOptions {
    double initial_temperature = 1e-2;
    double cooling = 0.95;  // geometric factor per temperature level
    int levels = 200;
    int moves_per_level = 20;
    double initial_step = 0.2;  // Gaussian proposal scale, shrinks with sqrt(T/T0)
};

struct AnnealingResult {
    std::vector<double> x;  // best point visited
    double value = 0.0;
    int evaluations = 0;
};

/// Metropolis simulated annealing minimizing `f` with geometric cooling.
AnnealingResult simulated_annealing(const Objective &f, std::vector<double> start, Xoshiro256 &rng,
                                    const AnnealingOptions &options = {});

}  // namespace entcert::optim

#endif  // ENTCERT_ANNEALING_H

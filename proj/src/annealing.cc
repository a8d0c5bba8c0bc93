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

#include "entcert/annealing.h"

#include <cmath>
#include <stdexcept>

namespace entcert::optim {

AnnealingResult simulated_annealing(const Objective &f, std::vector<double> start, Xoshiro256 &rng,
                                    const AnnealingOptions &options) {
    if (start.empty()) throw std::invalid_argument("simulated_annealing: empty start point");
    if (!(options.cooling > 0.0 && options.cooling < 1.0)) {
        throw std::invalid_argument("simulated_annealing: cooling factor must lie in (0, 1)");
    }
    AnnealingResult result;
    std::vector<double> current = std::move(start);
    double current_value = f(current);
    result.evaluations = 1;
    result.x = current;
    result.value = current_value;

    std::vector<double> proposal(current.size());
    double temperature = options.initial_temperature;
    for (int level = 0; level < options.levels; ++level) {
        const double scale = options.initial_step * std::sqrt(temperature / options.initial_temperature);
        for (int move = 0; move < options.moves_per_level; ++move) {
            for (std::size_t k = 0; k < current.size(); ++k) proposal[k] = current[k] + scale * rng.normal();
            const double value = f(proposal);
            ++result.evaluations;
            const double delta = value - current_value;
            if (delta <= 0.0 || rng.uniform() < std::exp(-delta / temperature)) {
                current.swap(proposal);
                current_value = value;
                if (current_value < result.value) {
                    result.value = current_value;
                    result.x = current;
                }
            }
        }
        temperature *= options.cooling;
    }
    return result;
}

}  // namespace entcert::optim

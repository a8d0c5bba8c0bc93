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

#include "entcert/nelder_mead.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace entcert::optim {

NelderMeadResult nelder_mead(const Objective &f, std::vector<double> start, const NelderMeadOptions &options) {
    const std::size_t dim = start.size();
    if (dim == 0) throw std::invalid_argument("nelder_mead: empty start point");

    std::vector<std::vector<double>> simplex(dim + 1, start);
    for (std::size_t i = 0; i < dim; ++i) {
        double step = options.initial_step;
        // Step inward when the start sits near the upper end of the unit box.
        if (simplex[i + 1][i] + step > 1.0) step = -step;
        simplex[i + 1][i] += step;
    }

    NelderMeadResult result;
    auto eval = [&](const std::vector<double> &x) {
        ++result.evaluations;
        return f(x);
    };
    std::vector<double> values(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) values[i] = eval(simplex[i]);

    std::vector<std::size_t> order(dim + 1);
    std::vector<double> centroid(dim), trial(dim), trial2(dim);
    auto along = [&](double t, std::vector<double> &out) {
        const auto &worst = simplex[order.back()];
        for (std::size_t k = 0; k < dim; ++k) out[k] = centroid[k] + t * (worst[k] - centroid[k]);
    };

    while (true) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

        const double f_spread = std::abs(values[order.back()] - values[order.front()]);
        double x_spread = 0.0;
        for (std::size_t i = 1; i <= dim; ++i) {
            for (std::size_t k = 0; k < dim; ++k) {
                x_spread = std::max(x_spread, std::abs(simplex[order[i]][k] - simplex[order[0]][k]));
            }
        }
        if (f_spread <= options.f_tolerance && x_spread <= options.x_tolerance) {
            result.converged = true;
            break;
        }
        if (result.evaluations >= options.max_evaluations) break;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[order[i]][k];
        }
        for (auto &c : centroid) c /= static_cast<double>(dim);

        const std::size_t worst = order.back();
        const double best_value = values[order.front()];
        const double second_worst_value = values[order[dim - 1]];

        along(-1.0, trial);
        const double reflected = eval(trial);
        if (reflected < best_value) {
            along(-2.0, trial2);
            const double expanded = eval(trial2);
            if (expanded < reflected) {
                simplex[worst] = trial2;
                values[worst] = expanded;
            } else {
                simplex[worst] = trial;
                values[worst] = reflected;
            }
            continue;
        }
        if (reflected < second_worst_value) {
            simplex[worst] = trial;
            values[worst] = reflected;
            continue;
        }
        const bool outside = reflected < values[worst];
        along(outside ? -0.5 : 0.5, trial2);
        const double contracted = eval(trial2);
        if (contracted < (outside ? reflected : values[worst])) {
            simplex[worst] = trial2;
            values[worst] = contracted;
            continue;
        }
        const auto &best = simplex[order.front()];
        for (std::size_t i = 1; i <= dim; ++i) {
            auto &v = simplex[order[i]];
            for (std::size_t k = 0; k < dim; ++k) v[k] = best[k] + 0.5 * (v[k] - best[k]);
            values[order[i]] = eval(v);
        }
    }

    const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
    result.x = simplex[best];
    result.value = values[best];
    return result;
}

}  // namespace entcert::optim

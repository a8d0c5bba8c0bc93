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

#ifndef ENTCERT_NELDER_MEAD_H
#define ENTCERT_NELDER_MEAD_H

#include <functional>
#include <span>
#include <vector>

namespace entcert::optim {

using Objective = std::function<double(std::span<const double>)>;

struct NelderMeadOptions {
    double initial_step = 0.1;
    double x_tolerance = 1e-9;
    double f_tolerance = 1e-13;
    int max_evaluations = 20000;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
    bool converged = false;
};

/// Minimizes `f` with the standard reflection/expansion/contraction/shrink
/// simplex moves (coefficients 1, 2, 1/2, 1/2). Converged when both the
/// simplex diameter and the spread of function values are within tolerance.
NelderMeadResult nelder_mead(const Objective &f, std::vector<double> start, const NelderMeadOptions &options = {});

}  // namespace entcert::optim

#endif  // ENTCERT_NELDER_MEAD_H

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

// JSON run configurations. Every object is checked against its allowed keys;
// anything unknown or mistyped raises SchemaError.

#ifndef ENTCERT_CLI_CONFIG_H
#define ENTCERT_CLI_CONFIG_H

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "entcert/acceptance_set.h"
#include "entcert/planner.h"
#include "entcert/rational.h"
#include "entcert/separability.h"
#include "entcert/state_models.h"
#include "entcert/witness.h"
#include "json.hpp"

namespace entcert::cli {

using Json = nlohmann::json;

class SchemaError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Typed access to one JSON object with a closed set of keys.
class ObjectReader {
   public:
    ObjectReader(const Json &object, std::string path, std::initializer_list<const char *> allowed);

    bool has(const char *key) const;
    const Json &raw(const char *key) const;
    ObjectReader object(const char *key, std::initializer_list<const char *> allowed) const;

    double number(const char *key) const;
    double number_or(const char *key, double fallback) const;
    std::int64_t integer(const char *key) const;
    std::int64_t integer_or(const char *key, std::int64_t fallback) const;
    std::uint64_t unsigned_or(const char *key, std::uint64_t fallback) const;
    bool boolean_or(const char *key, bool fallback) const;
    std::string string(const char *key) const;
    std::string string_or(const char *key, const std::string &fallback) const;
    Rational rational(const char *key) const;
    std::vector<double> numbers(const char *key) const;
    std::vector<int> integers(const char *key) const;
    std::vector<Rational> rationals(const char *key) const;

    const std::string &path() const { return path_; }

   private:
    std::string where(const char *key) const;

    const Json &object_;
    std::string path_;
};

/// Accepts an integer, a decimal, or a "p/q" string.
Rational parse_rational(const Json &value, const std::string &where);

/// {"kind": "linear"|"quadratic", "settings": M, "coefficients": [...], "constant": c}
WitnessKind parse_witness(const ObjectReader &root);

/// "copies": [n_1, ...] or a single n repeated for every setting.
std::vector<int> parse_copies(const ObjectReader &root, int settings);

/// {"at_most": C} | {"at_least": B} | {"outcomes": [...]}, optional "boundary" and "gamma".
AcceptanceSet parse_acceptance(const ObjectReader &acceptance);

/// {"purity": p} or {"mixture": {"mean", "stddev", "lower", "step"}}.
EntangledModel parse_entangled(const ObjectReader &entangled);

/// {"entangled": P_ent} or {"qubits": N} for the natural prior.
PriorPair parse_priors(const ObjectReader &priors);

/// {"restarts", "seed", "anneal", "penalty", "tie_tolerance", "max_evaluations"}
WorstCaseOptions parse_worst_case_options(const ObjectReader &root, std::optional<std::uint64_t> seed_override,
                                          int workers);

}  // namespace entcert::cli

#endif  // ENTCERT_CLI_CONFIG_H

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

#include "entcert/cli/config.h"

#include <cmath>
#include <limits>

namespace entcert::cli {
namespace {

const Json &null_json() {
    static const Json kNull;
    return kNull;
}

}  // namespace

ObjectReader::ObjectReader(const Json &object, std::string path, std::initializer_list<const char *> allowed)
    : object_(object), path_(std::move(path)) {
    if (!object_.is_object()) throw SchemaError(path_ + ": expected an object");
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto &[key, value] : object_.items()) {
        if (!keys.count(key)) throw SchemaError(path_ + ": unknown field '" + key + "'");
    }
}

std::string ObjectReader::where(const char *key) const { return path_ + "." + key; }

bool ObjectReader::has(const char *key) const { return object_.contains(key) && !object_.at(key).is_null(); }

const Json &ObjectReader::raw(const char *key) const {
    if (!has(key)) throw SchemaError(where(key) + ": required field is missing");
    return object_.at(key);
}

ObjectReader ObjectReader::object(const char *key, std::initializer_list<const char *> allowed) const {
    return ObjectReader(has(key) ? object_.at(key) : null_json(), where(key), allowed);
}

double ObjectReader::number(const char *key) const {
    const auto &v = raw(key);
    if (!v.is_number()) throw SchemaError(where(key) + ": expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw SchemaError(where(key) + ": expected a finite number");
    return d;
}

double ObjectReader::number_or(const char *key, double fallback) const { return has(key) ? number(key) : fallback; }

std::int64_t ObjectReader::integer(const char *key) const {
    const auto &v = raw(key);
    if (!v.is_number_integer()) throw SchemaError(where(key) + ": expected an integer");
    return v.get<std::int64_t>();
}

std::int64_t ObjectReader::integer_or(const char *key, std::int64_t fallback) const {
    return has(key) ? integer(key) : fallback;
}

std::uint64_t ObjectReader::unsigned_or(const char *key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    const auto &v = raw(key);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
    throw SchemaError(where(key) + ": expected a non-negative integer");
}

bool ObjectReader::boolean_or(const char *key, bool fallback) const {
    if (!has(key)) return fallback;
    const auto &v = raw(key);
    if (!v.is_boolean()) throw SchemaError(where(key) + ": expected true or false");
    return v.get<bool>();
}

std::string ObjectReader::string(const char *key) const {
    const auto &v = raw(key);
    if (!v.is_string()) throw SchemaError(where(key) + ": expected a string");
    return v.get<std::string>();
}

std::string ObjectReader::string_or(const char *key, const std::string &fallback) const {
    return has(key) ? string(key) : fallback;
}

Rational ObjectReader::rational(const char *key) const { return parse_rational(raw(key), where(key)); }

std::vector<double> ObjectReader::numbers(const char *key) const {
    const auto &v = raw(key);
    if (!v.is_array()) throw SchemaError(where(key) + ": expected an array of numbers");
    std::vector<double> out;
    for (const auto &e : v) {
        if (!e.is_number()) throw SchemaError(where(key) + ": expected an array of numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

std::vector<int> ObjectReader::integers(const char *key) const {
    const auto &v = raw(key);
    if (!v.is_array()) throw SchemaError(where(key) + ": expected an array of integers");
    std::vector<int> out;
    for (const auto &e : v) {
        if (!e.is_number_integer()) throw SchemaError(where(key) + ": expected an array of integers");
        const auto i = e.get<std::int64_t>();
        if (i < std::numeric_limits<int>::min() || i > std::numeric_limits<int>::max()) {
            throw SchemaError(where(key) + ": integer out of range");
        }
        out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<Rational> ObjectReader::rationals(const char *key) const {
    const auto &v = raw(key);
    if (!v.is_array()) throw SchemaError(where(key) + ": expected an array of outcomes");
    std::vector<Rational> out;
    for (const auto &e : v) out.push_back(parse_rational(e, where(key)));
    return out;
}

Rational parse_rational(const Json &value, const std::string &where) {
    try {
        if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
        if (value.is_number_float()) return Rational::from_double(value.get<double>());
        if (value.is_string()) return Rational::parse(value.get<std::string>());
    } catch (const std::exception &e) {
        throw SchemaError(where + ": " + e.what());
    }
    throw SchemaError(where + ": expected a number or a \"p/q\" string");
}

WitnessKind parse_witness(const ObjectReader &root) {
    const auto w = root.object("witness", {"kind", "settings", "coefficients", "constant"});
    const auto kind = w.string("kind");
    const auto settings = w.integer("settings");
    if (settings < 1 || settings > 64) throw SchemaError(w.path() + ".settings: must lie in [1, 64]");
    const int m = static_cast<int>(settings);
    if (kind == "quadratic") {
        if (w.has("coefficients") || w.has("constant")) {
            throw SchemaError(w.path() + ": the quadratic witness takes no coefficients");
        }
        return QuadraticWitness{m};
    }
    if (kind != "linear") throw SchemaError(w.path() + ".kind: expected \"linear\" or \"quadratic\"");
    auto linear = LinearWitness::ghz(m);
    if (w.has("coefficients")) {
        linear.coefficients = w.rationals("coefficients");
        if (static_cast<int>(linear.coefficients.size()) != m) {
            throw SchemaError(w.path() + ".coefficients: length must equal settings");
        }
    }
    if (w.has("constant")) linear.constant = w.rational("constant");
    return linear;
}

std::vector<int> parse_copies(const ObjectReader &root, int settings) {
    std::vector<int> copies;
    const auto &raw = root.raw("copies");
    if (raw.is_number_integer()) {
        copies.assign(static_cast<std::size_t>(settings), static_cast<int>(root.integer("copies")));
    } else {
        copies = root.integers("copies");
    }
    if (static_cast<int>(copies.size()) != settings) {
        throw SchemaError(root.path() + ".copies: length must equal the number of settings");
    }
    for (int n : copies) {
        if (n < 1) throw SchemaError(root.path() + ".copies: every entry must be positive");
    }
    return copies;
}

AcceptanceSet parse_acceptance(const ObjectReader &acc) {
    const int forms = int(acc.has("at_most")) + int(acc.has("at_least")) + int(acc.has("outcomes"));
    if (forms != 1) {
        throw SchemaError(acc.path() + ": give exactly one of \"at_most\", \"at_least\", \"outcomes\"");
    }
    AcceptanceSet set;
    if (acc.has("at_most")) {
        set = AcceptanceSet::accept_at_most(acc.rational("at_most"));
    } else if (acc.has("at_least")) {
        set = AcceptanceSet::accept_at_least(acc.rational("at_least"));
    } else {
        set = AcceptanceSet::explicit_set(acc.rationals("outcomes"));
    }
    if (acc.has("boundary") != acc.has("gamma")) {
        throw SchemaError(acc.path() + ": \"boundary\" and \"gamma\" go together");
    }
    if (acc.has("boundary")) {
        try {
            set = set.with_boundary(acc.rational("boundary"), acc.number("gamma"));
        } catch (const std::domain_error &e) {
            throw SchemaError(acc.path() + ": " + e.what());
        }
    }
    return set;
}

EntangledModel parse_entangled(const ObjectReader &ent) {
    EntangledModel model;
    if (ent.has("purity") == ent.has("mixture")) {
        throw SchemaError(ent.path() + ": give exactly one of \"purity\" and \"mixture\"");
    }
    if (ent.has("purity")) {
        model.kind = EntangledModel::Kind::kFixedPurity;
        model.purity = ent.number("purity");
        if (!(model.purity >= 0.0 && model.purity <= 1.0)) throw SchemaError(ent.path() + ".purity: must lie in [0, 1]");
        return model;
    }
    const auto mix = ent.object("mixture", {"mean", "stddev", "lower", "step"});
    model.kind = EntangledModel::Kind::kMixture;
    model.prior.mean = mix.number_or("mean", model.prior.mean);
    model.prior.stddev = mix.number_or("stddev", model.prior.stddev);
    model.prior.lower = mix.number_or("lower", model.prior.lower);
    model.step = mix.number_or("step", model.step);
    try {
        model.prior.validate();
    } catch (const std::domain_error &e) {
        throw SchemaError(mix.path() + ": " + e.what());
    }
    if (!(model.step > 0.0 && model.step <= 1.0)) throw SchemaError(mix.path() + ".step: must lie in (0, 1]");
    return model;
}

PriorPair parse_priors(const ObjectReader &priors) {
    if (priors.has("entangled") == priors.has("qubits")) {
        throw SchemaError(priors.path() + ": give exactly one of \"entangled\" and \"qubits\"");
    }
    PriorPair pair;
    if (priors.has("qubits")) {
        const auto n = priors.integer("qubits");
        if (n < 2 || n > 62) throw SchemaError(priors.path() + ".qubits: must lie in [2, 62]");
        return natural_prior(static_cast<int>(n));
    }
    pair.entangled = priors.number("entangled");
    if (!(pair.entangled >= 0.0 && pair.entangled <= 1.0)) {
        throw SchemaError(priors.path() + ".entangled: must lie in [0, 1]");
    }
    return pair;
}

WorstCaseOptions parse_worst_case_options(const ObjectReader &root, std::optional<std::uint64_t> seed_override,
                                          int workers) {
    WorstCaseOptions options;
    if (root.has("optimizer")) {
        const auto o = root.object("optimizer",
                                   {"restarts", "seed", "anneal", "penalty", "tie_tolerance", "max_evaluations"});
        options.restarts = static_cast<int>(o.integer_or("restarts", options.restarts));
        options.seed = o.unsigned_or("seed", options.seed);
        options.anneal = o.boolean_or("anneal", options.anneal);
        options.penalty = o.number_or("penalty", options.penalty);
        options.tie_tolerance = o.number_or("tie_tolerance", options.tie_tolerance);
        options.simplex.max_evaluations =
            static_cast<int>(o.integer_or("max_evaluations", options.simplex.max_evaluations));
        if (options.restarts < 1) throw SchemaError(o.path() + ".restarts: must be positive");
        if (options.simplex.max_evaluations < 1) throw SchemaError(o.path() + ".max_evaluations: must be positive");
        if (!(options.penalty > 0.0)) throw SchemaError(o.path() + ".penalty: must be positive");
        if (!(options.tie_tolerance >= 0.0)) throw SchemaError(o.path() + ".tie_tolerance: must be non-negative");
    }
    if (seed_override) options.seed = *seed_override;
    options.workers = std::max(1, workers);
    return options;
}

}  // namespace entcert::cli

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

#include "entcert/cli/report_schema.h"

#include <cmath>
#include <functional>

#include "entcert/rational.h"

namespace entcert::cli {
namespace {

using Json = nlohmann::json;

enum class Type { kNumber, kInteger, kBool, kString, kOutcome, kArray, kObject, kNumberOrNull, kOutcomeOrNull };

struct Field {
    const char *name;
    Type type;
    std::function<void(const Json &, const std::string &, std::vector<std::string> &)> nested = nullptr;
};

using Check = std::function<void(const Json &, const std::string &, std::vector<std::string> &)>;

bool is_outcome(const Json &v) {
    if (!v.is_string()) return false;
    try {
        Rational::parse(v.get<std::string>());
        return true;
    } catch (const std::exception &) {
        return false;
    }
}

bool matches(const Json &v, Type type) {
    switch (type) {
        case Type::kNumber:
            return v.is_number() && std::isfinite(v.get<double>());
        case Type::kInteger:
            return v.is_number_integer();
        case Type::kBool:
            return v.is_boolean();
        case Type::kString:
            return v.is_string();
        case Type::kOutcome:
            return is_outcome(v);
        case Type::kArray:
            return v.is_array();
        case Type::kObject:
            return v.is_object();
        case Type::kNumberOrNull:
            return v.is_null() || (v.is_number() && std::isfinite(v.get<double>()));
        case Type::kOutcomeOrNull:
            return v.is_null() || is_outcome(v);
    }
    return false;
}

void check_fields(const Json &j, const std::string &path, const std::vector<Field> &fields,
                  std::vector<std::string> &errors) {
    if (!j.is_object()) {
        errors.push_back(path + ": expected an object");
        return;
    }
    for (const auto &f : fields) {
        const std::string where = path + "." + f.name;
        if (!j.contains(f.name)) {
            errors.push_back(where + ": missing");
            continue;
        }
        const auto &v = j.at(f.name);
        if (!matches(v, f.type)) {
            errors.push_back(where + ": wrong type");
            continue;
        }
        if (f.nested) f.nested(v, where, errors);
    }
}

Check each(Check item) {
    return [item](const Json &arr, const std::string &path, std::vector<std::string> &errors) {
        for (std::size_t i = 0; i < arr.size(); ++i) item(arr[i], path + "[" + std::to_string(i) + "]", errors);
    };
}

Check each_of(Type type) {
    return [type](const Json &arr, const std::string &path, std::vector<std::string> &errors) {
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (!matches(arr[i], type)) errors.push_back(path + "[" + std::to_string(i) + "]: wrong type");
        }
    };
}

Check object_of(std::vector<Field> fields) {
    return [fields](const Json &j, const std::string &path, std::vector<std::string> &errors) {
        check_fields(j, path, fields, errors);
    };
}

void check_probability(const Json &j, const char *key, const std::string &path, std::vector<std::string> &errors) {
    if (!j.contains(key) || !j.at(key).is_number()) return;
    const double v = j.at(key).get<double>();
    if (v < -1e-12 || v > 1.0 + 1e-12) errors.push_back(path + "." + key + ": outside [0, 1]");
}

Check pmf_rows(const char *mass_key) {
    return each([mass_key](const Json &row, const std::string &path, std::vector<std::string> &errors) {
        check_fields(row, path, {{"outcome", Type::kOutcome}, {"value", Type::kNumber}, {mass_key, Type::kNumber}},
                     errors);
        check_probability(row, mass_key, path, errors);
    });
}

const Check &witness_check() {
    static const Check kCheck = object_of({{"kind", Type::kString}, {"settings", Type::kInteger}});
    return kCheck;
}

const Check &acceptance_check() {
    static const Check kCheck = [](const Json &j, const std::string &path, std::vector<std::string> &errors) {
        check_fields(j, path,
                     {{"description", Type::kString},
                      {"kind", Type::kString},
                      {"outcomes", Type::kArray, each_of(Type::kOutcome)},
                      {"boundary", Type::kOutcomeOrNull},
                      {"gamma", Type::kNumber}},
                     errors);
        check_probability(j, "gamma", path, errors);
    };
    return kCheck;
}

const Check &worst_case_check() {
    static const Check kCheck = object_of({{"correlations", Type::kArray, each_of(Type::kNumber)},
                                           {"objective", Type::kNumber},
                                           {"restarts_used", Type::kInteger},
                                           {"converged", Type::kBool},
                                           {"distribution", Type::kArray, pmf_rows("probability")}});
    return kCheck;
}

Check framework_check() {
    return [](const Json &j, const std::string &path, std::vector<std::string> &errors) {
        check_fields(j, path,
                     {{"acceptance", Type::kObject, acceptance_check()},
                      {"confidence", Type::kNumber},
                      {"power", Type::kNumber},
                      {"acceptance_level", Type::kNumber},
                      {"expected_loss", Type::kNumber},
                      {"worst_case", Type::kObject, worst_case_check()}},
                     errors);
        for (const char *k : {"confidence", "power", "acceptance_level"}) check_probability(j, k, path, errors);
    };
}

Check plan_check() {
    return [](const Json &j, const std::string &path, std::vector<std::string> &errors) {
        check_fields(j, path,
                     {{"rank", Type::kInteger},
                      {"optimum", Type::kBool},
                      {"settings", Type::kInteger},
                      {"copies", Type::kArray, each_of(Type::kInteger)},
                      {"copies_used", Type::kInteger},
                      {"acceptance", Type::kObject, acceptance_check()},
                      {"confidence", Type::kNumber},
                      {"power", Type::kNumber},
                      {"expected_loss", Type::kNumber},
                      {"validity", Type::kNumber},
                      {"acceptance_level", Type::kNumberOrNull},
                      {"feasible", Type::kBool},
                      {"exhaustive", Type::kBool},
                      {"worst_case_correlations", Type::kArray, each_of(Type::kNumber)}},
                     errors);
        for (const char *k : {"confidence", "power", "validity"}) check_probability(j, k, path, errors);
    };
}

std::vector<Field> fields_for(const std::string &command) {
    if (command == "dist") {
        return {{"witness", Type::kObject, witness_check()},
                {"copies", Type::kArray, each_of(Type::kInteger)},
                {"outcomes", Type::kArray, pmf_rows("probability")},
                {"total_mass", Type::kNumber},
                {"mean", Type::kNumber},
                {"variance", Type::kNumber}};
    }
    if (command == "worst-case") {
        return {{"witness", Type::kObject, witness_check()},
                {"copies", Type::kArray, each_of(Type::kInteger)},
                {"target", Type::kObject},
                {"worst_case", Type::kObject, worst_case_check()}};
    }
    if (command == "test") {
        return {{"witness", Type::kObject, witness_check()},
                {"copies", Type::kArray, each_of(Type::kInteger)},
                {"priors", Type::kObject, object_of({{"entangled", Type::kNumber}, {"separable", Type::kNumber}})},
                {"q_b", Type::kNumber},
                {"posteriors", Type::kArray, pmf_rows("posterior")},
                {"frequentist", Type::kObject, framework_check()},
                {"bayesian", Type::kObject, framework_check()}};
    }
    if (command == "plan") {
        return {{"framework", Type::kString},
                {"witness_family", Type::kString},
                {"feasible", Type::kBool},
                {"best_validity", Type::kNumber},
                {"candidates", Type::kInteger},
                {"plans", Type::kArray, each(plan_check())}};
    }
    if (command == "noise-curve") {
        return {{"copies", Type::kInteger},
                {"settings", Type::kInteger},
                {"points", Type::kArray,
                 each(object_of({{"purity", Type::kNumber}, {"success_probability", Type::kNumber}}))}};
    }
    if (command == "simulate") {
        return {{"witness", Type::kObject, witness_check()},
                {"copies", Type::kArray, each_of(Type::kInteger)},
                {"trials", Type::kInteger},
                {"seed", Type::kInteger},
                {"outcomes", Type::kArray,
                 each(object_of({{"outcome", Type::kOutcome},
                                 {"value", Type::kNumber},
                                 {"empirical", Type::kNumber},
                                 {"exact", Type::kNumber}}))},
                {"chi_square", Type::kObject,
                 object_of({{"statistic", Type::kNumber},
                            {"degrees_of_freedom", Type::kInteger},
                            {"p_value", Type::kNumber},
                            {"bins", Type::kInteger},
                            {"degenerate", Type::kBool}})}};
    }
    return {};
}

}  // namespace

std::vector<std::string> report_errors(const Json &report) {
    std::vector<std::string> errors;
    if (!report.is_object()) return {"report: expected an object"};
    if (!report.contains("command") || !report.at("command").is_string()) return {"report.command: missing"};
    const auto command = report.at("command").get<std::string>();
    const auto fields = fields_for(command);
    if (fields.empty()) return {"report.command: unknown command '" + command + "'"};
    check_fields(report, "report", fields, errors);
    if (command == "plan" && report.contains("cross_evaluation")) {
        plan_check()(report.at("cross_evaluation"), "report.cross_evaluation", errors);
    }
    return errors;
}

void validate_report(const Json &report) {
    const auto errors = report_errors(report);
    if (!errors.empty()) throw ReportSchemaError(errors.front());
}

}  // namespace entcert::cli

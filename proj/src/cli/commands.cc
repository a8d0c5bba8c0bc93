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

#include "entcert/cli/commands.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "entcert/acceptance_search.h"
#include "entcert/cli/report_schema.h"
#include "entcert/errors.h"
#include "entcert/inference.h"
#include "entcert/oracle.h"
#include "entcert/outcome_lattice.h"
#include "entcert/planner.h"
#include "entcert/state_models.h"

namespace entcert::cli {
namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json outcome_json(const Rational &q) { return Json{{"outcome", q.str()}, {"value", q.to_double()}}; }

Json pmf_json(const OutcomePmf &pmf) {
    Json rows = Json::array();
    for (const auto &e : pmf) {
        auto row = outcome_json(e.outcome);
        row["probability"] = e.probability;
        rows.push_back(row);
    }
    return rows;
}

std::string pmf_csv(const OutcomePmf &pmf) {
    std::string csv = "outcome,value,probability\n";
    for (const auto &e : pmf) csv += e.outcome.str() + "," + fmt(e.outcome.to_double()) + "," + fmt(e.probability) + "\n";
    return csv;
}

Json strings(const std::vector<Rational> &outcomes) {
    Json out = Json::array();
    for (const auto &q : outcomes) out.push_back(q.str());
    return out;
}

Json acceptance_json(const AcceptanceSet &acc, std::span<const Rational> grid) {
    Json j;
    j["description"] = acc.describe();
    if (acc.is_threshold()) {
        j["kind"] = "threshold";
        j["bound"] = acc.bound()->str();
        j["direction"] = acc.direction() == ThresholdDirection::kAcceptLow ? "at_most" : "at_least";
    } else {
        j["kind"] = "explicit";
    }
    j["outcomes"] = strings(acc.resolve(grid));
    j["boundary"] = acc.boundary() ? Json(acc.boundary()->str()) : Json(nullptr);
    j["gamma"] = acc.gamma();
    return j;
}

Json witness_json(const WitnessKind &witness) {
    Json j;
    j["kind"] = is_linear(witness) ? "linear" : "quadratic";
    j["settings"] = setting_count(witness);
    if (const auto *lin = std::get_if<LinearWitness>(&witness)) {
        j["coefficients"] = strings(lin->coefficients);
        j["constant"] = lin->constant.str();
    }
    return j;
}

Json worst_case_json(const WorstCaseResult &r) {
    return Json{{"correlations", r.correlations},
                {"objective", r.objective},
                {"restarts_used", r.restarts_used},
                {"converged", r.converged},
                {"distribution", pmf_json(r.distribution)}};
}

Json posteriors_json(const std::map<Rational, double> &posteriors) {
    Json rows = Json::array();
    for (const auto &[q, value] : posteriors) {
        auto row = outcome_json(q);
        row["posterior"] = value;
        rows.push_back(row);
    }
    return rows;
}

// Explicit outcomes and the boundary mapped onto the grid.
AcceptanceSet resolve_set(const AcceptanceSet &acc, std::span<const Rational> grid) {
    if (acc.is_threshold()) {
        if (acc.boundary()) {
            return AcceptanceSet::threshold(*acc.bound(), acc.direction())
                .with_boundary(resolve_outcome(*acc.boundary(), grid), acc.gamma());
        }
        return acc;
    }
    std::vector<Rational> outcomes;
    for (const auto &q : acc.outcomes()) outcomes.push_back(resolve_outcome(q, grid));
    auto out = AcceptanceSet::explicit_set(std::move(outcomes));
    if (acc.boundary()) out = out.with_boundary(resolve_outcome(*acc.boundary(), grid), acc.gamma());
    return out;
}

struct Setup {
    WitnessKind witness;
    std::vector<int> copies;
};

Setup parse_setup(const ObjectReader &root) {
    Setup s{parse_witness(root), {}};
    s.copies = parse_copies(root, setting_count(s.witness));
    return s;
}

OutcomePmf entangled_pmf(const Setup &s, const EntangledModel &model) { return model.pmf(s.witness, s.copies); }

std::vector<double> parse_correlations(const ObjectReader &root, int settings) {
    auto t = root.numbers("correlations");
    if (static_cast<int>(t.size()) != settings) {
        throw SchemaError(root.path() + ".correlations: length must equal the number of settings");
    }
    for (double v : t) {
        if (!(v >= -1.0 && v <= 1.0)) throw SchemaError(root.path() + ".correlations: entries must lie in [-1, 1]");
    }
    return t;
}

// ---------------------------------------------------------------- dist

CommandOutput cmd_dist(const Json &config) {
    const ObjectReader root(config, "config", {"witness", "copies", "correlations", "entangled"});
    const auto s = parse_setup(root);
    if (root.has("correlations") == root.has("entangled")) {
        throw SchemaError("config: give exactly one of \"correlations\" and \"entangled\"");
    }
    OutcomePmf pmf;
    if (root.has("correlations")) {
        const auto t = parse_correlations(root, setting_count(s.witness));
        pmf = witness_pmf(make_settings(t, s.copies), s.witness);
    } else {
        pmf = entangled_pmf(s, parse_entangled(root.object("entangled", {"purity", "mixture"})));
    }
    const auto m = pmf.moments();
    CommandOutput out;
    out.report = Json{{"command", "dist"},
                      {"witness", witness_json(s.witness)},
                      {"copies", s.copies},
                      {"outcomes", pmf_json(pmf)},
                      {"total_mass", pmf.total_mass()},
                      {"mean", m.mean},
                      {"variance", m.variance}};
    out.csv = pmf_csv(pmf);
    return out;
}

// ---------------------------------------------------------- worst-case

CommandOutput cmd_worst_case(const Json &config, const Overrides &ov) {
    const ObjectReader root(config, "config", {"witness", "copies", "acceptance", "outcome", "optimizer"});
    const auto s = parse_setup(root);
    const auto options = parse_worst_case_options(root, ov.seed, ov.workers);
    if (root.has("acceptance") == root.has("outcome")) {
        throw SchemaError("config: give exactly one of \"acceptance\" and \"outcome\"");
    }
    OutcomeLattice lattice(s.witness, s.copies);
    CommandOutput out;
    out.report["command"] = "worst-case";
    out.report["witness"] = witness_json(s.witness);
    out.report["copies"] = s.copies;
    WorstCaseResult r;
    if (root.has("acceptance")) {
        auto acc = parse_acceptance(
            root.object("acceptance", {"at_most", "at_least", "outcomes", "boundary", "gamma"}));
        acc = resolve_set(acc, lattice.outcomes());
        r = worst_case_acc(s.witness, s.copies, acc, options);
        out.report["target"] = Json{{"acceptance", acceptance_json(acc, lattice.outcomes())}};
    } else {
        const auto q = resolve_outcome(root.rational("outcome"), lattice.outcomes());
        r = worst_case_pointwise(s.witness, s.copies, q, options);
        out.report["target"] = Json{{"outcome", q.str()}};
    }
    out.report["worst_case"] = worst_case_json(r);
    out.csv = pmf_csv(r.distribution);
    if (!r.converged) out.exit_code = kExitNotConverged;
    return out;
}

// ---------------------------------------------------------------- test

CommandOutput cmd_test(const Json &config, const Overrides &ov) {
    const ObjectReader root(config, "config",
                            {"witness", "copies", "entangled", "acceptance", "q_f", "q_b", "priors", "optimizer"});
    const auto s = parse_setup(root);
    const auto options = parse_worst_case_options(root, ov.seed, ov.workers);
    const auto model = parse_entangled(root.object("entangled", {"purity", "mixture"}));
    const auto priors = parse_priors(root.object("priors", {"entangled", "qubits"}));
    const double q_b = root.number("q_b");
    if (!(q_b >= 0.0 && q_b <= 1.0)) throw SchemaError("config.q_b: must lie in [0, 1]");
    if (root.has("acceptance") == root.has("q_f")) {
        throw SchemaError("config: give exactly one of \"acceptance\" and \"q_f\"");
    }
    OutcomeLattice lattice(s.witness, s.copies);
    const auto &grid = lattice.outcomes();
    const auto ent = entangled_pmf(s, model);
    const auto bounds = pointwise_worst_case(s.witness, s.copies, options);
    bool converged = bounds.converged;

    Json freq;
    AcceptanceSet f_acc;
    WorstCaseResult f_worst;
    if (root.has("acceptance")) {
        f_acc = resolve_set(
            parse_acceptance(root.object("acceptance", {"at_most", "at_least", "outcomes", "boundary", "gamma"})),
            grid);
        f_worst = worst_case_acc(s.witness, s.copies, f_acc, options);
    } else {
        const double q_f = root.number("q_f");
        if (!(q_f > 0.0 && q_f < 1.0)) throw SchemaError("config.q_f: must lie in (0, 1)");
        auto design = frequentist_design(s.witness, s.copies, ent, 1.0 - q_f, options);
        f_acc = design.acceptance;
        f_worst = design.worst_case;
        freq["exhaustive"] = design.exhaustive;
    }
    converged = converged && f_worst.converged;
    const auto f_report = make_report(f_acc, ent, f_worst.objective, priors, q_b, &bounds);
    freq["acceptance"] = acceptance_json(f_acc, grid);
    freq["confidence"] = f_report.confidence;
    freq["power"] = f_report.power;
    freq["acceptance_level"] = f_report.acceptance_level;
    freq["expected_loss"] = f_report.expected_loss;
    freq["worst_case"] = worst_case_json(f_worst);

    const auto posteriors = posterior_map(ent, bounds, priors);
    const auto b_acc = bayes_acceptance(q_b, posteriors);
    WorstCaseResult b_worst;
    if (b_acc.is_empty_on(grid)) {
        b_worst.correlations.assign(s.copies.size(), 0.0);
        b_worst.distribution = lattice.pmf(b_worst.correlations);
    } else {
        b_worst = worst_case_acc(s.witness, s.copies, b_acc, options);
        converged = converged && b_worst.converged;
    }
    const auto b_report = make_report(b_acc, ent, b_worst.objective, priors, q_b, &bounds);
    Json bayes;
    bayes["acceptance"] = acceptance_json(b_acc, grid);
    bayes["confidence"] = b_report.confidence;
    bayes["power"] = b_report.power;
    bayes["acceptance_level"] = b_report.acceptance_level;
    bayes["expected_loss"] = b_report.expected_loss;
    bayes["worst_case"] = worst_case_json(b_worst);

    CommandOutput out;
    out.report = Json{{"command", "test"},
                      {"witness", witness_json(s.witness)},
                      {"copies", s.copies},
                      {"priors", Json{{"entangled", priors.entangled}, {"separable", priors.separable()}}},
                      {"q_b", q_b},
                      {"posteriors", posteriors_json(posteriors)},
                      {"frequentist", freq},
                      {"bayesian", bayes}};
    out.csv = "framework,confidence,power,acceptance_level,expected_loss,acceptance\n";
    for (const auto &[name, r, acc] : {std::tuple{"frequentist", f_report, f_acc}, std::tuple{"bayesian", b_report, b_acc}}) {
        out.csv += std::string(name) + "," + fmt(r.confidence) + "," + fmt(r.power) + "," + fmt(r.acceptance_level) +
                   "," + fmt(r.expected_loss) + ",\"" + acc.describe() + "\"\n";
    }
    if (!converged) out.exit_code = kExitNotConverged;
    return out;
}

// ---------------------------------------------------------------- plan

Json plan_json(const Plan &plan, WitnessFamily family, int rank, bool optimum) {
    const auto witness = make_witness(family, plan.settings());
    OutcomeLattice lattice(witness, plan.copies);
    Json j{{"rank", rank},
           {"optimum", optimum},
           {"settings", plan.settings()},
           {"copies", plan.copies},
           {"copies_used", plan.copies_used()},
           {"acceptance", acceptance_json(plan.acceptance, lattice.outcomes())},
           {"confidence", plan.report.confidence},
           {"power", plan.report.power},
           {"expected_loss", plan.report.expected_loss},
           {"validity", plan.validity},
           {"feasible", plan.feasible},
           {"exhaustive", plan.exhaustive},
           {"worst_case_correlations", plan.worst_case.correlations}};
    j["acceptance_level"] = plan.report.posterior_by_outcome.empty() ? Json(nullptr) : Json(plan.report.acceptance_level);
    return j;
}

CommandOutput cmd_plan(const Json &config, const Overrides &ov) {
    const ObjectReader root(config, "config",
                            {"eta", "max_settings", "q_min", "framework", "allow_unused_copies",
                             "equal_allocation_only", "witness_family", "entangled", "priors", "optimizer",
                             "cross_evaluate", "top"});
    PlanSpec spec;
    spec.eta = static_cast<int>(root.integer("eta"));
    spec.max_settings = static_cast<int>(root.integer("max_settings"));
    spec.q_min = root.number("q_min");
    const auto framework = root.string("framework");
    if (framework == "frequentist") {
        spec.framework = Framework::kFrequentist;
    } else if (framework == "bayesian") {
        spec.framework = Framework::kBayesian;
    } else {
        throw SchemaError("config.framework: expected \"frequentist\" or \"bayesian\"");
    }
    spec.allow_unused_copies = root.boolean_or("allow_unused_copies", true);
    spec.equal_allocation_only = root.boolean_or("equal_allocation_only", false);
    try {
        spec.validate();
    } catch (const std::domain_error &e) {
        throw SchemaError(std::string("config: ") + e.what());
    }
    if (spec.eta > 64) throw SchemaError("config.eta: budgets above 64 copies are not supported");
    const auto family_name = root.string("witness_family");
    WitnessFamily family;
    if (family_name == "linear") {
        family = WitnessFamily::kLinearGhz;
    } else if (family_name == "quadratic") {
        family = WitnessFamily::kQuadratic;
    } else {
        throw SchemaError("config.witness_family: expected \"linear\" or \"quadratic\"");
    }
    const auto model = parse_entangled(root.object("entangled", {"purity", "mixture"}));
    PlanOptions options;
    options.priors = parse_priors(root.object("priors", {"entangled", "qubits"}));
    options.worst_case = parse_worst_case_options(root, ov.seed, 1);
    options.workers = std::max(1, ov.workers);
    const bool cross = root.boolean_or("cross_evaluate", false);
    const auto top = root.integer_or("top", 0);
    if (top < 0) throw SchemaError("config.top: must be non-negative");

    const auto result = optimize_plan(spec, family, model, options);
    Json plans = Json::array();
    std::string csv = "rank,optimum,settings,copies,copies_used,acceptance,confidence,power,expected_loss,validity,feasible\n";
    const std::size_t shown = top > 0 ? std::min<std::size_t>(result.plans.size(), static_cast<std::size_t>(top))
                                      : result.plans.size();
    for (std::size_t i = 0; i < shown; ++i) {
        const auto &p = result.plans[i];
        const bool optimum = i == 0 && result.feasible;
        plans.push_back(plan_json(p, family, static_cast<int>(i + 1), optimum));
        std::string copies;
        for (int n : p.copies) copies += (copies.empty() ? "" : " ") + std::to_string(n);
        csv += std::to_string(i + 1) + "," + (optimum ? "true" : "false") + "," + std::to_string(p.settings()) + ",\"" +
               copies + "\"," + std::to_string(p.copies_used()) + ",\"" + p.acceptance.describe() + "\"," +
               fmt(p.report.confidence) + "," + fmt(p.report.power) + "," + fmt(p.report.expected_loss) + "," +
               fmt(p.validity) + "," + (p.feasible ? "true" : "false") + "\n";
    }
    CommandOutput out;
    out.report = Json{{"command", "plan"},
                      {"framework", framework_name(spec.framework)},
                      {"witness_family", family_name},
                      {"feasible", result.feasible},
                      {"best_validity", result.best_validity},
                      {"candidates", result.plans.size()},
                      {"plans", plans}};
    if (cross && !result.plans.empty()) {
        const auto other = other_framework(spec.framework);
        const auto c = cross_evaluate(result.best(), other, spec.q_min, family, model, options);
        auto j = plan_json(c, family, 1, false);
        j["framework"] = framework_name(other);
        out.report["cross_evaluation"] = j;
    }
    out.csv = csv;
    if (!result.feasible) out.exit_code = kExitInfeasible;
    return out;
}

// --------------------------------------------------------- noise-curve

CommandOutput cmd_noise_curve(const Json &config) {
    const ObjectReader root(config, "config", {"copies", "settings", "step", "purities"});
    const auto n = root.integer("copies");
    const auto m = root.integer("settings");
    if (n < 1 || m < 1) throw SchemaError("config: copies and settings must be positive");
    std::vector<double> purities;
    if (root.has("purities")) {
        if (root.has("step")) throw SchemaError("config: give at most one of \"step\" and \"purities\"");
        purities = root.numbers("purities");
    } else {
        const double step = root.number_or("step", 0.01);
        if (!(step > 0.0 && step <= 1.0)) throw SchemaError("config.step: must lie in (0, 1]");
        const auto count = static_cast<long>(std::floor(1.0 / step + 1e-9));
        for (long i = 0; i <= count; ++i) purities.push_back(std::min(1.0, static_cast<double>(i) * step));
        if (purities.back() < 1.0) purities.push_back(1.0);
    }
    Json points = Json::array();
    std::string csv = "purity,success_probability\n";
    for (double p : purities) {
        if (!(p >= 0.0 && p <= 1.0)) throw SchemaError("config.purities: entries must lie in [0, 1]");
        const double s = white_noise_success_probability(p, static_cast<int>(n), static_cast<int>(m));
        points.push_back(Json{{"purity", p}, {"success_probability", s}});
        csv += fmt(p) + "," + fmt(s) + "\n";
    }
    CommandOutput out;
    out.report = Json{{"command", "noise-curve"}, {"copies", n}, {"settings", m}, {"points", points}};
    out.csv = csv;
    return out;
}

// ------------------------------------------------------------ simulate

CommandOutput cmd_simulate(const Json &config, const Overrides &ov) {
    const ObjectReader root(config, "config", {"witness", "copies", "correlations", "entangled", "trials", "seed"});
    const auto s = parse_setup(root);
    if (root.has("correlations") == root.has("entangled")) {
        throw SchemaError("config: give exactly one of \"correlations\" and \"entangled\"");
    }
    SimulationConfig sim;
    sim.copies = s.copies;
    sim.trials = root.unsigned_or("trials", 1000000);
    if (sim.trials < 1) throw SchemaError("config.trials: must be positive");
    sim.seed = ov.seed ? *ov.seed : root.unsigned_or("seed", 0);

    OutcomePmf empirical;
    OutcomePmf exact;
    if (root.has("correlations")) {
        sim.correlations = parse_correlations(root, setting_count(s.witness));
        exact = witness_pmf(make_settings(sim.correlations, s.copies), s.witness);
        empirical = simulate_witness(sim, s.witness, ov.workers);
    } else {
        const auto model = parse_entangled(root.object("entangled", {"purity", "mixture"}));
        const auto signs = violating_signs(s.witness);
        exact = entangled_pmf(s, model);
        std::vector<PurityNode> nodes;
        if (model.kind == EntangledModel::Kind::kMixture) {
            nodes = discretize_prior(model.prior, model.step);
        } else {
            nodes.push_back({model.purity, 1.0});
        }
        empirical = simulate_mixture(sim, s.witness, nodes, signs, ov.workers);
    }
    const auto chi = chi_square_compare(empirical, exact, sim.trials);

    std::map<Rational, std::pair<double, double>> rows;
    for (const auto &e : exact) rows[e.outcome].second = e.probability;
    for (const auto &e : empirical) rows[e.outcome].first = e.probability;
    Json outcomes = Json::array();
    std::string csv = "outcome,value,empirical,exact\n";
    for (const auto &[q, pr] : rows) {
        auto row = outcome_json(q);
        row["empirical"] = pr.first;
        row["exact"] = pr.second;
        outcomes.push_back(row);
        csv += q.str() + "," + fmt(q.to_double()) + "," + fmt(pr.first) + "," + fmt(pr.second) + "\n";
    }
    CommandOutput out;
    out.report = Json{{"command", "simulate"},
                      {"witness", witness_json(s.witness)},
                      {"copies", s.copies},
                      {"trials", sim.trials},
                      {"seed", sim.seed},
                      {"outcomes", outcomes},
                      {"chi_square",
                       Json{{"statistic", chi.statistic},
                            {"degrees_of_freedom", chi.degrees_of_freedom},
                            {"p_value", chi.p_value},
                            {"bins", chi.bins},
                            {"degenerate", chi.degenerate}}}};
    out.csv = csv;
    return out;
}

}  // namespace

const std::vector<std::string> &command_names() {
    static const std::vector<std::string> kNames{"dist", "worst-case", "test", "plan", "noise-curve", "simulate"};
    return kNames;
}

Rational resolve_outcome(const Rational &value, std::span<const Rational> grid) {
    if (std::binary_search(grid.begin(), grid.end(), value)) return value;
    const auto target = value.decimal(2);
    std::optional<Rational> match;
    for (const auto &q : grid) {
        if (q.decimal(2) != target) continue;
        if (match) throw SchemaError("outcome " + value.str() + " matches several grid outcomes to two decimals");
        match = q;
    }
    if (!match) throw SchemaError("outcome " + value.str() + " is not on the outcome grid");
    return *match;
}

CommandOutput execute(const std::string &command, const Json &config, const Overrides &overrides) {
    CommandOutput out;
    if (command == "dist") {
        out = cmd_dist(config);
    } else if (command == "worst-case") {
        out = cmd_worst_case(config, overrides);
    } else if (command == "test") {
        out = cmd_test(config, overrides);
    } else if (command == "plan") {
        out = cmd_plan(config, overrides);
    } else if (command == "noise-curve") {
        out = cmd_noise_curve(config);
    } else if (command == "simulate") {
        out = cmd_simulate(config, overrides);
    } else {
        throw SchemaError("unknown command '" + command + "'");
    }
    validate_report(out.report);
    return out;
}

int run(const RunOptions &options, std::ostream &out, std::ostream &err) {
    Json config;
    {
        std::ifstream in(options.config_path);
        if (!in) {
            err << "error: cannot open config '" << options.config_path << "'\n";
            return kExitSchema;
        }
        try {
            config = Json::parse(in);
        } catch (const Json::parse_error &e) {
            err << "error: config is not valid JSON: " << e.what() << "\n";
            return kExitSchema;
        }
    }

    CommandOutput result;
    try {
        result = execute(options.command, config, options.overrides);
    } catch (const SchemaError &e) {
        err << "schema error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const InfeasibleConstraintError &e) {
        err << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }

    const std::string text =
        options.format == OutputFormat::kCsv ? result.csv : result.report.dump(2) + "\n";
    if (options.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(options.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << options.out_path << "'\n";
            return kExitFailure;
        }
        file << text;
    }
    if (result.exit_code == kExitInfeasible) err << "infeasible: no candidate reaches the required validity\n";
    if (result.exit_code == kExitNotConverged) err << "warning: optimizer hit its evaluation budget\n";
    return result.exit_code;
}

}  // namespace entcert::cli

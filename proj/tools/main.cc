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

#include <iostream>
#include <map>
#include <thread>

#include "CLI11.hpp"
#include "entcert/cli/commands.h"

int main(int argc, char **argv) {
    namespace cli = entcert::cli;
    CLI::App app{"Finite-statistics entanglement certification"};
    app.require_subcommand(1);

    cli::RunOptions options;
    std::string format = "json";
    std::uint64_t seed = 0;
    int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    const std::map<std::string, std::string> help{
        {"dist", "exact outcome distribution of a witness"},
        {"worst-case", "largest separable probability of an acceptance set or outcome"},
        {"test", "confidence, power, posteriors and loss of a test"},
        {"plan", "best allocation of a copy budget over measurement settings"},
        {"noise-curve", "success probability against white-noise purity"},
        {"simulate", "Monte Carlo outcome frequencies with a chi-square check"},
    };
    for (const auto &name : cli::command_names()) {
        auto *sub = app.add_subcommand(name, help.at(name));
        sub->add_option("--config", options.config_path, "JSON run configuration")->required();
        sub->add_option("--out", options.out_path, "output file (default: standard output)");
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--seed", seed, "overrides every seed in the configuration");
        sub->add_option("--workers", workers, "maximum worker threads")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kExitSchema;
    }

    for (auto *sub : app.get_subcommands()) {
        options.command = sub->get_name();
        if (sub->count("--seed") > 0) options.overrides.seed = seed;
    }
    options.format = format == "csv" ? cli::OutputFormat::kCsv : cli::OutputFormat::kJson;
    options.overrides.workers = workers;
    return cli::run(options, std::cout, std::cerr);
}

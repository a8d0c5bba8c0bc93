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

#ifndef ENTCERT_CLI_COMMANDS_H
#define ENTCERT_CLI_COMMANDS_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "entcert/cli/config.h"

namespace entcert::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitSchema = 2,
    kExitInfeasible = 3,
    kExitNotConverged = 4,
};

enum class OutputFormat { kJson, kCsv };

const std::vector<std::string> &command_names();

struct Overrides {
    std::optional<std::uint64_t> seed;
    int workers = 1;
};

struct CommandOutput {
    Json report;
    std::string csv;
    int exit_code = kExitOk;
};

/// Runs one subcommand on a parsed configuration. Throws SchemaError for
/// invalid configurations; infeasibility and non-convergence are reported
/// through exit_code with the report still filled in.
CommandOutput execute(const std::string &command, const Json &config, const Overrides &overrides);

struct RunOptions {
    std::string command;
    std::string config_path;
    std::string out_path;  // empty: standard output
    OutputFormat format = OutputFormat::kJson;
    Overrides overrides;
};

/// Reads the configuration file, executes and writes the chosen format.
/// Diagnostics go to `err`. Returns the process exit code.
int run(const RunOptions &options, std::ostream &out, std::ostream &err);

/// Grid outcome matching `value` exactly, or else the unique grid outcome
/// that agrees with it to two decimals. Throws SchemaError otherwise.
Rational resolve_outcome(const Rational &value, std::span<const Rational> grid);

}  // namespace entcert::cli

#endif  // ENTCERT_CLI_COMMANDS_H

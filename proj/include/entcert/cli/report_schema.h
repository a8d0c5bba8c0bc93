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

// Structural schema of the JSON reports written by each subcommand.

#ifndef ENTCERT_CLI_REPORT_SCHEMA_H
#define ENTCERT_CLI_REPORT_SCHEMA_H

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace entcert::cli {

class ReportSchemaError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Every schema violation found, as "path: problem". Empty when valid.
std::vector<std::string> report_errors(const nlohmann::json &report);

/// Throws ReportSchemaError listing the first violation.
void validate_report(const nlohmann::json &report);

}  // namespace entcert::cli

#endif  // ENTCERT_CLI_REPORT_SCHEMA_H

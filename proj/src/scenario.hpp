// Copyright 2026 The ehtp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ehtp {

enum class ReportFormat { kJson, kCsv, kTable };

struct RunOptions {
  std::optional<std::uint64_t> seed;  // overrides the scenario seed
  std::optional<double> tol;          // overrides the scenario tolerance
  bool quick = false;
  ReportFormat format = ReportFormat::kJson;
  int threads = 1;
};

/// Exit codes shared by the library and the CLI.
enum ExitCode : int {
  kExitOk = 0,
  kExitAssertion = 1,
  kExitSchema = 2,
  kExitNumerical = 3,
};

struct RunResult {
  int exit_code = kExitOk;
  std::string report;
};

/// Names of the supported experiments.
const std::vector<std::string>& experiment_names();

/// Runs a scenario document: a single scenario object or {"scenarios": [..]}.
/// Scenarios run concurrently up to options.threads; the report is ordered
/// by scenario id.
RunResult run_scenarios(const std::string& document, const RunOptions& options);

}  // namespace ehtp

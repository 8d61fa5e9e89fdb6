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

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "ehtp/ehtp.h"

namespace {

int thread_budget() {
  const char* env = std::getenv("EHTP_THREADS");
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (env == nullptr || *env == '\0') return 1;
  try {
    const int n = std::stoi(env);
    return n < 1 ? 1 : std::min<int>(n, static_cast<int>(hw) * 4);
  } catch (const std::exception&) {
    std::cerr << "ignoring malformed EHTP_THREADS=" << env << '\n';
    return 1;
  }
}

bool emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream f(out, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

int finish(ehtp_status st, char* report, int exit_code, const std::string& out) {
  if (st != EHTP_OK) {
    std::cerr << "error: " << ehtp_last_error() << '\n';
    return st == EHTP_SCHEMA || st == EHTP_INVALID_ARGUMENT ? 2 : 3;
  }
  const bool written = emit(report, out);
  ehtp_string_free(report);
  if (!written) {
    std::cerr << "error: cannot write " << out << '\n';
    return 2;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elementary operators from group measures: scenario runner"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ehtp_version()));

  std::string scenario_path, out_path, format = "json";
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  bool quick = false;

  auto* run = app.add_subcommand("run", "Run a scenario file (one scenario or {\"scenarios\": [...]})");
  run->add_option("--scenario", scenario_path, "Scenario JSON file, '-' for stdin")->required();
  run->add_option("--seed", seed, "Override every scenario seed");
  run->add_option("--tol", tol, "Override every scenario tolerance");
  run->add_option("--out", out_path, "Report file (default stdout)");
  run->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  run->add_flag("--quick", quick, "Reduce random instance counts");

  std::optional<std::uint64_t> self_seed;
  bool self_quick = false;
  std::string self_out;
  auto* self = app.add_subcommand("selftest", "Randomized invariant suite");
  self->add_option("--seed", self_seed, "Seed (default fixed)");
  self->add_flag("--quick", self_quick, "One tenth of the trials");
  self->add_option("--out", self_out, "Write the table to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  ehtp_run_options opt;
  ehtp_run_options_init(&opt);
  opt.threads = thread_budget();

  if (*run) {
    std::string doc;
    if (scenario_path == "-") {
      doc.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream f(scenario_path, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot read " << scenario_path << '\n';
        return 2;
      }
      doc.assign(std::istreambuf_iterator<char>(f), {});
    }
    if (seed) {
      opt.has_seed = 1;
      opt.seed = *seed;
    }
    if (tol) {
      opt.has_tol = 1;
      opt.tol = *tol;
    }
    opt.quick = quick ? 1 : 0;
    opt.csv = format == "csv" ? 1 : 0;
    char* report = nullptr;
    int exit_code = 0;
    const auto st = ehtp_run_scenario(doc.c_str(), &opt, &report, &exit_code);
    return finish(st, report, exit_code, out_path);
  }

  if (self_seed) {
    opt.has_seed = 1;
    opt.seed = *self_seed;
  }
  opt.quick = self_quick ? 1 : 0;
  char* report = nullptr;
  int exit_code = 0;
  const auto st = ehtp_selftest(&opt, &report, &exit_code);
  return finish(st, report, exit_code, self_out);
}

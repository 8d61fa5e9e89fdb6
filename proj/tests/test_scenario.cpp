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

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "scenario.hpp"
#include "selftest.hpp"

using namespace ehtp;
using nlohmann::json;

namespace {

std::string read(const std::string& name) {
  std::ifstream f(std::string(EHTP_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<json> lines(const std::string& report) {
  std::vector<json> out;
  std::istringstream is(report);
  for (std::string line; std::getline(is, line);) out.push_back(json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("square example report", "[runner]") {
  const auto r = run_scenarios(read("square_example.json"), {});
  CHECK(r.exit_code == kExitOk);
  const auto ls = lines(r.report);
  REQUIRE(ls.size() >= 2);
  CHECK(ls.back()["summary"]["exit_code"] == 0);
  const json& result = ls[ls.size() - 2];
  CHECK(result["status"] == "pass");
  CHECK(result["details"]["solutions"][0]["k"] == 5);
  CHECK(result["details"]["solutions"][0]["pairs"] == json::parse("[[2, 3]]"));
  CHECK(result["details"]["solutions"][1]["pairs"] == json::parse("[[3, 4]]"));
  CHECK(result["details"]["solutions"][2]["pairs"] == json::parse("[[4, 5]]"));
}

TEST_CASE("exit codes", "[runner]") {
  CHECK(run_scenarios(read("cp_dirac.json"), {}).exit_code == kExitOk);
  CHECK(run_scenarios(read("schur_corrupted.json"), {}).exit_code == kExitNumerical);
  CHECK(run_scenarios(read("schema_error.json"), {}).exit_code == kExitSchema);
  CHECK(run_scenarios(read("assertion_failure.json"), {}).exit_code == kExitAssertion);
  CHECK(run_scenarios("{not json", {}).exit_code == kExitSchema);
  CHECK(run_scenarios(R"({"experiment": "schur-identity"})", {}).exit_code == kExitSchema);
  CHECK(run_scenarios(R"({"scenarios": 3})", {}).exit_code == kExitSchema);
}

TEST_CASE("cp-posdef with a point mass at the identity", "[runner]") {
  const auto ls = lines(run_scenarios(read("cp_dirac.json"), {}).report);
  const json& first = ls.front();
  CHECK(first["completely_positive"] == true);
  CHECK(first["positive_definite"] == true);
  CHECK(first["sampled_positive"] == true);
}

TEST_CASE("batch is order-stable and reproducible", "[runner]") {
  const auto doc = read("batch.json");
  RunOptions serial, parallel;
  parallel.threads = 4;
  const auto a = run_scenarios(doc, serial);
  const auto b = run_scenarios(doc, parallel);
  CHECK(a.exit_code == kExitOk);
  CHECK(a.report == b.report);
  std::vector<std::string> ids;
  for (const auto& l : lines(a.report)) {
    if (l.contains("status")) ids.push_back(l["scenario"]);
  }
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(ids.size() == experiment_names().size());
}

TEST_CASE("seed override changes random instances only", "[runner]") {
  const auto doc = read("batch.json");
  RunOptions a, b;
  a.seed = 1;
  b.seed = 2;
  const auto ra = run_scenarios(doc, a), rb = run_scenarios(doc, b);
  CHECK(ra.exit_code == kExitOk);
  CHECK(rb.exit_code == kExitOk);
  CHECK(ra.report != rb.report);
  CHECK(run_scenarios(doc, a).report == ra.report);
}

TEST_CASE("csv format", "[runner]") {
  RunOptions opt;
  opt.format = ReportFormat::kCsv;
  const auto r = run_scenarios(read("square_example.json"), opt);
  CHECK(r.report.rfind("scenario,experiment,assertion,passed,value,tol\n", 0) == 0);
  CHECK(r.report.find("# square-101 symbol k=5\n") != std::string::npos);
  CHECK(r.report.find("# exit_code=0") != std::string::npos);
}

TEST_CASE("selftest quick mode", "[runner]") {
  SelftestOptions opt;
  opt.quick = true;
  const auto r = run_selftest(opt);
  CHECK(r.exit_code == 0);
  for (const auto& p : r.properties) CHECK(p.failures == 0);
  CHECK(run_selftest(opt).table == r.table);
  opt.seed = 99;
  CHECK(run_selftest(opt).exit_code == 0);
}

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

#include <cmath>
#include <complex>
#include <cstring>
#include <string>
#include <vector>

#include "ehtp/ehtp.h"

// Exercises the shared library through the public C header only.

namespace {

struct GroupHandle {
  ehtp_group* p = nullptr;
  ~GroupHandle() { ehtp_group_free(p); }
};
struct MeasureHandle {
  ehtp_measure* p = nullptr;
  ~MeasureHandle() { ehtp_measure_free(p); }
};
struct RepHandle {
  ehtp_rep* p = nullptr;
  ~RepHandle() { ehtp_rep_free(p); }
};
struct OperatorHandle {
  ehtp_operator* p = nullptr;
  ~OperatorHandle() { ehtp_operator_free(p); }
};

}  // namespace

TEST_CASE("groups and measures", "[capi]") {
  GroupHandle g;
  const int shape[] = {4};
  REQUIRE(ehtp_group_cyclic_product(shape, 1, &g.p) == EHTP_OK);
  CHECK(ehtp_group_order(g.p) == 4);

  const double mu_w[] = {0, 0, 1, 0, 1, 0, 0, 0};
  const double nu_w[] = {0, 0, 1, 0, 0, 0, -1, 0};
  MeasureHandle mu, nu, conv;
  REQUIRE(ehtp_measure_create(g.p, mu_w, &mu.p) == EHTP_OK);
  REQUIRE(ehtp_measure_create(g.p, nu_w, &nu.p) == EHTP_OK);
  REQUIRE(ehtp_measure_convolve(mu.p, nu.p, &conv.p) == EHTP_OK);
  double out[8];
  REQUIRE(ehtp_measure_weights(conv.p, out, 8) == EHTP_OK);
  const double expect[] = {-1, 0, -1, 0, 1, 0, 1, 0};
  for (int i = 0; i < 8; ++i) CHECK(std::abs(out[i] - expect[i]) < 1e-14);
  CHECK(ehtp_measure_norm(conv.p) == Catch::Approx(4.0));
  CHECK(ehtp_measure_weights(conv.p, out, 3) == EHTP_INVALID_ARGUMENT);

  MeasureHandle dirac;
  REQUIRE(ehtp_measure_dirac(g.p, 1, &dirac.p) == EHTP_OK);
  const int exps[] = {1};
  double re = 0, im = 0;
  REQUIRE(ehtp_fourier_stieltjes(dirac.p, exps, 1, &re, &im) == EHTP_OK);
  CHECK(std::abs(re) < 1e-15);
  CHECK(std::abs(im - 1.0) < 1e-15);
}

TEST_CASE("errors carry codes and messages", "[capi]") {
  GroupHandle g;
  const int bad[] = {0};
  CHECK(ehtp_group_cyclic_product(bad, 1, &g.p) != EHTP_OK);
  CHECK(g.p == nullptr);
  CHECK(std::strlen(ehtp_last_error()) > 0);
  CHECK(ehtp_group_from_json("{\"kind\": 3}", &g.p) == EHTP_SCHEMA);
  const int table[] = {0, 1, 1, 1};
  CHECK(ehtp_group_from_cayley(table, 2, &g.p) == EHTP_INVALID_ARGUMENT);
  CHECK(ehtp_group_cyclic_product(nullptr, 1, nullptr) == EHTP_INVALID_ARGUMENT);

  const int shape[] = {2};
  REQUIRE(ehtp_group_cyclic_product(shape, 1, &g.p) == EHTP_OK);
  CHECK(std::string(ehtp_last_error()).empty());
  // pi(1) = [[0, 1], [1, 0.25]] is not unitary.
  const double mats[] = {1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0.25, 0};
  RepHandle pi;
  CHECK(ehtp_rep_from_matrices(g.p, 2, mats, &pi.p) == EHTP_NOT_A_REPRESENTATION);
}

TEST_CASE("gamma, apply and bounds", "[capi]") {
  GroupHandle g;
  const int shape[] = {3};
  REQUIRE(ehtp_group_cyclic_product(shape, 1, &g.p) == EHTP_OK);
  const int exps[] = {0, 1};
  RepHandle pi;
  REQUIRE(ehtp_rep_from_characters(g.p, exps, 2, &pi.p) == EHTP_OK);
  CHECK(ehtp_rep_dim(pi.p) == 2);

  MeasureHandle mu;
  const double w[] = {0.5, 0, 0.25, 0, 0.25, 0};
  REQUIRE(ehtp_measure_create(g.p, w, &mu.p) == EHTP_OK);
  OperatorHandle t;
  REQUIRE(ehtp_gamma(pi.p, mu.p, &t.p) == EHTP_OK);
  CHECK(ehtp_operator_dim(t.p) == 2);

  // The symbol at (0, 1) is mu^(chi_0 chi_1^-1) = 0.5 + 0.25 (w + w^2) = 0.25.
  const double ones[] = {1, 0, 1, 0, 1, 0, 1, 0};
  double y[8];
  REQUIRE(ehtp_operator_apply(t.p, ones, y) == EHTP_OK);
  CHECK(y[0] == Catch::Approx(1.0));
  CHECK(y[2] == Catch::Approx(0.25));
  CHECK(std::abs(y[3]) < 1e-15);

  int cp = -1;
  REQUIRE(ehtp_operator_is_cp(t.p, &cp) == EHTP_OK);
  CHECK(cp == 1);
  double lower = 0, upper = 0;
  REQUIRE(ehtp_operator_cb_bounds(t.p, 100, 2, 7, &lower, &upper) == EHTP_OK);
  CHECK(upper == Catch::Approx(1.0).epsilon(1e-12));
  CHECK(lower <= upper);
}

TEST_CASE("explicit operators", "[capi]") {
  // x -> a x b with a = diag(2, 1), b = I on C^2.
  const double a[] = {2, 0, 0, 0, 0, 0, 1, 0};
  const double b[] = {1, 0, 0, 0, 0, 0, 1, 0};
  OperatorHandle t;
  REQUIRE(ehtp_operator_create(2, a, b, 1, &t.p) == EHTP_OK);
  double lower = 0, upper = 0;
  REQUIRE(ehtp_operator_cb_bounds(t.p, 500, 10, 1, &lower, &upper) == EHTP_OK);
  CHECK(lower == Catch::Approx(2.0).epsilon(1e-6));
  CHECK(upper == Catch::Approx(2.0).epsilon(1e-6));
  CHECK(ehtp_operator_cb_bounds(t.p, -1, 1, 1, &lower, &upper) == EHTP_INVALID_ARGUMENT);
}

TEST_CASE("runner through the C API", "[capi]") {
  ehtp_run_options opt;
  ehtp_run_options_init(&opt);
  char* report = nullptr;
  int exit_code = -1;
  const char* doc = R"({"experiment": "square-example", "params": {"N": 101, "n_max": 6, "k": 7}})";
  REQUIRE(ehtp_run_scenario(doc, &opt, &report, &exit_code) == EHTP_OK);
  CHECK(exit_code == 0);
  CHECK(std::string(report).find("[[3,4]]") != std::string::npos);
  ehtp_string_free(report);

  REQUIRE(ehtp_run_scenario("{", &opt, &report, &exit_code) == EHTP_OK);
  CHECK(exit_code == 2);
  ehtp_string_free(report);

  opt.quick = 1;
  REQUIRE(ehtp_selftest(&opt, &report, &exit_code) == EHTP_OK);
  CHECK(exit_code == 0);
  CHECK(std::string(report).find("all properties passed") != std::string::npos);
  ehtp_string_free(report);
  CHECK(std::string(ehtp_version()) == "0.1.0");
}

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

#include "ehtp/ehtp.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "error.hpp"
#include "gamma.hpp"
#include "scenario.hpp"
#include "selftest.hpp"
#include "serialize.hpp"

struct ehtp_group {
  ehtp::GroupPtr g;
};
struct ehtp_measure {
  ehtp::Measure mu;
};
struct ehtp_rep {
  ehtp::Representation pi;
};
struct ehtp_operator {
  ehtp::ElementaryOperator t;
};

namespace {

thread_local std::string last_error;

ehtp_status status_of(ehtp::ErrorCode code) {
  using ehtp::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return EHTP_INVALID_ARGUMENT;
    case ErrorCode::kGroupMismatch: return EHTP_GROUP_MISMATCH;
    case ErrorCode::kDimensionMismatch: return EHTP_DIMENSION_MISMATCH;
    case ErrorCode::kNonAbelian: return EHTP_NON_ABELIAN;
    case ErrorCode::kOrderBound: return EHTP_ORDER_BOUND;
    case ErrorCode::kNotARepresentation: return EHTP_NOT_A_REPRESENTATION;
    case ErrorCode::kNumericalFailure: return EHTP_NUMERICAL_FAILURE;
    case ErrorCode::kNotCompletelyPositive: return EHTP_NOT_COMPLETELY_POSITIVE;
    case ErrorCode::kNotPositiveDefinite: return EHTP_NOT_POSITIVE_DEFINITE;
    case ErrorCode::kPrecondition: return EHTP_PRECONDITION;
    case ErrorCode::kVerificationFailure: return EHTP_VERIFICATION_FAILURE;
    case ErrorCode::kSchema: return EHTP_SCHEMA;
  }
  return EHTP_INTERNAL;
}

template <class F>
ehtp_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return EHTP_OK;
  } catch (const ehtp::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return EHTP_SCHEMA;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return EHTP_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return EHTP_INTERNAL;
  }
}

void require(bool cond, const char* msg) {
  if (!cond) ehtp::fail(ehtp::ErrorCode::kInvalidArgument, msg);
}

ehtp::Mat read_matrix(const double* data, size_t dim) {
  ehtp::Mat m(dim, dim);
  for (size_t r = 0; r < dim; ++r) {
    for (size_t c = 0; c < dim; ++c) {
      const size_t k = 2 * (r * dim + c);
      m(r, c) = ehtp::cplx(data[k], data[k + 1]);
    }
  }
  return m;
}

void write_matrix(const ehtp::Mat& m, double* data) {
  const auto dim = static_cast<size_t>(m.rows());
  for (size_t r = 0; r < dim; ++r) {
    for (size_t c = 0; c < dim; ++c) {
      const size_t k = 2 * (r * dim + c);
      data[k] = m(r, c).real();
      data[k + 1] = m(r, c).imag();
    }
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* ehtp_version(void) { return "0.1.0"; }

const char* ehtp_last_error(void) { return last_error.c_str(); }

ehtp_status ehtp_group_cyclic_product(const int* shape, size_t rank, ehtp_group** out) {
  return guarded([&] {
    require(out != nullptr && (shape != nullptr || rank == 0), "null argument");
    *out = new ehtp_group{ehtp::FiniteGroup::cyclic_product(std::vector<int>(shape, shape + rank))};
  });
}

ehtp_status ehtp_group_from_cayley(const int* table, size_t order, ehtp_group** out) {
  return guarded([&] {
    require(out != nullptr && table != nullptr, "null argument");
    std::vector<std::vector<int>> rows(order);
    for (size_t r = 0; r < order; ++r) rows[r].assign(table + r * order, table + (r + 1) * order);
    *out = new ehtp_group{ehtp::FiniteGroup::from_cayley(rows)};
  });
}

ehtp_status ehtp_group_from_json(const char* json, ehtp_group** out) {
  return guarded([&] {
    require(out != nullptr && json != nullptr, "null argument");
    *out = new ehtp_group{ehtp::group_from_json(nlohmann::json::parse(json))};
  });
}

int ehtp_group_order(const ehtp_group* g) { return g ? g->g->order() : 0; }

void ehtp_group_free(ehtp_group* g) { delete g; }

ehtp_status ehtp_measure_create(const ehtp_group* g, const double* weights, ehtp_measure** out) {
  return guarded([&] {
    require(g != nullptr && weights != nullptr && out != nullptr, "null argument");
    std::vector<ehtp::cplx> w(g->g->order());
    for (size_t s = 0; s < w.size(); ++s) w[s] = {weights[2 * s], weights[2 * s + 1]};
    *out = new ehtp_measure{ehtp::Measure(g->g, std::move(w))};
  });
}

ehtp_status ehtp_measure_dirac(const ehtp_group* g, int element, ehtp_measure** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = new ehtp_measure{ehtp::Measure::dirac(g->g, element)};
  });
}

ehtp_status ehtp_measure_convolve(const ehtp_measure* mu, const ehtp_measure* nu, ehtp_measure** out) {
  return guarded([&] {
    require(mu != nullptr && nu != nullptr && out != nullptr, "null argument");
    *out = new ehtp_measure{ehtp::convolve(mu->mu, nu->mu)};
  });
}

ehtp_status ehtp_measure_weights(const ehtp_measure* mu, double* weights, size_t len) {
  return guarded([&] {
    require(mu != nullptr && weights != nullptr, "null argument");
    const auto& w = mu->mu.weights();
    require(len >= 2 * w.size(), "buffer too small");
    for (size_t s = 0; s < w.size(); ++s) {
      weights[2 * s] = w[s].real();
      weights[2 * s + 1] = w[s].imag();
    }
  });
}

double ehtp_measure_norm(const ehtp_measure* mu) { return mu ? mu->mu.norm() : 0.0; }

ehtp_status ehtp_fourier_stieltjes(const ehtp_measure* mu, const int* exponents, size_t rank, double* re,
                                   double* im) {
  return guarded([&] {
    require(mu != nullptr && re != nullptr && im != nullptr && (exponents != nullptr || rank == 0),
            "null argument");
    const auto z = ehtp::fourier_stieltjes(mu->mu, ehtp::Character{std::vector<int>(exponents, exponents + rank)});
    *re = z.real();
    *im = z.imag();
  });
}

void ehtp_measure_free(ehtp_measure* mu) { delete mu; }

ehtp_status ehtp_rep_from_matrices(const ehtp_group* g, size_t dim, const double* matrices, ehtp_rep** out) {
  return guarded([&] {
    require(g != nullptr && matrices != nullptr && out != nullptr, "null argument");
    require(dim > 0, "dimension must be positive");
    std::vector<ehtp::Mat> mats;
    for (int s = 0; s < g->g->order(); ++s) mats.push_back(read_matrix(matrices + 2 * dim * dim * s, dim));
    *out = new ehtp_rep{ehtp::Representation::from_matrices(g->g, std::move(mats))};
  });
}

ehtp_status ehtp_rep_from_characters(const ehtp_group* g, const int* exponents, size_t dim, ehtp_rep** out) {
  return guarded([&] {
    require(g != nullptr && exponents != nullptr && out != nullptr, "null argument");
    const size_t rank = g->g->require_shape("ehtp_rep_from_characters").size();
    std::vector<ehtp::Character> chars;
    for (size_t j = 0; j < dim; ++j) {
      chars.push_back({std::vector<int>(exponents + j * rank, exponents + (j + 1) * rank)});
    }
    *out = new ehtp_rep{ehtp::Representation::from_characters(g->g, chars)};
  });
}

ehtp_status ehtp_rep_regular(const ehtp_group* g, ehtp_rep** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = new ehtp_rep{ehtp::Representation::regular(g->g)};
  });
}

int ehtp_rep_dim(const ehtp_rep* pi) { return pi ? pi->pi.dim() : 0; }

void ehtp_rep_free(ehtp_rep* pi) { delete pi; }

ehtp_status ehtp_operator_create(size_t dim, const double* a, const double* b, size_t count, ehtp_operator** out) {
  return guarded([&] {
    require(out != nullptr && (count == 0 || (a != nullptr && b != nullptr)), "null argument");
    require(dim > 0, "dimension must be positive");
    std::vector<ehtp::Term> terms;
    for (size_t i = 0; i < count; ++i) {
      terms.push_back({read_matrix(a + 2 * dim * dim * i, dim), read_matrix(b + 2 * dim * dim * i, dim)});
    }
    *out = new ehtp_operator{ehtp::ElementaryOperator(static_cast<int>(dim), std::move(terms))};
  });
}

ehtp_status ehtp_gamma(const ehtp_rep* pi, const ehtp_measure* mu, ehtp_operator** out) {
  return guarded([&] {
    require(pi != nullptr && mu != nullptr && out != nullptr, "null argument");
    *out = new ehtp_operator{ehtp::gamma(pi->pi, mu->mu).op};
  });
}

int ehtp_operator_dim(const ehtp_operator* t) { return t ? t->t.dim() : 0; }

ehtp_status ehtp_operator_apply(const ehtp_operator* t, const double* x, double* y) {
  return guarded([&] {
    require(t != nullptr && x != nullptr && y != nullptr, "null argument");
    write_matrix(ehtp::apply(t->t, read_matrix(x, t->t.dim())), y);
  });
}

ehtp_status ehtp_operator_is_cp(const ehtp_operator* t, int* result) {
  return guarded([&] {
    require(t != nullptr && result != nullptr, "null argument");
    *result = ehtp::is_completely_positive(t->t) ? 1 : 0;
  });
}

ehtp_status ehtp_operator_cb_bounds(const ehtp_operator* t, int max_iters, int restarts, uint64_t seed,
                                    double* lower, double* upper) {
  return guarded([&] {
    require(t != nullptr && lower != nullptr && upper != nullptr, "null argument");
    require(max_iters >= 0 && restarts >= 0, "negative iteration count");
    ehtp::NormOptions opt;
    opt.max_iters = max_iters;
    opt.restarts = restarts;
    opt.seed = seed;
    const auto n = ehtp::haagerup_norm_bounds(t->t, opt);
    *lower = n.lower;
    *upper = n.upper;
  });
}

void ehtp_operator_free(ehtp_operator* t) { delete t; }

void ehtp_run_options_init(ehtp_run_options* options) {
  if (options == nullptr) return;
  *options = ehtp_run_options{};
  options->threads = 1;
}

ehtp_status ehtp_run_scenario(const char* document, const ehtp_run_options* options, char** report,
                              int* exit_code) {
  return guarded([&] {
    require(document != nullptr && report != nullptr && exit_code != nullptr, "null argument");
    ehtp::RunOptions opt;
    if (options != nullptr) {
      if (options->has_seed) opt.seed = options->seed;
      if (options->has_tol) opt.tol = options->tol;
      opt.quick = options->quick != 0;
      opt.format = options->csv ? ehtp::ReportFormat::kCsv : ehtp::ReportFormat::kJson;
      opt.threads = options->threads > 0 ? options->threads : 1;
    }
    const auto result = ehtp::run_scenarios(document, opt);
    *report = copy_string(result.report);
    *exit_code = result.exit_code;
  });
}

ehtp_status ehtp_selftest(const ehtp_run_options* options, char** report, int* exit_code) {
  return guarded([&] {
    require(report != nullptr && exit_code != nullptr, "null argument");
    ehtp::SelftestOptions opt;
    if (options != nullptr) {
      if (options->has_seed) opt.seed = options->seed;
      opt.quick = options->quick != 0;
      opt.threads = options->threads > 0 ? options->threads : 1;
    }
    const auto result = ehtp::run_selftest(opt);
    *report = copy_string(result.table);
    *exit_code = result.exit_code;
  });
}

void ehtp_string_free(char* s) { std::free(s); }

}  // extern "C"

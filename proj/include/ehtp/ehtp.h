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

#ifndef EHTP_EHTP_H
#define EHTP_EHTP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(EHTP_BUILDING_LIBRARY)
#define EHTP_API __declspec(dllexport)
#else
#define EHTP_API __declspec(dllimport)
#endif
#else
#define EHTP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ehtp_status {
  EHTP_OK = 0,
  EHTP_INVALID_ARGUMENT = 1,
  EHTP_GROUP_MISMATCH = 2,
  EHTP_DIMENSION_MISMATCH = 3,
  EHTP_NON_ABELIAN = 4,
  EHTP_ORDER_BOUND = 5,
  EHTP_NOT_A_REPRESENTATION = 6,
  EHTP_NUMERICAL_FAILURE = 7,
  EHTP_NOT_COMPLETELY_POSITIVE = 8,
  EHTP_NOT_POSITIVE_DEFINITE = 9,
  EHTP_PRECONDITION = 10,
  EHTP_VERIFICATION_FAILURE = 11,
  EHTP_SCHEMA = 12,
  EHTP_INTERNAL = 13
} ehtp_status;

typedef struct ehtp_group ehtp_group;
typedef struct ehtp_measure ehtp_measure;
typedef struct ehtp_rep ehtp_rep;
typedef struct ehtp_operator ehtp_operator;

/* Complex arrays are interleaved (re, im). Matrices are row-major. */

EHTP_API const char* ehtp_version(void);

/* Message for the last failing call on this thread; never NULL. */
EHTP_API const char* ehtp_last_error(void);

/* Z_{shape[0]} x ... x Z_{shape[rank-1]}. */
EHTP_API ehtp_status ehtp_group_cyclic_product(const int* shape, size_t rank, ehtp_group** out);
/* table is order x order, row-major, entries in [0, order). */
EHTP_API ehtp_status ehtp_group_from_cayley(const int* table, size_t order, ehtp_group** out);
EHTP_API ehtp_status ehtp_group_from_json(const char* json, ehtp_group** out);
EHTP_API int ehtp_group_order(const ehtp_group* g);
EHTP_API void ehtp_group_free(ehtp_group* g);

/* weights has 2 * order doubles. */
EHTP_API ehtp_status ehtp_measure_create(const ehtp_group* g, const double* weights, ehtp_measure** out);
EHTP_API ehtp_status ehtp_measure_dirac(const ehtp_group* g, int element, ehtp_measure** out);
EHTP_API ehtp_status ehtp_measure_convolve(const ehtp_measure* mu, const ehtp_measure* nu, ehtp_measure** out);
EHTP_API ehtp_status ehtp_measure_weights(const ehtp_measure* mu, double* weights, size_t len);
EHTP_API double ehtp_measure_norm(const ehtp_measure* mu);
/* Fourier-Stieltjes transform at the character with the given exponents. */
EHTP_API ehtp_status ehtp_fourier_stieltjes(const ehtp_measure* mu, const int* exponents, size_t rank,
                                            double* re, double* im);
EHTP_API void ehtp_measure_free(ehtp_measure* mu);

/* matrices holds order blocks of 2 * dim * dim doubles. */
EHTP_API ehtp_status ehtp_rep_from_matrices(const ehtp_group* g, size_t dim, const double* matrices,
                                            ehtp_rep** out);
/* exponents holds dim * rank ints. */
EHTP_API ehtp_status ehtp_rep_from_characters(const ehtp_group* g, const int* exponents, size_t dim,
                                              ehtp_rep** out);
EHTP_API ehtp_status ehtp_rep_regular(const ehtp_group* g, ehtp_rep** out);
EHTP_API int ehtp_rep_dim(const ehtp_rep* pi);
EHTP_API void ehtp_rep_free(ehtp_rep* pi);

/* a and b hold count blocks of 2 * dim * dim doubles; the map is x -> sum a_i x b_i. */
EHTP_API ehtp_status ehtp_operator_create(size_t dim, const double* a, const double* b, size_t count,
                                          ehtp_operator** out);
EHTP_API ehtp_status ehtp_gamma(const ehtp_rep* pi, const ehtp_measure* mu, ehtp_operator** out);
EHTP_API int ehtp_operator_dim(const ehtp_operator* t);
EHTP_API ehtp_status ehtp_operator_apply(const ehtp_operator* t, const double* x, double* y);
EHTP_API ehtp_status ehtp_operator_is_cp(const ehtp_operator* t, int* result);
EHTP_API ehtp_status ehtp_operator_cb_bounds(const ehtp_operator* t, int max_iters, int restarts, uint64_t seed,
                                             double* lower, double* upper);
EHTP_API void ehtp_operator_free(ehtp_operator* t);

/* Runner. On success *report is a NUL-terminated string released with
   ehtp_string_free and *exit_code follows the CLI convention. */
typedef struct ehtp_run_options {
  int has_seed;
  uint64_t seed;
  int has_tol;
  double tol;
  int quick;
  int csv;
  int threads;
} ehtp_run_options;

EHTP_API void ehtp_run_options_init(ehtp_run_options* options);
EHTP_API ehtp_status ehtp_run_scenario(const char* document, const ehtp_run_options* options, char** report,
                                       int* exit_code);
/* has_seed == 0 selects the default seed. */
EHTP_API ehtp_status ehtp_selftest(const ehtp_run_options* options, char** report, int* exit_code);
EHTP_API void ehtp_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif

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
#include <vector>

#include "linalg.hpp"

namespace ehtp {

struct Term {
  Mat a;
  Mat b;
};

/// The map x -> sum_i a_i x b_i on d x d matrices, kept as its term list.
class ElementaryOperator {
 public:
  ElementaryOperator(int dim, std::vector<Term> terms);

  static ElementaryOperator identity(int dim);

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }

 private:
  int dim_;
  std::vector<Term> terms_;
};

Mat apply(const ElementaryOperator& t, const Mat& x);

/// s o t, with terms (a_i c_j, d_j b_i).
ElementaryOperator compose(const ElementaryOperator& s, const ElementaryOperator& t);

/// The d^2 x d^2 matrix M with vec(T(x)) = M vec(x) (column stacking).
Mat transfer_matrix(const ElementaryOperator& t);

/// omega(a) = trace(W^* a).
cplx trace_pairing(const Mat& w, const Mat& a);

/// sum_i omega(a_i) b_i.
Mat slice_left(const ElementaryOperator& t, const Mat& omega);
/// sum_i omega(b_i) a_i.
Mat slice_right(const ElementaryOperator& t, const Mat& omega);

/// Block (i, j) is T(E_ij).
struct ChoiMatrix {
  int dim = 0;
  Mat matrix;
};
ChoiMatrix choi(const ElementaryOperator& t);

inline constexpr double kCpTol = 1e-9;

/// lambda_min(Choi) / max|lambda(Choi)|, or -inf for a non-Hermitian Choi
/// matrix. Zero for the zero map.
double choi_positivity_ratio(const ElementaryOperator& t);

bool is_completely_positive(const ElementaryOperator& t, double tol = kCpTol);

/// Linearly independent {a_i} with T(x) = sum_i a_i x a_i^*. Starts from the
/// given terms when they already have the form (a, a^*), otherwise from the
/// Choi eigenvectors, then rotates away the null space of the stacked family.
std::vector<Mat> strongly_independent_kraus(const ElementaryOperator& t);

struct PositivityReport {
  int trials = 0;
  bool sampled_positive = true;
  bool completely_positive = false;
  /// Worst lambda_min(T(x)) / ||T(x)|| over the samples.
  double worst_ratio = 1.0;
  bool agree() const { return sampled_positive == completely_positive; }
};

/// For maps that are bimodule maps over the diagonal algebra. Samples PSD
/// inputs (the all-ones matrix first, then rank-one and full-rank g^* g) and
/// reports sampled positivity next to the Choi verdict. Throws kPrecondition
/// when the map is not a diagonal bimodule map.
PositivityReport positive_implies_cp_check(const ElementaryOperator& t, int trials,
                                           std::uint64_t seed = 1);

bool is_diagonal_bimodule_map(const ElementaryOperator& t, double tol = 1e-9);

struct NormOptions {
  int max_iters = 500;
  int restarts = 200;
  std::uint64_t seed = 7;
};

struct NormInterval {
  double lower = 0.0;
  double upper = 0.0;
  int iters = 0;
  /// Representation achieving `upper`.
  std::vector<Term> certificate_terms;
  /// Upper bound after each accepted step, starting with the initial one.
  std::vector<double> upper_trace;
  bool cp_fast_path = false;
};

/// Bounds on the completely bounded (equivalently Haagerup) norm.
NormInterval haagerup_norm_bounds(const ElementaryOperator& t, const NormOptions& options = {});

/// Representation with both families linearly independent, obtained from
/// the input by term balancing and unitary rotations only, so its Haagerup
/// value never exceeds that of the balanced input.
std::vector<Term> minimal_representation(const std::vector<Term>& terms, int dim);

/// ||sum a_i a_i^*||^{1/2} ||sum b_i^* b_i||^{1/2}.
double haagerup_value(const std::vector<Term>& terms, int dim);

}  // namespace ehtp

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

#include "elementary_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "error.hpp"

namespace ehtp {

ElementaryOperator::ElementaryOperator(int dim, std::vector<Term> terms)
    : dim_(dim), terms_(std::move(terms)) {
  if (dim_ < 1) fail(ErrorCode::kInvalidArgument, "operator dimension must be positive");
  for (const auto& t : terms_) {
    if (t.a.rows() != dim_ || t.a.cols() != dim_ || t.b.rows() != dim_ || t.b.cols() != dim_) {
      fail(ErrorCode::kDimensionMismatch, "term matrix does not match operator dimension");
    }
  }
}

ElementaryOperator ElementaryOperator::identity(int dim) {
  return ElementaryOperator(dim, {Term{Mat::Identity(dim, dim), Mat::Identity(dim, dim)}});
}

Mat apply(const ElementaryOperator& t, const Mat& x) {
  if (x.rows() != t.dim() || x.cols() != t.dim()) {
    fail(ErrorCode::kDimensionMismatch, "apply: input has wrong size");
  }
  Mat out = Mat::Zero(t.dim(), t.dim());
  for (const auto& term : t.terms()) out.noalias() += term.a * x * term.b;
  return out;
}

ElementaryOperator compose(const ElementaryOperator& s, const ElementaryOperator& t) {
  if (s.dim() != t.dim()) fail(ErrorCode::kDimensionMismatch, "compose: dimensions differ");
  std::vector<Term> terms;
  terms.reserve(s.terms().size() * t.terms().size());
  for (const auto& outer : s.terms()) {
    for (const auto& inner : t.terms()) {
      terms.push_back(Term{outer.a * inner.a, inner.b * outer.b});
    }
  }
  return ElementaryOperator(s.dim(), std::move(terms));
}

Mat transfer_matrix(const ElementaryOperator& t) {
  const Eigen::Index d = t.dim();
  Mat m = Mat::Zero(d * d, d * d);
  // vec(a x b) = (b^T kron a) vec(x).
  for (const auto& term : t.terms()) {
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        const cplx bji = term.b(i, j);
        if (bji != 0.0) m.block(j * d, i * d, d, d) += bji * term.a;
      }
    }
  }
  return m;
}

cplx trace_pairing(const Mat& w, const Mat& a) {
  return (w.adjoint() * a).trace();
}

Mat slice_left(const ElementaryOperator& t, const Mat& omega) {
  Mat out = Mat::Zero(t.dim(), t.dim());
  for (const auto& term : t.terms()) out += trace_pairing(omega, term.a) * term.b;
  return out;
}

Mat slice_right(const ElementaryOperator& t, const Mat& omega) {
  Mat out = Mat::Zero(t.dim(), t.dim());
  for (const auto& term : t.terms()) out += trace_pairing(omega, term.b) * term.a;
  return out;
}

ChoiMatrix choi(const ElementaryOperator& t) {
  const Eigen::Index d = t.dim();
  ChoiMatrix c{t.dim(), Mat::Zero(d * d, d * d)};
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      c.matrix.block(i * d, j * d, d, d) = ehtp::apply(t, matrix_unit(d, i, j));
    }
  }
  return c;
}

double choi_positivity_ratio(const ElementaryOperator& t) {
  const Mat c = choi(t).matrix;
  const double scale = c.norm();
  if (scale == 0.0) return 0.0;
  if (hermiticity_residual(c) > kCpTol * scale) return -std::numeric_limits<double>::infinity();
  const auto eig = hermitian_eigen(c);
  const double top = std::max(std::abs(eig.values(0)), std::abs(eig.values(eig.values.size() - 1)));
  return eig.values(0) / top;
}

bool is_completely_positive(const ElementaryOperator& t, double tol) {
  return choi_positivity_ratio(t) >= -tol;
}

std::vector<Mat> strongly_independent_kraus(const ElementaryOperator& t) {
  if (!is_completely_positive(t)) {
    fail(ErrorCode::kNotCompletelyPositive, "strongly_independent_kraus: map is not completely positive");
  }
  const Eigen::Index d = t.dim();
  std::vector<Mat> family;
  bool star_form = !t.terms().empty();
  for (const auto& term : t.terms()) {
    const double scale = std::max(1.0, term.a.norm());
    if ((term.b - term.a.adjoint()).norm() > 1e-12 * scale) { star_form = false; break; }
  }
  if (star_form) {
    for (const auto& term : t.terms()) family.push_back(term.a);
  } else {
    const auto eig = hermitian_eigen(choi(t).matrix);
    // Rounding noise in the null space would otherwise yield junk elements.
    const double floor = 1e-12 * std::max(0.0, eig.values.maxCoeff());
    for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
      if (eig.values(k) > floor) family.push_back(std::sqrt(eig.values(k)) * unvec(eig.vectors.col(k), d));
    }
  }
  if (family.empty()) return {};

  // B = [vec b_1 ... vec b_J]; rotating by the right singular vectors puts
  // the null space of B in the trailing columns, which are then zero.
  Mat stacked(d * d, static_cast<Eigen::Index>(family.size()));
  for (std::size_t j = 0; j < family.size(); ++j) stacked.col(static_cast<Eigen::Index>(j)) = vec(family[j]);
  Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const Mat rotated = stacked * svd.matrixV();
  std::vector<Mat> out;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > 1e-9 * s(0)) out.push_back(unvec(rotated.col(k), d));
  }

  double err = 0.0, scale = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const Mat e = matrix_unit(d, i, j);
      const Mat expect = ehtp::apply(t, e);
      Mat got = Mat::Zero(d, d);
      for (const auto& a : out) got += a * e * a.adjoint();
      err = std::max(err, (got - expect).norm());
      scale = std::max(scale, expect.norm());
    }
  }
  if (err > 1e-9 * std::max(1.0, scale)) {
    fail(ErrorCode::kVerificationFailure,
         "Kraus family does not reproduce the map (residual " + std::to_string(err) + ")");
  }
  return out;
}

bool is_diagonal_bimodule_map(const ElementaryOperator& t, double tol) {
  // A bimodule map over the diagonal algebra sends each E_ij into C E_ij,
  // i.e. its transfer matrix is diagonal.
  const Mat m = transfer_matrix(t);
  return off_diagonal_norm(m) <= tol * std::max(1.0, m.norm());
}

PositivityReport positive_implies_cp_check(const ElementaryOperator& t, int trials, std::uint64_t seed) {
  if (!is_diagonal_bimodule_map(t)) {
    fail(ErrorCode::kPrecondition, "positive_implies_cp_check: not a bimodule map over the diagonal algebra");
  }
  const Eigen::Index d = t.dim();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  auto random_matrix = [&](Eigen::Index rows, Eigen::Index cols) {
    Mat g(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = cplx(gauss(rng), gauss(rng));
    return g;
  };

  PositivityReport report;
  for (int k = 0; k < trials; ++k) {
    Mat x;
    if (k == 0) {
      x = Mat::Ones(d, d);
    } else if (k % 2 == 1) {
      const Mat v = random_matrix(d, 1);
      x = v * v.adjoint();
    } else {
      const Mat g = random_matrix(d, d);
      x = g.adjoint() * g;
    }
    const Mat y = ehtp::apply(t, x);
    const double scale = op_norm(y);
    ++report.trials;
    if (scale == 0.0) continue;
    double ratio;
    if (hermiticity_residual(y) > 1e-9 * scale) {
      ratio = -std::numeric_limits<double>::infinity();
    } else {
      ratio = hermitian_eigen(y).values(0) / scale;
    }
    report.worst_ratio = std::min(report.worst_ratio, ratio);
    if (ratio < -1e-9) report.sampled_positive = false;
  }
  report.completely_positive = is_completely_positive(t);
  return report;
}

}  // namespace ehtp

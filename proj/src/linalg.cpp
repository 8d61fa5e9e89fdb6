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

#include "linalg.hpp"

#include <cmath>

#include "error.hpp"

namespace ehtp {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kGroupMismatch: return "group_mismatch";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kNonAbelian: return "non_abelian";
    case ErrorCode::kOrderBound: return "order_bound";
    case ErrorCode::kNotARepresentation: return "not_a_representation";
    case ErrorCode::kNumericalFailure: return "numerical_failure";
    case ErrorCode::kNotCompletelyPositive: return "not_completely_positive";
    case ErrorCode::kNotPositiveDefinite: return "not_positive_definite";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kVerificationFailure: return "verification_failure";
    case ErrorCode::kSchema: return "schema";
  }
  return "unknown";
}

cplx root_of_unity(long long numer, long long denom) {
  long long r = numer % denom;
  if (r < 0) r += denom;
  if (r == 0) return {1.0, 0.0};
  if (2 * r == denom) return {-1.0, 0.0};
  if (4 * r == denom) return {0.0, 1.0};
  if (4 * r == 3 * denom) return {0.0, -1.0};
  return std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(denom));
}

Mat matrix_unit(Eigen::Index d, Eigen::Index i, Eigen::Index j) {
  Mat e = Mat::Zero(d, d);
  e(i, j) = 1.0;
  return e;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vec vec(const Mat& x) {
  return Eigen::Map<const Vec>(x.data(), x.size());
}

Mat unvec(const Vec& v, Eigen::Index rows) {
  if (rows == 0 || v.size() % rows != 0) {
    fail(ErrorCode::kDimensionMismatch, "unvec: length is not a multiple of rows");
  }
  return Eigen::Map<const Mat>(v.data(), rows, v.size() / rows);
}

double op_norm(const Mat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(a);
  return svd.singularValues()(0);
}

HermitianEigen hermitian_eigen(const Mat& h) {
  const Mat sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(sym);
  if (es.info() != Eigen::Success) {
    fail(ErrorCode::kNumericalFailure, "Hermitian eigensolver did not converge");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

std::pair<double, Vec> top_eigenpair(const Mat& h) {
  auto eig = hermitian_eigen(h);
  const Eigen::Index last = eig.values.size() - 1;
  return {eig.values(last), eig.vectors.col(last)};
}

Eigen::Index numerical_rank(const Mat& a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(a);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0) return 0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * s(0)) ++rank;
  }
  return rank;
}

double min_singular_value(const Mat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(a);
  const auto& s = svd.singularValues();
  // A tall d^2 x k matrix has k singular values; a wide one is rank deficient.
  if (a.cols() > a.rows()) return 0.0;
  return s(s.size() - 1);
}

double unitarity_residual(const Mat& u) {
  return (u.adjoint() * u - Mat::Identity(u.cols(), u.cols())).norm();
}

double hermiticity_residual(const Mat& a) {
  return (a - a.adjoint()).norm();
}

double off_diagonal_norm(const Mat& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

Mat hermitian_exp(const Mat& h) {
  auto eig = hermitian_eigen(h);
  const Eigen::VectorXd ex = eig.values.array().exp();
  return eig.vectors * ex.cast<cplx>().asDiagonal() * eig.vectors.adjoint();
}

}  // namespace ehtp

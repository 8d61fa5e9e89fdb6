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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace ehtp {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// exp(2*pi*i*numer/denom) with the numerator reduced first, so equal
/// rationals always give bit-identical values.
cplx root_of_unity(long long numer, long long denom);

Mat matrix_unit(Eigen::Index d, Eigen::Index i, Eigen::Index j);

/// Kronecker product, (A kron B)(i*p + k, j*q + l) = A(i,j) B(k,l).
Mat kron(const Mat& a, const Mat& b);

/// Column-stacking vectorization: vec(X)[j*rows + i] = X(i,j).
Vec vec(const Mat& x);
Mat unvec(const Vec& v, Eigen::Index rows);

double op_norm(const Mat& a);

/// Eigen-decomposition of the Hermitian part of `h`, ascending eigenvalues.
struct HermitianEigen {
  Eigen::VectorXd values;
  Mat vectors;
};
HermitianEigen hermitian_eigen(const Mat& h);

/// Largest eigenvalue and a unit eigenvector of a Hermitian matrix.
std::pair<double, Vec> top_eigenpair(const Mat& h);

/// Count of singular values above rel_tol * largest singular value.
Eigen::Index numerical_rank(const Mat& a, double rel_tol);

/// Smallest singular value (0 for an empty matrix).
double min_singular_value(const Mat& a);

/// ||U^* U - I||_F.
double unitarity_residual(const Mat& u);

double hermiticity_residual(const Mat& a);

/// Sum of squared moduli of the off-diagonal entries, square-rooted.
double off_diagonal_norm(const Mat& a);

/// exp of a Hermitian matrix through its eigendecomposition.
Mat hermitian_exp(const Mat& h);

}  // namespace ehtp

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

#include <vector>

#include "elementary_operator.hpp"
#include "measure.hpp"
#include "representation.hpp"

namespace ehtp {

/// Gamma_pi(mu) = sum_s mu({s}) pi(s) (x) pi(s)^*, one term per support point.
struct GammaImage {
  ElementaryOperator op;
  Measure source;
  Representation rep;
};

GammaImage gamma(const Representation& pi, const Measure& mu);

/// ||transfer(Gamma(mu * nu)) - transfer(Gamma(mu)) transfer(Gamma(nu))||_F.
double homomorphism_residual(const Representation& pi, const Measure& mu, const Measure& nu);

/// L_omega(Gamma(mu)) against pi_1((omega_pi mu)^v), where omega_pi(s) =
/// omega(pi(s)) and v is the reversal s -> s^{-1}. Returns the Frobenius gap.
double slice_identity_residual(const Representation& pi, const Measure& mu, const Mat& omega);

/// The measure (omega_pi mu)^v itself.
Measure slice_measure(const Representation& pi, const Measure& mu, const Mat& omega);

/// Symbol u_jk = mu^(chi_j chi_k^{-1}) over basis indices of the joint
/// eigenbasis; verified against Gamma applied to every V E_jk V^*.
struct SchurForm {
  Mat symbol;
  double residual = 0.0;
};
SchurForm schur_form(const DiagonalizedRep& diag, const Measure& mu, bool verify = true);

inline constexpr double kKernelTransformTol = 1e-10;
inline constexpr double kKernelMatrixTol = 1e-9;

/// mu^ vanishes on E E^{-1}.
bool kernel_test_difference_set(const DiagonalizedRep& diag, const Measure& mu,
                                double tol = kKernelTransformTol);
/// ||(pi (x) conj pi)_1(mu)||_F <= tol d^2.
bool kernel_test_tensor_conjugate(const Representation& pi, const Measure& mu,
                                  double tol = kKernelMatrixTol);
/// ||transfer(Gamma(mu))||_F <= tol d^2.
bool kernel_test_transfer(const Representation& pi, const Measure& mu, double tol = kKernelMatrixTol);

struct RestrictionReport {
  SpectrumSet restricted_spectrum;  // E of pi restricted to H
  SpectrumSet image_spectrum;       // r(E_pi)
  bool sets_equal = false;
  /// max over the probe measures of |mu^(r(sigma)) - (i_* mu)^(sigma)|.
  double transform_residual = 0.0;
  /// Schur-form verification residual for the restricted representation.
  double schur_residual = 0.0;
};

/// Throws kVerificationFailure when the sets differ or the transform
/// identity fails for the probe measures.
RestrictionReport restriction_spectrum_check(const Representation& pi, const Subgroup& h,
                                             const std::vector<Measure>& probes);

}  // namespace ehtp

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

#include "gamma.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"

namespace ehtp {

GammaImage gamma(const Representation& pi, const Measure& mu) {
  require_same_group(pi.group(), mu.group(), "gamma");
  std::vector<Term> terms;
  for (int s = 0; s < pi.group()->order(); ++s) {
    if (mu[s] == 0.0) continue;
    terms.push_back(Term{mu[s] * pi(s), pi(s).adjoint()});
  }
  return GammaImage{ElementaryOperator(pi.dim(), std::move(terms)), mu, pi};
}

double homomorphism_residual(const Representation& pi, const Measure& mu, const Measure& nu) {
  const Mat lhs = transfer_matrix(gamma(pi, convolve(mu, nu)).op);
  const Mat rhs = transfer_matrix(gamma(pi, mu).op) * transfer_matrix(gamma(pi, nu).op);
  return (lhs - rhs).norm();
}

Measure slice_measure(const Representation& pi, const Measure& mu, const Mat& omega) {
  std::vector<cplx> omega_pi(pi.group()->order());
  for (int s = 0; s < pi.group()->order(); ++s) omega_pi[s] = trace_pairing(omega, pi(s));
  return reverse(weighted(mu, omega_pi));
}

double slice_identity_residual(const Representation& pi, const Measure& mu, const Mat& omega) {
  const Mat lhs = slice_left(gamma(pi, mu).op, omega);
  const Mat rhs = integrate(pi, slice_measure(pi, mu, omega));
  return (lhs - rhs).norm();
}

SchurForm schur_form(const DiagonalizedRep& diag, const Measure& mu, bool verify) {
  const FiniteGroup& g = *mu.group();
  g.require_shape("schur_form");
  const auto d = static_cast<Eigen::Index>(diag.char_of_index.size());
  SchurForm out{Mat(d, d), 0.0};
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) {
      const Character c = multiply(g, diag.char_of_index[j], inverse(g, diag.char_of_index[k]));
      out.symbol(j, k) = fourier_stieltjes(mu, c);
    }
  }
  const auto image = gamma(diag.rep, mu);
  const Mat& v = diag.basis;
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) {
      const Mat x = v.col(j) * v.col(k).adjoint();
      out.residual = std::max(out.residual, (ehtp::apply(image.op, x) - out.symbol(j, k) * x).norm());
    }
  }
  if (verify && out.residual > 1e-9 * std::max(1.0, mu.norm())) {
    fail(ErrorCode::kVerificationFailure,
         "Gamma is not the Schur multiplier of its symbol (residual " + std::to_string(out.residual) + ")");
  }
  return out;
}

bool kernel_test_difference_set(const DiagonalizedRep& diag, const Measure& mu, double tol) {
  const SpectrumSet diffs = difference_set(diag.spectrum);
  double worst = 0.0;
  for (const auto& c : diffs.characters()) worst = std::max(worst, std::abs(fourier_stieltjes(mu, c)));
  return worst <= tol;
}

bool kernel_test_tensor_conjugate(const Representation& pi, const Measure& mu, double tol) {
  const double d = pi.dim();
  return integrate(tensor_conjugate(pi), mu).norm() <= tol * d * d;
}

bool kernel_test_transfer(const Representation& pi, const Measure& mu, double tol) {
  const double d = pi.dim();
  return transfer_matrix(gamma(pi, mu).op).norm() <= tol * d * d;
}

RestrictionReport restriction_spectrum_check(const Representation& pi, const Subgroup& h,
                                             const std::vector<Measure>& probes) {
  const DiagonalizedRep full = diagonalize(pi);
  const Representation sub = pi.restricted(h);
  const DiagonalizedRep part = diagonalize(sub);
  RestrictionReport report{part.spectrum, h.restrict(full.spectrum)};
  report.sets_equal = report.restricted_spectrum == report.image_spectrum;
  if (!report.sets_equal) {
    fail(ErrorCode::kVerificationFailure, "restricted spectrum differs from r(E_pi)");
  }
  for (const auto& mu : probes) {
    const Measure pushed = push_forward(h, mu);
    for (const auto& sigma : full.spectrum.characters()) {
      const cplx lhs = fourier_stieltjes(mu, h.restrict(sigma));
      const cplx rhs = fourier_stieltjes(pushed, sigma);
      report.transform_residual = std::max(report.transform_residual, std::abs(lhs - rhs));
    }
    report.schur_residual = std::max(report.schur_residual, schur_form(part, mu).residual);
  }
  if (report.transform_residual > 1e-9) {
    fail(ErrorCode::kVerificationFailure, "transform of the pushforward disagrees with restriction");
  }
  return report;
}

}  // namespace ehtp

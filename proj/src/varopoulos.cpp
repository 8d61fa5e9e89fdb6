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

#include "varopoulos.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "error.hpp"

namespace ehtp {

bool VFunction::is_hermitian(double tol) const {
  return hermiticity_residual(values) <= tol * std::max(1.0, values.norm());
}

VFunction from_measure(const DiagonalizedRep& diag, const Measure& mu) {
  const FiniteGroup& g = *mu.group();
  g.require_shape("from_measure");
  const auto& e = diag.spectrum;
  const auto n = static_cast<Eigen::Index>(e.size());
  Mat u(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      u(j, k) = fourier_stieltjes(mu, multiply(g, e[j], inverse(g, e[k])));
    }
  }
  return VFunction{e, std::move(u)};
}

bool is_positive_definite(const Mat& u, double tol) {
  const double scale = u.norm();
  if (scale == 0.0) return true;
  if (hermiticity_residual(u) > tol * scale) return false;
  const auto eig = hermitian_eigen(u);
  const double top = std::max(std::abs(eig.values(0)), std::abs(eig.values(eig.values.size() - 1)));
  return eig.values(0) >= -tol * top;
}

bool is_positive_definite(const VFunction& u, double tol) {
  return is_positive_definite(u.values, tol);
}

std::vector<Vec> gram_factorize(const VFunction& u) {
  if (!is_positive_definite(u)) {
    fail(ErrorCode::kNotPositiveDefinite, "gram_factorize: function is not positive definite");
  }
  const auto eig = hermitian_eigen(u.values);
  const double top = eig.values(eig.values.size() - 1);
  std::vector<Vec> phis;
  for (Eigen::Index k = eig.values.size(); k-- > 0;) {
    if (eig.values(k) > 1e-10 * top) phis.push_back(std::sqrt(eig.values(k)) * eig.vectors.col(k));
  }
  return phis;
}

EquivalenceReport equivalence_suite(const DiagonalizedRep& diag, const Measure& mu, int trials,
                                    std::uint64_t seed) {
  EquivalenceReport r;
  const auto image = gamma(diag.rep, mu);
  r.completely_positive = is_completely_positive(image.op);
  r.positive_definite = is_positive_definite(from_measure(diag, mu));
  r.augmentation_ideal = in_augmentation_ideal(mu);
  if (r.completely_positive != r.positive_definite) {
    fail(ErrorCode::kVerificationFailure, "complete positivity and positive definiteness disagree");
  }

  // In the eigenbasis Gamma(mu) is a bimodule map over the diagonal algebra.
  const Mat& v = diag.basis;
  std::vector<Term> rotated;
  for (const auto& t : image.op.terms()) {
    rotated.push_back(Term{v.adjoint() * t.a * v, v.adjoint() * t.b * v});
  }
  const ElementaryOperator in_basis(image.op.dim(), std::move(rotated));
  if (!in_basis.terms().empty()) {
    const auto sampled = positive_implies_cp_check(in_basis, trials, seed);
    r.sampled_positive = sampled.sampled_positive;
    r.sampled_trials = sampled.trials;
    if (sampled.completely_positive != r.completely_positive) {
      fail(ErrorCode::kVerificationFailure, "Choi verdict changed under a unitary change of basis");
    }
    if (r.completely_positive && !r.sampled_positive) {
      fail(ErrorCode::kVerificationFailure, "sampling found a non-positive output of a CP map");
    }
  } else {
    r.sampled_positive = true;
  }

  if (r.completely_positive) {
    const auto kraus = strongly_independent_kraus(image.op);
    r.kraus_count = static_cast<int>(kraus.size());
    const Eigen::Index d = image.op.dim();
    Mat stacked(d * d, static_cast<Eigen::Index>(kraus.size()));
    for (std::size_t i = 0; i < kraus.size(); ++i) {
      stacked.col(static_cast<Eigen::Index>(i)) = vec(kraus[i]);
      r.kraus_off_diagonal = std::max(r.kraus_off_diagonal, off_diagonal_norm(v.adjoint() * kraus[i] * v));
    }
    r.kraus_min_singular = kraus.empty() ? 0.0 : min_singular_value(stacked);
    if (!kraus.empty() && r.kraus_off_diagonal > 1e-8 * std::max(1.0, std::sqrt(mu.norm()))) {
      fail(ErrorCode::kVerificationFailure, "Kraus element is not diagonal in the eigenbasis");
    }
  }
  return r;
}

std::string symbol_csv(const VFunction& u) {
  auto label = [](const Character& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.exponents.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c.exponents[i]);
    }
    return s + ")";
  };
  std::ostringstream os;
  os << std::setprecision(17);
  os << "sigma\\tau";
  for (const auto& c : u.spectrum.characters()) os << ',' << label(c);
  os << '\n';
  for (Eigen::Index j = 0; j < u.values.rows(); ++j) {
    os << label(u.spectrum[static_cast<std::size_t>(j)]);
    for (Eigen::Index k = 0; k < u.values.cols(); ++k) {
      const cplx z = u.values(j, k);
      os << ',' << z.real();
      if (z.imag() != 0.0) os << (z.imag() < 0 ? "" : "+") << z.imag() << 'i';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace ehtp

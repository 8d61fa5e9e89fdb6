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
#include <string>
#include <vector>

#include "gamma.hpp"

namespace ehtp {

/// A function on E x E for a finite set of characters E, stored as the
/// matrix [u(sigma, tau)] indexed in the order of the spectrum set.
struct VFunction {
  SpectrumSet spectrum;
  Mat values;

  bool is_hermitian(double tol = 1e-12) const;
};

/// u(sigma, tau) = mu^(sigma tau^{-1}) on E_pi x E_pi.
VFunction from_measure(const DiagonalizedRep& diag, const Measure& mu);

bool is_positive_definite(const VFunction& u, double tol = 1e-9);
bool is_positive_definite(const Mat& u, double tol = 1e-9);

/// phi_i = sqrt(lambda_i) v_i over eigenvalues above 1e-10 lambda_max, so
/// that u(sigma, tau) = sum_i phi_i(sigma) conj(phi_i(tau)).
std::vector<Vec> gram_factorize(const VFunction& u);

struct EquivalenceReport {
  bool completely_positive = false;      // Choi test on Gamma(mu)
  bool positive_definite = false;        // PSD test on the symbol
  bool sampled_positive = false;         // sampled positivity, not a proof
  int sampled_trials = 0;
  int kraus_count = 0;
  double kraus_min_singular = 0.0;       // of the stacked vectorizations
  double kraus_off_diagonal = 0.0;       // max ||off-diag(V^* a_i V)||_F
  bool augmentation_ideal = false;
};

/// Throws kVerificationFailure if CP and positive definiteness disagree, if
/// sampling finds a non-positive output of a CP map, or if the Kraus family
/// of a CP instance fails to be diagonal in the eigenbasis.
EquivalenceReport equivalence_suite(const DiagonalizedRep& diag, const Measure& mu,
                                    int trials = 16, std::uint64_t seed = 1);

/// CSV with character exponent tuples as row and column headers.
std::string symbol_csv(const VFunction& u);

}  // namespace ehtp

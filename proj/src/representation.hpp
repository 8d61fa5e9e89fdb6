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

#include "group.hpp"
#include "measure.hpp"

namespace ehtp {

/// A unitary homomorphism G -> U(d), one d x d matrix per element.
class Representation {
 public:
  /// Validates unitarity, pi(e) = I and the homomorphism law (exhaustive for
  /// |G| <= 64, 200 sampled pairs above); throws kNotARepresentation.
  static Representation from_matrices(GroupPtr group, std::vector<Mat> matrices);
  static Representation regular(GroupPtr group);
  /// Diagonal representation s -> diag(chi_1(s), ..., chi_d(s)).
  static Representation from_characters(GroupPtr group, const std::vector<Character>& chars);
  static Representation trivial(GroupPtr group, int dim);

  const GroupPtr& group() const { return group_; }
  int dim() const { return dim_; }
  const Mat& operator()(int s) const { return matrices_[s]; }
  const std::vector<Mat>& matrices() const { return matrices_; }

  /// s -> u pi(s) u^* for a unitary u.
  Representation conjugated(const Mat& u) const;
  Representation restricted(const Subgroup& h) const;

 private:
  Representation(GroupPtr group, int dim, std::vector<Mat> matrices)
      : group_(std::move(group)), dim_(dim), matrices_(std::move(matrices)) {}

  GroupPtr group_;
  int dim_ = 0;
  std::vector<Mat> matrices_;
};

struct RepresentationDefects {
  double unitarity = 0.0;     // max_s ||pi(s)^* pi(s) - I||_F
  double identity = 0.0;      // ||pi(e) - I||_F
  double homomorphism = 0.0;  // max over checked pairs ||pi(s)pi(t) - pi(st)||_F
};
RepresentationDefects representation_defects(const GroupPtr& group, const std::vector<Mat>& matrices);

/// pi_1(mu) = sum_s mu({s}) pi(s).
Mat integrate(const Representation& pi, const Measure& mu);

/// Joint eigenbasis of an abelian representation with the character carried
/// by each basis vector. Columns are sorted by character.
struct DiagonalizedRep {
  Representation rep;
  Mat basis;
  std::vector<Character> char_of_index;
  SpectrumSet spectrum;
  double reconstruction_residual = 0.0;
  /// False when the randomized combination failed and eigenspaces were
  /// refined one group element at a time.
  bool used_refinement = false;
};

DiagonalizedRep diagonalize(const Representation& pi, std::uint64_t seed = 0x5eed5eedULL);

/// sigma -> mu^(sigma) on the spectrum, after checking that V^* pi_1(mu) V is
/// diagonal with those entries (kVerificationFailure otherwise).
std::vector<cplx> gelfand(const DiagonalizedRep& diag, const Measure& mu);

/// s -> pi(s) kron conj(pi(s)).
Representation tensor_conjugate(const Representation& pi);

/// For the diagonal algebra on C^dim, builds xi = xi_1 + p_2 xi_2 + ... with
/// p_i the projection onto the coordinates first reached by xi_i.
Vec cyclic_vector(Eigen::Index dim, const std::vector<Vec>& vectors);

/// rank([diag(xi) | vectors]) == rank(diag(xi)) at relative threshold tol.
bool orbit_contains(const Vec& xi, const std::vector<Vec>& vectors, double tol = 1e-9);

}  // namespace ehtp

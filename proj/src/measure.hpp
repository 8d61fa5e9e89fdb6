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

#include "group.hpp"

namespace ehtp {

inline constexpr double kMeasureTol = 1e-10;

/// A complex measure on a finite group: one point mass per element.
class Measure {
 public:
  Measure(GroupPtr group, std::vector<cplx> weights);

  static Measure zero(GroupPtr group);
  static Measure dirac(GroupPtr group, int s);
  /// Density with respect to normalized counting measure: mu({s}) = f(s)/|G|.
  static Measure from_density(GroupPtr group, std::vector<cplx> density);

  const GroupPtr& group() const { return group_; }
  const std::vector<cplx>& weights() const { return weights_; }
  cplx operator[](int s) const { return weights_[s]; }

  /// Total variation norm, sum_s |mu({s})|.
  double norm() const;
  /// mu(G).
  cplx total_mass() const;
  bool is_positive() const;

  Measure operator+(const Measure& other) const;
  Measure operator-(const Measure& other) const;
  Measure operator*(cplx scale) const;

  /// Max coefficient distance; throws on group mismatch.
  double distance(const Measure& other) const;

 private:
  GroupPtr group_;
  std::vector<cplx> weights_;
};

/// (mu * nu)({t}) = sum_s mu({s}) nu({s^{-1} t}).
Measure convolve(const Measure& mu, const Measure& nu);

/// s -> mu({s^{-1}}).
Measure reverse(const Measure& mu);
/// s -> conj(mu({s})).
Measure conjugate(const Measure& mu);
/// The involution s -> conj(mu({s^{-1}})).
Measure reverse_conj(const Measure& mu);

/// Pointwise product with a function on G: (f mu)({s}) = f(s) mu({s}).
Measure weighted(const Measure& mu, const std::vector<cplx>& f);

/// mu^(sigma) = sum_s sigma(s) mu({s}); no conjugate on sigma.
cplx fourier_stieltjes(const Measure& mu, const Character& sigma);

bool in_augmentation_ideal(const Measure& mu, double tol = kMeasureTol);

/// Measure with prescribed transform on the whole dual group, by inverse DFT.
Measure from_transform(const GroupPtr& g, const std::vector<cplx>& transform);

/// Pushforward of a measure on a subgroup into the parent group.
Measure push_forward(const Subgroup& h, const Measure& mu);

}  // namespace ehtp

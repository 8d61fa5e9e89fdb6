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

#include "measure.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace ehtp {

Measure::Measure(GroupPtr group, std::vector<cplx> weights)
    : group_(std::move(group)), weights_(std::move(weights)) {
  if (!group_) fail(ErrorCode::kInvalidArgument, "measure requires a group");
  if (weights_.size() != static_cast<std::size_t>(group_->order())) {
    fail(ErrorCode::kInvalidArgument, "measure weight count differs from group order");
  }
}

Measure Measure::zero(GroupPtr group) {
  const int n = group->order();
  return Measure(std::move(group), std::vector<cplx>(n));
}

Measure Measure::dirac(GroupPtr group, int s) {
  if (s < 0 || s >= group->order()) fail(ErrorCode::kInvalidArgument, "dirac: element out of range");
  std::vector<cplx> w(group->order());
  w[s] = 1.0;
  return Measure(std::move(group), std::move(w));
}

Measure Measure::from_density(GroupPtr group, std::vector<cplx> density) {
  const double n = group->order();
  if (density.size() != static_cast<std::size_t>(group->order())) {
    fail(ErrorCode::kInvalidArgument, "density length differs from group order");
  }
  for (auto& v : density) v /= n;
  return Measure(std::move(group), std::move(density));
}

double Measure::norm() const {
  double s = 0.0;
  for (const auto& w : weights_) s += std::abs(w);
  return s;
}

cplx Measure::total_mass() const {
  cplx s = 0.0;
  for (const auto& w : weights_) s += w;
  return s;
}

bool Measure::is_positive() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](cplx w) { return w.imag() == 0.0 && w.real() >= 0.0; });
}

Measure Measure::operator+(const Measure& other) const {
  require_same_group(group_, other.group_, "measure +");
  std::vector<cplx> w(weights_);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += other.weights_[i];
  return Measure(group_, std::move(w));
}

Measure Measure::operator-(const Measure& other) const {
  return *this + other * cplx(-1.0);
}

Measure Measure::operator*(cplx scale) const {
  std::vector<cplx> w(weights_);
  for (auto& v : w) v *= scale;
  return Measure(group_, std::move(w));
}

double Measure::distance(const Measure& other) const {
  require_same_group(group_, other.group_, "measure distance");
  double d = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) d = std::max(d, std::abs(weights_[i] - other.weights_[i]));
  return d;
}

Measure convolve(const Measure& mu, const Measure& nu) {
  require_same_group(mu.group(), nu.group(), "convolve");
  const FiniteGroup& g = *mu.group();
  std::vector<cplx> out(g.order());
  for (int s = 0; s < g.order(); ++s) {
    if (mu[s] == 0.0) continue;
    for (int u = 0; u < g.order(); ++u) {
      // t = s u, so nu is evaluated at s^{-1} t = u.
      out[g.mul(s, u)] += mu[s] * nu[u];
    }
  }
  return Measure(mu.group(), std::move(out));
}

Measure reverse(const Measure& mu) {
  const FiniteGroup& g = *mu.group();
  std::vector<cplx> out(g.order());
  for (int s = 0; s < g.order(); ++s) out[s] = mu[g.inverse(s)];
  return Measure(mu.group(), std::move(out));
}

Measure conjugate(const Measure& mu) {
  std::vector<cplx> out(mu.weights());
  for (auto& v : out) v = std::conj(v);
  return Measure(mu.group(), std::move(out));
}

Measure reverse_conj(const Measure& mu) {
  return conjugate(reverse(mu));
}

Measure weighted(const Measure& mu, const std::vector<cplx>& f) {
  if (f.size() != mu.weights().size()) {
    fail(ErrorCode::kInvalidArgument, "weight function length differs from group order");
  }
  std::vector<cplx> out(mu.weights());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= f[i];
  return Measure(mu.group(), std::move(out));
}

cplx fourier_stieltjes(const Measure& mu, const Character& sigma) {
  const FiniteGroup& g = *mu.group();
  validate_character(g, sigma);
  cplx s = 0.0;
  for (int x = 0; x < g.order(); ++x) {
    if (mu[x] != 0.0) s += evaluate(g, sigma, x) * mu[x];
  }
  return s;
}

bool in_augmentation_ideal(const Measure& mu, double tol) {
  return std::abs(mu.total_mass()) <= tol;
}

Measure from_transform(const GroupPtr& g, const std::vector<cplx>& transform) {
  const SpectrumSet dual = dual_group(g);
  if (transform.size() != dual.size()) {
    fail(ErrorCode::kInvalidArgument, "transform length differs from dual group order");
  }
  const double n = g->order();
  std::vector<cplx> w(g->order());
  for (int s = 0; s < g->order(); ++s) {
    cplx acc = 0.0;
    for (std::size_t k = 0; k < dual.size(); ++k) {
      if (transform[k] != 0.0) acc += transform[k] * std::conj(evaluate(*g, dual[k], s));
    }
    w[s] = acc / n;
  }
  return Measure(g, std::move(w));
}

Measure push_forward(const Subgroup& h, const Measure& mu) {
  require_same_group(h.group, mu.group(), "push_forward");
  std::vector<cplx> w(h.parent->order());
  for (int x = 0; x < h.group->order(); ++x) w[h.embedding[x]] += mu[x];
  return Measure(h.parent, std::move(w));
}

}  // namespace ehtp

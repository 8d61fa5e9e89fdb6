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

#include "instances.hpp"

#include <algorithm>
#include <array>

namespace ehtp {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, const std::string& stream) {
  // FNV-1a over the label, folded into the seed.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : stream) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(seed ^ splitmix64(h));
}

Mat random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  Mat m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = rng.complex_gauss();
  return m;
}

Mat random_unitary(Rng& rng, Eigen::Index d) {
  const Mat g = random_matrix(rng, d, d);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < d; ++k) {
    const double a = std::abs(r(k, k));
    if (a > 0.0) q.col(k) *= r(k, k) / a;
  }
  return q;
}

Measure random_measure(Rng& rng, const GroupPtr& g) {
  std::vector<cplx> w(g->order());
  for (auto& v : w) v = rng.complex_gauss();
  return Measure(g, std::move(w));
}

Measure random_positive_measure(Rng& rng, const GroupPtr& g) {
  std::vector<cplx> w(g->order());
  for (auto& v : w) v = rng.uniform() < 0.3 ? 0.0 : rng.uniform();
  if (std::all_of(w.begin(), w.end(), [](cplx z) { return z == 0.0; })) w[rng.integer(0, g->order() - 1)] = 1.0;
  return Measure(g, std::move(w));
}

Measure random_sparse_measure(Rng& rng, const GroupPtr& g) {
  std::vector<cplx> w(g->order());
  const int support = rng.integer(1, std::max(1, g->order() / 2));
  for (int k = 0; k < support; ++k) w[rng.integer(0, g->order() - 1)] = rng.complex_gauss();
  return Measure(g, std::move(w));
}

std::vector<Character> random_characters(Rng& rng, const GroupPtr& g, int count) {
  const auto& shape = g->require_shape("random_characters");
  std::vector<Character> out;
  for (int i = 0; i < count; ++i) {
    Character c{std::vector<int>(shape.size())};
    for (std::size_t j = 0; j < shape.size(); ++j) c.exponents[j] = rng.integer(0, shape[j] - 1);
    out.push_back(std::move(c));
  }
  return out;
}

Representation random_abelian_rep(Rng& rng, const GroupPtr& g, int dim, bool rotate) {
  auto pi = Representation::from_characters(g, random_characters(rng, g, dim));
  if (!rotate) return pi;
  return pi.conjugated(random_unitary(rng, dim));
}

GroupPtr symmetric_group_3() {
  // Permutations of {0,1,2} in lexicographic order; (p q)(x) = p(q(x)).
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  auto index_of = [&](const std::array<int, 3>& p) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      table[a][b] = index_of(c);
    }
  }
  return FiniteGroup::from_cayley(table);
}

Representation permutation_rep_s3(const GroupPtr& s3) {
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  std::vector<Mat> m(6, Mat::Zero(3, 3));
  for (int a = 0; a < 6; ++a) {
    for (int x = 0; x < 3; ++x) m[a](perms[a][x], x) = 1.0;
  }
  return Representation::from_matrices(s3, std::move(m));
}

std::vector<NamedGroup> small_group_suite() {
  std::vector<NamedGroup> out;
  for (int n = 2; n <= 12; ++n) out.push_back({"Z" + std::to_string(n), FiniteGroup::cyclic_product({n})});
  out.push_back({"Z2xZ2", FiniteGroup::cyclic_product({2, 2})});
  out.push_back({"Z2xZ4", FiniteGroup::cyclic_product({2, 4})});
  out.push_back({"S3", symmetric_group_3()});
  return out;
}

GroupPtr random_abelian_group(Rng& rng, int max_order) {
  std::vector<int> shape;
  int order = 1;
  const int factors = rng.integer(1, 3);
  for (int f = 0; f < factors; ++f) {
    const int room = max_order / order;
    if (room < 2) break;
    const int n = rng.integer(2, std::min(room, 12));
    shape.push_back(n);
    order *= n;
  }
  if (shape.empty()) shape.push_back(std::max(1, std::min(max_order, 2)));
  return FiniteGroup::cyclic_product(shape);
}

}  // namespace ehtp

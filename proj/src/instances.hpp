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
#include <random>
#include <string>
#include <vector>

#include "group.hpp"
#include "measure.hpp"
#include "representation.hpp"

namespace ehtp {

/// All randomness in the project comes from std::mt19937_64 instances whose
/// state is derived from one 64-bit seed and a stream label through
/// splitmix64. No ambient entropy is used anywhere.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, const std::string& stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, const std::string& stream) : engine_(derive_seed(seed, stream)) {}

  double gauss() { return normal_(engine_); }
  cplx complex_gauss() { return {gauss(), gauss()}; }
  double uniform() { return uniform_(engine_); }
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  std::uint64_t next() { return engine_(); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

Mat random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);
/// Haar-like unitary from the QR factorization of a Gaussian matrix.
Mat random_unitary(Rng& rng, Eigen::Index d);

Measure random_measure(Rng& rng, const GroupPtr& g);
Measure random_positive_measure(Rng& rng, const GroupPtr& g);
/// Random measure supported on a random subset of the group.
Measure random_sparse_measure(Rng& rng, const GroupPtr& g);

std::vector<Character> random_characters(Rng& rng, const GroupPtr& g, int count);
/// Diagonal character representation, optionally rotated by a random unitary.
Representation random_abelian_rep(Rng& rng, const GroupPtr& g, int dim, bool rotate);

/// The symmetric group on three letters as a Cayley table.
GroupPtr symmetric_group_3();
/// S3 acting by permutation matrices on C^3.
Representation permutation_rep_s3(const GroupPtr& s3);

struct NamedGroup {
  std::string name;
  GroupPtr group;
};
/// Z_2..Z_12, Z_2 x Z_2, Z_2 x Z_4 and S3.
std::vector<NamedGroup> small_group_suite();

/// Random abelian cyclic-product group of order at most max_order.
GroupPtr random_abelian_group(Rng& rng, int max_order);

}  // namespace ehtp

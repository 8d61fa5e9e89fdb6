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

#include "representation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "error.hpp"

namespace ehtp {
namespace {

constexpr double kRepTol = 1e-9;
constexpr double kDiagonalTol = 1e-9;
constexpr double kPhaseTol = 1e-6;
constexpr double kReconstructionTol = 1e-8;
constexpr int kExhaustiveOrder = 64;
constexpr int kSampledPairs = 200;

}  // namespace

RepresentationDefects representation_defects(const GroupPtr& group, const std::vector<Mat>& m) {
  RepresentationDefects out;
  const int n = group->order();
  const Eigen::Index d = m.empty() ? 0 : m.front().rows();
  const Mat id = Mat::Identity(d, d);
  for (const auto& u : m) out.unitarity = std::max(out.unitarity, unitarity_residual(u));
  out.identity = (m[group->identity()] - id).norm();
  auto check = [&](int s, int t) {
    out.homomorphism = std::max(out.homomorphism, (m[s] * m[t] - m[group->mul(s, t)]).norm());
  };
  if (n <= kExhaustiveOrder) {
    for (int s = 0; s < n; ++s) for (int t = 0; t < n; ++t) check(s, t);
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = 0; k < kSampledPairs; ++k) check(pick(rng), pick(rng));
  }
  return out;
}

Representation Representation::from_matrices(GroupPtr group, std::vector<Mat> matrices) {
  if (!group) fail(ErrorCode::kInvalidArgument, "representation requires a group");
  if (matrices.size() != static_cast<std::size_t>(group->order())) {
    fail(ErrorCode::kNotARepresentation, "need one matrix per group element");
  }
  const Eigen::Index d = matrices.front().rows();
  for (const auto& u : matrices) {
    if (u.rows() != d || u.cols() != d) {
      fail(ErrorCode::kNotARepresentation, "representation matrices must be square of equal size");
    }
  }
  const auto defects = representation_defects(group, matrices);
  const double tol = kRepTol * std::max<double>(1.0, static_cast<double>(d));
  if (defects.unitarity > tol) {
    fail(ErrorCode::kNotARepresentation,
         "matrix is not unitary (residual " + std::to_string(defects.unitarity) + ")");
  }
  if (defects.identity > tol) fail(ErrorCode::kNotARepresentation, "pi(e) is not the identity");
  if (defects.homomorphism > tol) {
    fail(ErrorCode::kNotARepresentation,
         "homomorphism law fails (residual " + std::to_string(defects.homomorphism) + ")");
  }
  return Representation(std::move(group), static_cast<int>(d), std::move(matrices));
}

Representation Representation::regular(GroupPtr group) {
  const int n = group->order();
  std::vector<Mat> m(n, Mat::Zero(n, n));
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) m[s](group->mul(s, t), t) = 1.0;
  }
  return Representation(std::move(group), n, std::move(m));
}

Representation Representation::from_characters(GroupPtr group, const std::vector<Character>& chars) {
  if (chars.empty()) fail(ErrorCode::kInvalidArgument, "need at least one character");
  for (const auto& c : chars) validate_character(*group, c);
  const int n = group->order();
  const auto d = static_cast<Eigen::Index>(chars.size());
  std::vector<Mat> m(n, Mat::Zero(d, d));
  for (int s = 0; s < n; ++s) {
    for (Eigen::Index j = 0; j < d; ++j) m[s](j, j) = evaluate(*group, chars[j], s);
  }
  return Representation(std::move(group), static_cast<int>(d), std::move(m));
}

Representation Representation::trivial(GroupPtr group, int dim) {
  if (dim < 1) fail(ErrorCode::kInvalidArgument, "dimension must be positive");
  std::vector<Mat> m(group->order(), Mat::Identity(dim, dim));
  return Representation(std::move(group), dim, std::move(m));
}

Representation Representation::conjugated(const Mat& u) const {
  if (u.rows() != dim_ || u.cols() != dim_) {
    fail(ErrorCode::kDimensionMismatch, "conjugating unitary has wrong size");
  }
  if (unitarity_residual(u) > kRepTol * std::max(1, dim_)) {
    fail(ErrorCode::kInvalidArgument, "conjugating matrix is not unitary");
  }
  std::vector<Mat> m;
  m.reserve(matrices_.size());
  for (const auto& p : matrices_) m.push_back(u * p * u.adjoint());
  return Representation(group_, dim_, std::move(m));
}

Representation Representation::restricted(const Subgroup& h) const {
  require_same_group(group_, h.parent, "restricted");
  std::vector<Mat> m;
  m.reserve(h.embedding.size());
  for (int x : h.embedding) m.push_back(matrices_[x]);
  return Representation(h.group, dim_, std::move(m));
}

Mat integrate(const Representation& pi, const Measure& mu) {
  require_same_group(pi.group(), mu.group(), "integrate");
  Mat out = Mat::Zero(pi.dim(), pi.dim());
  for (int s = 0; s < pi.group()->order(); ++s) {
    if (mu[s] != 0.0) out += mu[s] * pi(s);
  }
  return out;
}

namespace {

bool jointly_diagonal(const Representation& pi, const Mat& v) {
  const double tol = kDiagonalTol * std::max(1, pi.dim());
  for (const auto& p : pi.matrices()) {
    if (off_diagonal_norm(v.adjoint() * p * v) > tol) return false;
  }
  return true;
}

// Splits the current eigenspaces one matrix at a time. Each block is
// invariant under every pi(s), so the compression stays normal and its
// Schur form is diagonal.
Mat refine_sequentially(const Representation& pi) {
  const int d = pi.dim();
  Mat v = Mat::Identity(d, d);
  std::vector<std::vector<Eigen::Index>> blocks(1);
  for (Eigen::Index j = 0; j < d; ++j) blocks[0].push_back(j);
  for (const auto& p : pi.matrices()) {
    std::vector<std::vector<Eigen::Index>> next;
    for (const auto& cols : blocks) {
      const auto k = static_cast<Eigen::Index>(cols.size());
      Mat vc(d, k);
      for (Eigen::Index c = 0; c < k; ++c) vc.col(c) = v.col(cols[c]);
      Eigen::ComplexSchur<Mat> schur(vc.adjoint() * p * vc);
      const Mat rotated = vc * schur.matrixU();
      const Vec lambda = schur.matrixT().diagonal();
      for (Eigen::Index c = 0; c < k; ++c) v.col(cols[c]) = rotated.col(c);
      std::vector<std::vector<Eigen::Index>> clusters;
      std::vector<cplx> reps;
      for (Eigen::Index c = 0; c < k; ++c) {
        std::size_t hit = reps.size();
        for (std::size_t r = 0; r < reps.size(); ++r) {
          if (std::abs(lambda(c) - reps[r]) < kPhaseTol) { hit = r; break; }
        }
        if (hit == reps.size()) { reps.push_back(lambda(c)); clusters.emplace_back(); }
        clusters[hit].push_back(cols[c]);
      }
      for (auto& cl : clusters) next.push_back(std::move(cl));
    }
    blocks = std::move(next);
  }
  return v;
}

}  // namespace

DiagonalizedRep diagonalize(const Representation& pi, std::uint64_t seed) {
  const GroupPtr& g = pi.group();
  const auto& shape = g->require_shape("diagonalize");
  const int d = pi.dim();
  const int n = g->order();

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Mat v;
  bool found = false;
  for (int attempt = 0; attempt < 5 && !found; ++attempt) {
    Mat h = Mat::Zero(d, d);
    for (int s = 0; s < n; ++s) {
      const Mat& p = pi(s);
      const double c = gauss(rng), c2 = gauss(rng);
      h += c * (p + p.adjoint()) + cplx(0.0, c2) * (p - p.adjoint());
    }
    v = hermitian_eigen(h).vectors;
    found = jointly_diagonal(pi, v);
  }
  bool refined = false;
  if (!found) {
    v = refine_sequentially(pi);
    refined = true;
    if (!jointly_diagonal(pi, v)) {
      fail(ErrorCode::kNumericalFailure, "matrices could not be simultaneously diagonalized");
    }
  }

  // Read each basis vector's character off the factor generators.
  std::vector<Character> chars(d, Character{std::vector<int>(shape.size(), 0)});
  for (std::size_t j = 0; j < shape.size(); ++j) {
    std::vector<int> unit(shape.size(), 0);
    unit[j] = shape[j] > 1 ? 1 : 0;
    const Mat m = v.adjoint() * pi(g->element(unit)) * v;
    for (int c = 0; c < d; ++c) {
      const cplx lambda = m(c, c);
      if (std::abs(std::abs(lambda) - 1.0) > kPhaseTol) {
        fail(ErrorCode::kNumericalFailure, "eigenvalue is off the unit circle");
      }
      const double t = std::arg(lambda) / kTwoPi * shape[j];
      const double k = std::round(t);
      if (std::abs(t - k) > kPhaseTol) {
        fail(ErrorCode::kNumericalFailure,
             "eigen-phase is not a root of unity of the factor order (residual " +
                 std::to_string(std::abs(t - k)) + ")");
      }
      chars[c].exponents[j] = static_cast<int>(((static_cast<long long>(k) % shape[j]) + shape[j]) % shape[j]);
    }
  }

  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return chars[a] < chars[b]; });
  Mat sorted(d, d);
  std::vector<Character> sorted_chars;
  sorted_chars.reserve(d);
  for (int c = 0; c < d; ++c) {
    sorted.col(c) = v.col(perm[c]);
    sorted_chars.push_back(chars[perm[c]]);
  }

  double residual = 0.0;
  Vec lambda(d);
  for (int s = 0; s < n; ++s) {
    for (int c = 0; c < d; ++c) lambda(c) = evaluate(*g, sorted_chars[c], s);
    residual = std::max(residual, (pi(s) - sorted * lambda.asDiagonal() * sorted.adjoint()).norm());
  }
  if (residual > kReconstructionTol) {
    fail(ErrorCode::kNumericalFailure,
         "diagonalization reconstruction residual " + std::to_string(residual));
  }
  SpectrumSet spectrum(g, sorted_chars);
  return DiagonalizedRep{pi, std::move(sorted), std::move(sorted_chars), std::move(spectrum),
                         residual, refined};
}

std::vector<cplx> gelfand(const DiagonalizedRep& diag, const Measure& mu) {
  const Mat m = diag.basis.adjoint() * integrate(diag.rep, mu) * diag.basis;
  Vec expected(m.rows());
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    expected(j) = fourier_stieltjes(mu, diag.char_of_index[j]);
  }
  const double err = (m - Mat(expected.asDiagonal())).norm();
  if (err > kDiagonalTol * std::max(1.0, mu.norm())) {
    fail(ErrorCode::kVerificationFailure,
         "V^* pi_1(mu) V disagrees with the transform (residual " + std::to_string(err) + ")");
  }
  std::vector<cplx> out;
  out.reserve(diag.spectrum.size());
  for (const auto& c : diag.spectrum.characters()) out.push_back(fourier_stieltjes(mu, c));
  return out;
}

Representation tensor_conjugate(const Representation& pi) {
  std::vector<Mat> m;
  m.reserve(pi.matrices().size());
  for (const auto& p : pi.matrices()) m.push_back(kron(p, p.conjugate()));
  return Representation::from_matrices(pi.group(), std::move(m));
}

Vec cyclic_vector(Eigen::Index dim, const std::vector<Vec>& vectors) {
  Vec xi = Vec::Zero(dim);
  std::vector<char> covered(dim, 0);
  double scale = 0.0;
  for (const auto& v : vectors) {
    if (v.size() != dim) fail(ErrorCode::kDimensionMismatch, "cyclic_vector: vector has wrong length");
    scale = std::max(scale, v.cwiseAbs().maxCoeff());
  }
  // The closure of B xi_i is the coordinate subspace on the support of xi_i.
  const double cut = 1e-12 * scale;
  for (const auto& v : vectors) {
    for (Eigen::Index k = 0; k < dim; ++k) {
      if (std::abs(v(k)) > cut && !covered[k]) {
        xi(k) = v(k);
        covered[k] = 1;
      }
    }
  }
  return xi;
}

bool orbit_contains(const Vec& xi, const std::vector<Vec>& vectors, double tol) {
  const Eigen::Index d = xi.size();
  Mat orbit = Mat(xi.asDiagonal());
  Mat joint(d, d + static_cast<Eigen::Index>(vectors.size()));
  joint.leftCols(d) = orbit;
  for (std::size_t i = 0; i < vectors.size(); ++i) joint.col(d + static_cast<Eigen::Index>(i)) = vectors[i];
  return numerical_rank(joint, tol) == numerical_rank(orbit, tol);
}

}  // namespace ehtp

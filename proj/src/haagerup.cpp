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

#include <algorithm>
#include <cmath>
#include <random>

#include "elementary_operator.hpp"
#include "error.hpp"

namespace ehtp {
namespace {

constexpr double kPruneTol = 1e-12;
constexpr double kStopRelDecrease = 1e-8;
constexpr double kArmijo = 1e-4;

struct SideNorms {
  double lambda_a;
  Vec top_a;
  double lambda_b;
  Vec top_b;
};

SideNorms side_norms(const std::vector<Term>& terms, int dim) {
  Mat left = Mat::Zero(dim, dim), right = Mat::Zero(dim, dim);
  for (const auto& t : terms) {
    left.noalias() += t.a * t.a.adjoint();
    right.noalias() += t.b.adjoint() * t.b;
  }
  auto [la, va] = top_eigenpair(left);
  auto [lb, vb] = top_eigenpair(right);
  return {std::max(la, 0.0), va, std::max(lb, 0.0), vb};
}

// a_i -> sum_j a_j S_ji, b_i -> sum_j (S^{-1})_ij b_j.
std::vector<Term> regauge(const std::vector<Term>& terms, const Mat& s, const Mat& s_inv) {
  const auto k = static_cast<Eigen::Index>(terms.size());
  std::vector<Term> out(terms.size());
  for (Eigen::Index i = 0; i < k; ++i) {
    Mat a = Mat::Zero(terms[0].a.rows(), terms[0].a.cols());
    Mat b = Mat::Zero(terms[0].b.rows(), terms[0].b.cols());
    for (Eigen::Index j = 0; j < k; ++j) {
      a += s(j, i) * terms[j].a;
      b += s_inv(i, j) * terms[j].b;
    }
    out[i] = Term{std::move(a), std::move(b)};
  }
  return out;
}

Mat stack(const std::vector<Term>& terms, bool left) {
  const Eigen::Index d = terms[0].a.rows();
  Mat m(d * d, static_cast<Eigen::Index>(terms.size()));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    m.col(static_cast<Eigen::Index>(i)) = vec(left ? terms[i].a : terms[i].b);
  }
  return m;
}

double lower_bound(const std::vector<Term>& terms, int dim, double target, const NormOptions& opt) {
  const Eigen::Index d = dim, big = d * d;
  const Mat id = Mat::Identity(d, d);
  std::vector<Mat> a_amp, b_amp;
  for (const auto& t : terms) {
    a_amp.push_back(kron(t.a, id));
    b_amp.push_back(kron(t.b, id));
  }
  auto forward = [&](const Mat& x) {
    Mat y = Mat::Zero(big, big);
    for (std::size_t i = 0; i < a_amp.size(); ++i) y.noalias() += a_amp[i] * x * b_amp[i];
    return y;
  };
  auto adjoint = [&](const Mat& y) {
    Mat x = Mat::Zero(big, big);
    for (std::size_t i = 0; i < a_amp.size(); ++i) x.noalias() += a_amp[i].adjoint() * y * b_amp[i].adjoint();
    return x;
  };

  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss;
  double best = 0.0;
  const int restarts = std::max(1, opt.restarts);
  for (int r = 0; r < restarts; ++r) {
    Mat x;
    if (r == 0) {
      x = Mat::Identity(big, big);
    } else {
      Mat g(big, big);
      for (Eigen::Index j = 0; j < big; ++j)
        for (Eigen::Index i = 0; i < big; ++i) g(i, j) = cplx(gauss(rng), gauss(rng));
      x = Eigen::HouseholderQR<Mat>(g).householderQ();
    }
    double value = 0.0;
    for (int step = 0; step < 200; ++step) {
      Eigen::JacobiSVD<Mat> ysvd(forward(x), Eigen::ComputeThinU | Eigen::ComputeThinV);
      const double next = ysvd.singularValues()(0);
      best = std::max(best, next);
      if (step > 0 && next <= value * (1.0 + 1e-13)) break;
      value = next;
      const Mat z = adjoint(ysvd.matrixU().col(0) * ysvd.matrixV().col(0).adjoint());
      // The unitary maximizing Re <z, x> is the polar factor of z.
      Eigen::JacobiSVD<Mat> zsvd(z, Eigen::ComputeFullU | Eigen::ComputeFullV);
      x = zsvd.matrixU() * zsvd.matrixV().adjoint();
    }
    if (best >= target * (1.0 - 1e-12)) break;
  }
  return best;
}

}  // namespace

double haagerup_value(const std::vector<Term>& terms, int dim) {
  if (terms.empty()) return 0.0;
  const auto n = side_norms(terms, dim);
  return std::sqrt(n.lambda_a) * std::sqrt(n.lambda_b);
}

std::vector<Term> minimal_representation(const std::vector<Term>& input, int dim) {
  std::vector<Term> terms;
  for (const auto& t : input) {
    const double na = t.a.norm(), nb = t.b.norm();
    if (na == 0.0 || nb == 0.0) continue;
    const double c = std::sqrt(nb / na);
    terms.push_back(Term{t.a * c, t.b / c});
  }
  if (terms.empty()) return {};
  const Eigen::Index d = dim;

  // Left side: A U = [A_1 0] for the unitary U of right singular vectors;
  // the right family is rotated by U^* so the tensor is unchanged.
  {
    const Mat m = stack(terms, true);
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const Mat& v = svd.matrixV();
    const Mat rb = stack(terms, false) * v.conjugate();
    const Mat ra = m * v;
    std::vector<Term> next;
    for (Eigen::Index k = 0; k < s.size(); ++k) {
      if (s(k) > kPruneTol * s(0)) next.push_back(Term{unvec(ra.col(k), d), unvec(rb.col(k), d)});
    }
    terms = std::move(next);
  }
  if (terms.empty()) return {};
  // Right side, same rotation with the roles exchanged.
  {
    const Mat m = stack(terms, false);
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const Mat& v = svd.matrixV();
    const Mat rb = m * v;
    const Mat ra = stack(terms, true) * v.conjugate();
    std::vector<Term> next;
    for (Eigen::Index k = 0; k < s.size(); ++k) {
      if (s(k) > kPruneTol * s(0)) next.push_back(Term{unvec(ra.col(k), d), unvec(rb.col(k), d)});
    }
    terms = std::move(next);
  }
  return terms;
}

NormInterval haagerup_norm_bounds(const ElementaryOperator& t, const NormOptions& opt) {
  if (t.terms().empty()) fail(ErrorCode::kInvalidArgument, "haagerup_norm_bounds: no terms");
  const int d = t.dim();
  NormInterval out;

  if (is_completely_positive(t)) {
    const double v = op_norm(ehtp::apply(t, Mat::Identity(d, d)));
    out.lower = out.upper = v;
    out.certificate_terms = t.terms();
    out.upper_trace = {v};
    out.cp_fast_path = true;
    return out;
  }

  std::vector<Term> rep = minimal_representation(t.terms(), d);
  if (rep.empty()) {
    out.upper_trace = {0.0};
    return out;
  }

  // Minimize f = (log lambda_A + log lambda_B) / 2 over gauges exp(H).
  auto objective = [&](const std::vector<Term>& r) {
    const auto n = side_norms(r, d);
    return 0.5 * (std::log(n.lambda_a) + std::log(n.lambda_b));
  };
  const auto k = static_cast<Eigen::Index>(rep.size());
  double f = objective(rep);
  out.upper_trace.push_back(std::exp(f));
  double step = 1.0;
  int iters = 0;
  while (iters < opt.max_iters && k > 1) {
    const auto n = side_norms(rep, d);
    Vec alpha_dot(k), beta_dot(k);
    Mat ga(d, k), gb(d, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      ga.col(i) = rep[i].a.adjoint() * n.top_a;
      gb.col(i) = rep[i].b * n.top_b;
    }
    // r_ij = <alpha_i, alpha_j>/(2 lambda_A) - <beta_i, beta_j>/(2 lambda_B)
    const Mat r = 0.5 * (ga.adjoint() * ga / n.lambda_a - gb.adjoint() * gb / n.lambda_b);
    const Mat dir = -r.conjugate();
    const double slope = r.squaredNorm();
    if (slope <= 1e-30) break;

    bool accepted = false;
    std::vector<Term> trial;
    double f_trial = f;
    for (int ls = 0; ls < 60; ++ls) {
      const Mat half = 0.5 * step * dir;
      trial = regauge(rep, hermitian_exp(half), hermitian_exp(-half));
      f_trial = objective(trial);
      if (std::isfinite(f_trial) && f_trial <= f - kArmijo * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    ++iters;
    const double prev = std::exp(f);
    rep = std::move(trial);
    f = f_trial;
    out.upper_trace.push_back(std::exp(f));
    step = std::min(step * 2.0, 1e6);
    if ((prev - std::exp(f)) < kStopRelDecrease * prev) break;
  }

  out.iters = iters;
  out.upper = std::exp(f);
  out.certificate_terms = std::move(rep);
  out.lower = lower_bound(out.certificate_terms, d, out.upper, opt);
  return out;
}

}  // namespace ehtp

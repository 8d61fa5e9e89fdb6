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

#include "selftest.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "error.hpp"
#include "gamma.hpp"
#include "instances.hpp"
#include "varopoulos.hpp"

namespace ehtp {
namespace {

struct Tally {
  PropertyResult result;

  void record(bool ok, double value, const std::string& what) {
    ++result.trials;
    result.worst = std::max(result.worst, value);
    if (!ok) {
      if (result.failures == 0) result.first_failure = what;
      ++result.failures;
    }
  }
  void check(double value, const std::string& what) { record(value <= result.tol, value, what); }
};

using Body = std::function<void(Rng&, int, Tally&)>;

struct Property {
  const char* name;
  int trials;
  double tol;
  Body body;
};

Representation random_rep_for(Rng& rng, const GroupPtr& g, int max_dim) {
  if (!g->has_cyclic_presentation()) {
    return rng.integer(0, 1) == 0 ? permutation_rep_s3(g) : Representation::regular(g);
  }
  return random_abelian_rep(rng, g, rng.integer(1, max_dim), true);
}

GroupPtr suite_group(Rng& rng) {
  static const auto suite = small_group_suite();
  return suite[static_cast<std::size_t>(rng.integer(0, static_cast<int>(suite.size()) - 1))].group;
}

std::string label(int trial) { return "trial " + std::to_string(trial); }

std::vector<Property> properties() {
  std::vector<Property> p;
  p.push_back({"homomorphism", 300, 1e-9, [](Rng& rng, int t, Tally& tally) {
                 const auto g = suite_group(rng);
                 const auto pi = random_rep_for(rng, g, 4);
                 tally.check(homomorphism_residual(pi, random_measure(rng, g), random_measure(rng, g)), label(t));
               }});
  p.push_back({"unital", 50, 1e-12, [](Rng& rng, int t, Tally& tally) {
                 const auto g = suite_group(rng);
                 const auto pi = random_rep_for(rng, g, 4);
                 const Mat x = random_matrix(rng, pi.dim(), pi.dim());
                 const Mat y = ehtp::apply(gamma(pi, Measure::dirac(g, g->identity())).op, x);
                 tally.check((y - x).norm() / std::max(1.0, x.norm()), label(t));
               }});
  p.push_back({"contractive", 60, 1e-9, [](Rng& rng, int t, Tally& tally) {
                 const auto g = suite_group(rng);
                 const auto pi = random_rep_for(rng, g, 4);
                 const auto mu = random_measure(rng, g);
                 NormOptions opt;
                 opt.restarts = 1;
                 opt.seed = rng.next();
                 const auto n = haagerup_norm_bounds(gamma(pi, mu).op, opt);
                 tally.check(std::max(0.0, n.upper - mu.norm()), label(t));
               }});
  p.push_back({"positive-tight", 100, 1e-12, [](Rng& rng, int t, Tally& tally) {
                 const auto g = suite_group(rng);
                 const auto pi = random_rep_for(rng, g, 4);
                 const auto mu = random_positive_measure(rng, g);
                 const auto n = haagerup_norm_bounds(gamma(pi, mu).op);
                 const double mass = mu.total_mass().real();
                 const double gap = std::abs(n.upper - mass) / std::max(1.0, mass);
                 tally.record(n.cp_fast_path && gap <= 1e-12, gap, label(t));
               }});
  p.push_back({"schur-form", 200, 1e-9, [](Rng& rng, int t, Tally& tally) {
                 const auto g = random_abelian_group(rng, 24);
                 const auto pi = random_abelian_rep(rng, g, rng.integer(1, 8), true);
                 const auto mu = random_measure(rng, g);
                 const auto form = schur_form(diagonalize(pi, rng.next()), mu, false);
                 tally.check(form.residual / std::max(1.0, mu.norm()), label(t));
               }});
  p.push_back({"kernel-agreement", 300, 0.0, [](Rng& rng, int t, Tally& tally) {
                 const auto g = random_abelian_group(rng, 12);
                 const auto pi = random_abelian_rep(rng, g, rng.integer(1, 6), rng.integer(0, 1) == 1);
                 const auto diag = diagonalize(pi, rng.next());
                 Measure mu = random_measure(rng, g);
                 if (t % 2 == 1) {
                   const SpectrumSet dual = dual_group(g);
                   const SpectrumSet diffs = difference_set(diag.spectrum);
                   std::vector<cplx> transform(dual.size());
                   for (std::size_t c = 0; c < dual.size(); ++c) {
                     if (!diffs.contains(dual[c])) transform[c] = rng.complex_gauss();
                   }
                   mu = from_transform(g, transform);
                 }
                 const bool a = kernel_test_transfer(pi, mu);
                 const bool b = kernel_test_difference_set(diag, mu);
                 const bool c = kernel_test_tensor_conjugate(pi, mu);
                 tally.record(a == b && b == c, (a == b && b == c) ? 0.0 : 1.0, label(t));
               }});
  p.push_back({"cp-posdef", 1000, 0.0, [](Rng& rng, int t, Tally& tally) {
                 const auto g = random_abelian_group(rng, 12);
                 const auto pi = random_abelian_rep(rng, g, rng.integer(1, 8), rng.integer(0, 1) == 1);
                 Measure mu = random_measure(rng, g);
                 switch (t % 4) {
                   case 1: mu = random_positive_measure(rng, g); break;
                   case 2: {
                     const auto nu = random_sparse_measure(rng, g);
                     mu = convolve(nu, reverse_conj(nu));
                     break;
                   }
                   case 3: mu = random_sparse_measure(rng, g); break;
                   default: break;
                 }
                 try {
                   equivalence_suite(diagonalize(pi, rng.next()), mu, 4, rng.next());
                   tally.record(true, 0.0, label(t));
                 } catch (const Error& e) {
                   if (e.code() != ErrorCode::kVerificationFailure) throw;
                   tally.record(false, 1.0, label(t) + ": " + e.what());
                 }
               }});
  p.push_back({"gram-roundtrip", 200, 1e-9, [](Rng& rng, int t, Tally& tally) {
                 const auto g = random_abelian_group(rng, 12);
                 const auto pi = random_abelian_rep(rng, g, rng.integer(1, 8), false);
                 const auto u = from_measure(diagonalize(pi, rng.next()), random_positive_measure(rng, g));
                 const auto vs = gram_factorize(u);
                 Mat gram = Mat::Zero(u.values.rows(), u.values.cols());
                 for (const auto& phi : vs) gram += phi * phi.adjoint();
                 const double top = hermitian_eigen(u.values).values.maxCoeff();
                 tally.check((gram - u.values).norm() / std::max(top, 1e-300), label(t));
               }});
  p.push_back({"transform-multiplicative", 200, 1e-9, [](Rng& rng, int t, Tally& tally) {
                 const auto g = random_abelian_group(rng, 24);
                 const auto mu = random_measure(rng, g);
                 const auto nu = random_measure(rng, g);
                 const auto conv = convolve(mu, nu);
                 const SpectrumSet dual = dual_group(g);
                 double worst = 0.0;
                 for (const auto& c : dual.characters()) {
                   worst = std::max(worst, std::abs(fourier_stieltjes(conv, c) -
                                                    fourier_stieltjes(mu, c) * fourier_stieltjes(nu, c)));
                 }
                 tally.check(worst / std::max(1.0, mu.norm() * nu.norm()), label(t));
               }});
  p.push_back({"haagerup-single-term", 100, 1e-4, [](Rng& rng, int t, Tally& tally) {
                 const int d = rng.integer(1, 6);
                 const Mat a = random_matrix(rng, d, d);
                 const Mat b = random_matrix(rng, d, d);
                 NormOptions opt;
                 opt.seed = rng.next();
                 const auto n = haagerup_norm_bounds(ElementaryOperator(d, {Term{a, b}}), opt);
                 const double exact = op_norm(a) * op_norm(b);
                 bool monotone = true;
                 for (std::size_t i = 1; i < n.upper_trace.size(); ++i) {
                   monotone = monotone && n.upper_trace[i] <= n.upper_trace[i - 1];
                 }
                 const double slack = 1e-9 * exact;
                 const bool contains = n.lower <= exact + slack && exact <= n.upper + slack;
                 const double width = (n.upper - n.lower) / exact;
                 tally.record(monotone && contains && width <= 1e-4, width, label(t));
               }});
  p.push_back({"slice-identity", 100, 1e-9, [](Rng& rng, int t, Tally& tally) {
                 const auto g = suite_group(rng);
                 const auto pi = random_rep_for(rng, g, 4);
                 const auto mu = random_measure(rng, g);
                 double worst = 0.0;
                 for (int k = 0; k < 5; ++k) {
                   worst = std::max(worst, slice_identity_residual(pi, mu, random_matrix(rng, pi.dim(), pi.dim())));
                 }
                 tally.check(worst, label(t));
               }});
  p.push_back({"cyclic-vector", 100, 0.0, [](Rng& rng, int t, Tally& tally) {
                 const int dim = rng.integer(1, 10);
                 std::vector<Vec> vectors;
                 const int count = rng.integer(1, 4);
                 for (int k = 0; k < count; ++k) {
                   Vec v = Vec::Zero(dim);
                   for (int i = 0; i < dim; ++i) {
                     if (rng.uniform() < 0.5) v(i) = rng.complex_gauss();
                   }
                   vectors.push_back(v);
                 }
                 const Vec xi = cyclic_vector(dim, vectors);
                 const bool ok = orbit_contains(xi, vectors);
                 tally.record(ok, ok ? 0.0 : 1.0, label(t));
               }});
  p.push_back({"restriction", 50, 0.0, [](Rng& rng, int t, Tally& tally) {
                 const auto g = random_abelian_group(rng, 24);
                 const auto pi = random_abelian_rep(rng, g, rng.integer(1, 8), true);
                 std::vector<int> gens;
                 for (int k = rng.integer(1, 2); k > 0; --k) gens.push_back(rng.integer(0, g->order() - 1));
                 const auto h = subgroup_and_restriction(g, gens);
                 const auto r = restriction_spectrum_check(pi, h, {random_measure(rng, h.group)});
                 tally.record(r.sets_equal && r.transform_residual <= 1e-9, r.transform_residual, label(t));
               }});
  return p;
}

std::string render_table(const std::vector<PropertyResult>& results, std::uint64_t seed, bool quick) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-26s %7s %8s %12s %10s  %s\n", "property", "trials", "failures", "worst",
                "tol", "status");
  os << "seed=" << seed << (quick ? " (quick)" : "") << '\n' << line;
  int failed = 0;
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%-26s %7d %8d %12.3e %10.1e  %s\n", r.name.c_str(), r.trials, r.failures,
                  r.worst, r.tol, r.failures == 0 ? "PASS" : "FAIL");
    os << line;
    if (r.failures) {
      os << "    first failure: " << r.first_failure << '\n';
      ++failed;
    }
  }
  os << (failed == 0 ? "all properties passed\n" : std::to_string(failed) + " properties failed\n");
  return os.str();
}

}  // namespace

SelftestResult run_selftest(const SelftestOptions& options) {
  const auto props = properties();
  std::vector<PropertyResult> results(props.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < props.size(); i = next++) {
      const auto& prop = props[i];
      Tally tally;
      tally.result.name = prop.name;
      tally.result.tol = prop.tol;
      Rng rng(options.seed, prop.name);
      const int trials = options.quick ? std::max(1, prop.trials / 10) : prop.trials;
      for (int t = 0; t < trials; ++t) {
        try {
          prop.body(rng, t, tally);
        } catch (const Error& e) {
          tally.record(false, 0.0, label(t) + ": " + to_string(e.code()) + ": " + e.what());
        }
      }
      results[i] = std::move(tally.result);
    }
  };
  const int threads = std::clamp(options.threads, 1, static_cast<int>(props.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  SelftestResult out;
  out.properties = results;
  out.exit_code = std::any_of(results.begin(), results.end(), [](const auto& r) { return r.failures > 0; }) ? 1 : 0;
  out.table = render_table(results, options.seed, options.quick);
  return out;
}

}  // namespace ehtp

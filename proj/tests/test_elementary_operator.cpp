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

#include <catch2/catch_amalgamated.hpp>

#include "elementary_operator.hpp"
#include "error.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace ehtp;

namespace {

oracle::Terms to_terms(const ElementaryOperator& t) {
  oracle::Terms out;
  for (const auto& term : t.terms()) out.emplace_back(term.a, term.b);
  return out;
}

ElementaryOperator random_operator(Rng& rng, int d, int count) {
  std::vector<Term> terms;
  for (int i = 0; i < count; ++i) terms.push_back({random_matrix(rng, d, d), random_matrix(rng, d, d)});
  return ElementaryOperator(d, terms);
}

ElementaryOperator schur_multiplier(const Mat& symbol) {
  const auto d = static_cast<int>(symbol.rows());
  std::vector<Term> terms;
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) terms.push_back({symbol(j, k) * matrix_unit(d, j, j), matrix_unit(d, k, k)});
  }
  return ElementaryOperator(d, terms);
}

}  // namespace

TEST_CASE("apply", "[operator]") {
  Rng rng(1);
  const Mat x = random_matrix(rng, 3, 3);
  CHECK((ehtp::apply(ElementaryOperator::identity(3), x) - x).norm() < 1e-15);
  const Mat a = random_matrix(rng, 3, 3), b = random_matrix(rng, 3, 3);
  CHECK((ehtp::apply(ElementaryOperator(3, {{a, b}}), Mat::Identity(3, 3)) - a * b).norm() < 1e-13);
  const ElementaryOperator diag(2, {{matrix_unit(2, 0, 0), matrix_unit(2, 0, 0)},
                                    {matrix_unit(2, 1, 1), matrix_unit(2, 1, 1)}});
  CHECK((ehtp::apply(diag, Mat::Ones(2, 2)) - Mat::Identity(2, 2)).norm() < 1e-15);
  CHECK_THROWS_AS(ehtp::apply(diag, Mat::Ones(3, 3)), Error);
  CHECK_THROWS_AS(ElementaryOperator(2, {{Mat::Ones(2, 2), Mat::Ones(3, 3)}}), Error);
}

TEST_CASE("transfer matrix and composition", "[operator]") {
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = rng.integer(1, 4);
    const auto s = random_operator(rng, d, 2), t = random_operator(rng, d, 2);
    CHECK((transfer_matrix(t) - oracle::transfer(to_terms(t), d)).norm() < 1e-12);
    const Mat composed = oracle::transfer(to_terms(s), d) * oracle::transfer(to_terms(t), d);
    CHECK((transfer_matrix(compose(s, t)) - composed).norm() < 1e-11 * std::max(1.0, composed.norm()));
    const Mat x = random_matrix(rng, d, d);
    CHECK((ehtp::apply(compose(ElementaryOperator::identity(d), t), x) - ehtp::apply(t, x)).norm() < 1e-12);
  }
  SECTION("(a x b) o (c x d) = ac x db") {
    const Mat a = random_matrix(rng, 3, 3), b = random_matrix(rng, 3, 3);
    const Mat c = random_matrix(rng, 3, 3), d = random_matrix(rng, 3, 3);
    const auto st = compose(ElementaryOperator(3, {{a, b}}), ElementaryOperator(3, {{c, d}}));
    REQUIRE(st.terms().size() == 1);
    CHECK((st.terms()[0].a - a * c).norm() < 1e-13);
    CHECK((st.terms()[0].b - d * b).norm() < 1e-13);
  }
}

TEST_CASE("slice maps", "[operator]") {
  Rng rng(3);
  const Mat a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
  const ElementaryOperator t(2, {{a, b}});
  // w with tr(w^* a) = 1.
  const Mat w = a / std::conj(trace_pairing(a, a)) ;
  CHECK(std::abs(trace_pairing(w, a) - cplx(1.0)) < 1e-13);
  CHECK((slice_left(t, w) - b).norm() < 1e-12);
  CHECK(slice_left(t, Mat::Zero(2, 2)).norm() == 0.0);
  const Mat c = random_matrix(rng, 2, 2), d = random_matrix(rng, 2, 2);
  const ElementaryOperator two(2, {{a, b}, {c, d}});
  CHECK((slice_left(two, Mat::Identity(2, 2)) - (a.trace() * b + c.trace() * d)).norm() < 1e-12);
  CHECK((slice_right(two, Mat::Identity(2, 2)) - (b.trace() * a + d.trace() * c)).norm() < 1e-12);
}

TEST_CASE("Choi matrix and complete positivity", "[operator]") {
  SECTION("identity map on C2") {
    const auto c = choi(ElementaryOperator::identity(2));
    const auto eig = Eigen::SelfAdjointEigenSolver<Mat>(c.matrix).eigenvalues();
    CHECK(eig(3) == Catch::Approx(2.0));
    CHECK(std::abs(eig(0)) < 1e-14);
    CHECK(std::abs(eig(2)) < 1e-14);
  }
  SECTION("rank one") {
    Rng rng(4);
    const Mat a = random_matrix(rng, 3, 3);
    const ElementaryOperator t(3, {{a, a.adjoint()}});
    CHECK((choi(t).matrix - oracle::choi(to_terms(t), 3)).norm() < 1e-12);
    CHECK(is_completely_positive(t));
  }
  SECTION("transpose map is not CP") {
    std::vector<Term> terms;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) terms.push_back({matrix_unit(2, i, j), matrix_unit(2, i, j)});
    }
    const ElementaryOperator t(2, terms);
    Rng rng(5);
    const Mat x = random_matrix(rng, 2, 2);
    CHECK((ehtp::apply(t, x) - x.transpose()).norm() < 1e-14);
    CHECK(oracle::min_eigenvalue(choi(t).matrix) == Catch::Approx(-1.0));
    CHECK_FALSE(is_completely_positive(t));
  }
  SECTION("unitary conjugation and negation") {
    Rng rng(6);
    const Mat u = random_unitary(rng, 3);
    CHECK(is_completely_positive(ElementaryOperator(3, {{u, u.adjoint()}})));
    CHECK_FALSE(is_completely_positive(ElementaryOperator(3, {{-Mat::Identity(3, 3), Mat::Identity(3, 3)}})));
  }
  SECTION("Schur multipliers follow their symbols") {
    Rng rng(7);
    const Mat g = random_matrix(rng, 4, 2);
    CHECK(is_completely_positive(schur_multiplier(g * g.adjoint())));
    Mat h = g * g.adjoint();
    h(0, 0) -= 5.0 + h.norm();
    CHECK_FALSE(is_completely_positive(schur_multiplier(h)));
  }
}

TEST_CASE("strongly independent Kraus families", "[operator]") {
  Rng rng(8);
  auto reconstructs = [](const ElementaryOperator& t, const std::vector<Mat>& kraus) {
    oracle::Terms terms;
    for (const auto& k : kraus) terms.emplace_back(k, k.adjoint());
    return (oracle::transfer(terms, t.dim()) - oracle::transfer(to_terms(t), t.dim())).norm();
  };
  SECTION("unitary conjugation") {
    const Mat u = random_unitary(rng, 3);
    const ElementaryOperator t(3, {{u, u.adjoint()}});
    const auto k = strongly_independent_kraus(t);
    REQUIRE(k.size() == 1);
    // Equal to u up to a phase.
    const cplx phase = (u.adjoint() * k[0]).trace() / 3.0;
    CHECK(std::abs(std::abs(phase) - 1.0) < 1e-12);
    CHECK((k[0] - phase * u).norm() < 1e-12);
  }
  SECTION("duplicated term collapses to sqrt(2) a") {
    const Mat a = random_matrix(rng, 2, 2);
    const ElementaryOperator t(2, {{a, a.adjoint()}, {a, a.adjoint()}});
    const auto k = strongly_independent_kraus(t);
    REQUIRE(k.size() == 1);
    CHECK(k[0].norm() == Catch::Approx(std::sqrt(2.0) * a.norm()));
    CHECK(reconstructs(t, k) < 1e-12);
  }
  SECTION("depolarizing-like map has four elements") {
    std::vector<Term> terms;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) terms.push_back({matrix_unit(2, i, j) / 2.0, matrix_unit(2, i, j).adjoint()});
    }
    const ElementaryOperator t(2, terms);
    const auto k = strongly_independent_kraus(t);
    CHECK(k.size() == 4);
    Mat stacked(4, 4);
    for (int i = 0; i < 4; ++i) stacked.col(i) = vec(k[i]);
    CHECK(min_singular_value(stacked) > 1e-9);
  }
  SECTION("general CP maps from Choi eigenvectors") {
    for (int trial = 0; trial < 10; ++trial) {
      const int d = rng.integer(2, 4);
      std::vector<Term> terms;
      for (int i = 0; i < 3; ++i) {
        // Non-star form of a CP map: split each a x a^* as (2a) x (a^*/2).
        const Mat a = random_matrix(rng, d, d);
        terms.push_back({2.0 * a, 0.5 * a.adjoint()});
      }
      const ElementaryOperator t(d, terms);
      const auto k = strongly_independent_kraus(t);
      CHECK(k.size() == 3);
      CHECK(reconstructs(t, k) < 1e-9);
    }
  }
  SECTION("non-CP input") {
    CHECK_THROWS_AS(strongly_independent_kraus(ElementaryOperator(2, {{-Mat::Identity(2, 2), Mat::Identity(2, 2)}})),
                    Error);
  }
}

TEST_CASE("sampled positivity over the diagonal algebra", "[operator]") {
  Rng rng(9);
  const Mat g = random_matrix(rng, 3, 3);
  const auto psd = positive_implies_cp_check(schur_multiplier(g * g.adjoint()), 20, 1);
  CHECK(psd.completely_positive);
  CHECK(psd.sampled_positive);
  CHECK(psd.agree());
  Mat h = Mat::Ones(3, 3);
  h(0, 0) = -1.0;
  const auto bad = positive_implies_cp_check(schur_multiplier(h), 20, 1);
  CHECK_FALSE(bad.completely_positive);
  CHECK_FALSE(bad.sampled_positive);
  const auto id = positive_implies_cp_check(ElementaryOperator::identity(3), 5, 1);
  CHECK(id.completely_positive);
  CHECK(id.sampled_positive);
  const Mat u = random_unitary(rng, 3);
  try {
    positive_implies_cp_check(ElementaryOperator(3, {{u, u.adjoint()}}), 5, 1);
    FAIL("accepted a map that is not a bimodule map");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPrecondition);
  }
}

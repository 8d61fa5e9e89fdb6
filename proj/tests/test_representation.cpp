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

#include <algorithm>

#include "error.hpp"
#include "instances.hpp"
#include "oracles.hpp"
#include "representation.hpp"

using namespace ehtp;

TEST_CASE("representation validation", "[representation]") {
  const auto z2 = FiniteGroup::cyclic_product({2});
  SECTION("non-unitary matrix") {
    Mat flip(2, 2);
    flip << 0, 1, 1, 0.25;
    try {
      Representation::from_matrices(z2, {Mat::Identity(2, 2), flip});
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNotARepresentation);
    }
  }
  SECTION("pi(e) must be the identity") {
    Mat minus = -Mat::Identity(1, 1);
    CHECK_THROWS_AS(Representation::from_matrices(z2, {minus, minus}), Error);
  }
  SECTION("homomorphism law") {
    const auto z3 = FiniteGroup::cyclic_product({3});
    Mat w = Mat::Identity(1, 1) * root_of_unity(1, 3);
    CHECK_THROWS_AS(Representation::from_matrices(z3, {Mat::Identity(1, 1), w, w}), Error);
    CHECK_NOTHROW(Representation::from_matrices(z3, {Mat::Identity(1, 1), w, w * w}));
  }
  SECTION("defects are measured") {
    Mat flip(2, 2);
    flip << 0, 1, 1, 0;
    const auto d = representation_defects(z2, {Mat::Identity(2, 2), flip});
    CHECK(d.unitarity < 1e-15);
    CHECK(d.homomorphism < 1e-15);
  }
  SECTION("regular representation of S3") {
    const auto s3 = symmetric_group_3();
    const auto pi = Representation::regular(s3);
    CHECK(pi.dim() == 6);
    CHECK_NOTHROW(permutation_rep_s3(s3));
  }
}

TEST_CASE("integration against a measure", "[representation]") {
  const auto z2 = FiniteGroup::cyclic_product({2});
  const auto pi = Representation::from_characters(z2, {Character{{0}}, Character{{1}}});
  CHECK((integrate(pi, Measure::dirac(z2, 0)) - Mat::Identity(2, 2)).norm() < 1e-15);
  CHECK((integrate(pi, Measure::dirac(z2, 1)) - pi(1)).norm() < 1e-15);
  const Measure half(z2, {0.5, 0.5});
  Mat expect = Mat::Zero(2, 2);
  expect(0, 0) = 1.0;
  CHECK((integrate(pi, half) - expect).norm() < 1e-15);
}

TEST_CASE("diagonalization", "[representation]") {
  SECTION("trivial representation") {
    const auto g = FiniteGroup::cyclic_product({5});
    const auto diag = diagonalize(Representation::trivial(g, 3));
    CHECK(diag.spectrum == SpectrumSet(g, {Character{{0}}}));
    CHECK(unitarity_residual(diag.basis) < 1e-12);
  }
  SECTION("regular representation of Z_n has the full dual as spectrum") {
    for (int n : {2, 5, 8}) {
      const auto g = FiniteGroup::cyclic_product({n});
      const auto diag = diagonalize(Representation::regular(g));
      CHECK(diag.spectrum == dual_group(g));
      CHECK(diag.reconstruction_residual < 1e-9);
    }
  }
  SECTION("squares model on Z101") {
    const auto g = FiniteGroup::cyclic_product({101});
    std::vector<Character> chars;
    std::vector<Character> squares;
    for (int n = 1; n <= 6; ++n) chars.push_back(Character{{n * n}});
    const auto diag = diagonalize(Representation::from_characters(g, chars));
    CHECK(diag.spectrum == SpectrumSet(g, chars));
  }
  SECTION("rotated random representations") {
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
      const auto g = random_abelian_group(rng, 24);
      const int d = rng.integer(1, 8);
      auto chars = random_characters(rng, g, d);
      const Mat u = random_unitary(rng, d);
      const auto pi = Representation::from_characters(g, chars).conjugated(u);
      const auto diag = diagonalize(pi, rng.next());
      auto got = diag.char_of_index;
      std::sort(got.begin(), got.end());
      std::sort(chars.begin(), chars.end());
      CHECK(got == chars);
      CHECK(unitarity_residual(diag.basis) < 1e-9);
      // Columns are eigenvectors with the recorded characters.
      for (int s = 0; s < g->order(); ++s) {
        for (int j = 0; j < d; ++j) {
          const Vec col = diag.basis.col(j);
          const auto value = oracle::character(*g->abelian_shape(), diag.char_of_index[j].exponents, s);
          CHECK((pi(s) * col - value * col).norm() < 1e-8);
        }
      }
    }
  }
  SECTION("non-abelian groups are refused") {
    const auto s3 = symmetric_group_3();
    CHECK_THROWS_AS(diagonalize(Representation::regular(s3)), Error);
  }
}

TEST_CASE("Gelfand transform", "[representation]") {
  const auto z7 = FiniteGroup::cyclic_product({7});
  const auto pi = Representation::from_characters(z7, {Character{{1}}, Character{{3}}});
  const auto diag = diagonalize(pi);
  const auto at_e = gelfand(diag, Measure::dirac(z7, 0));
  for (const auto& v : at_e) CHECK(std::abs(v - cplx(1.0)) < 1e-14);
  const auto at_1 = gelfand(diag, Measure::dirac(z7, 1));
  REQUIRE(at_1.size() == 2);
  CHECK(std::abs(at_1[0] - std::polar(1.0, 2 * M_PI / 7)) < 1e-13);
  CHECK(std::abs(at_1[1] - std::polar(1.0, 6 * M_PI / 7)) < 1e-13);
}

TEST_CASE("tensor with the conjugate", "[representation]") {
  SECTION("a character times its conjugate is trivial") {
    const auto z5 = FiniteGroup::cyclic_product({5});
    const auto t = tensor_conjugate(Representation::from_characters(z5, {Character{{2}}}));
    for (int s = 0; s < 5; ++s) CHECK(std::abs(t(s)(0, 0) - cplx(1.0)) < 1e-14);
  }
  SECTION("Z4, characters 1 and 2") {
    const auto z4 = FiniteGroup::cyclic_product({4});
    const auto t = tensor_conjugate(Representation::from_characters(z4, {Character{{1}}, Character{{2}}}));
    auto chars = diagonalize(t).char_of_index;
    std::sort(chars.begin(), chars.end());
    const std::vector<Character> expect{Character{{0}}, Character{{0}}, Character{{1}}, Character{{3}}};
    CHECK(chars == expect);
  }
  SECTION("unitary output") {
    Rng rng(6);
    const auto g = FiniteGroup::cyclic_product({3, 3});
    const auto t = tensor_conjugate(random_abelian_rep(rng, g, 3, true));
    for (const auto& m : t.matrices()) CHECK(unitarity_residual(m) < 1e-12);
  }
}

TEST_CASE("cyclic vectors for the diagonal algebra", "[representation]") {
  SECTION("single vector") {
    Vec v(3);
    v << 1, 0, cplx(0, 2);
    const Vec xi = cyclic_vector(3, {v});
    CHECK(orbit_contains(xi, {v}));
  }
  SECTION("standard basis of C2") {
    const Vec xi = cyclic_vector(2, {Vec::Unit(2, 0), Vec::Unit(2, 1)});
    CHECK(std::abs(xi(0)) > 0.0);
    CHECK(std::abs(xi(1)) > 0.0);
  }
  SECTION("overlapping supports in C3") {
    Vec a(3), b(3);
    a << 1, 1, 0;
    b << 0, 1, 1;
    const Vec xi = cyclic_vector(3, {a, b});
    for (int i = 0; i < 3; ++i) CHECK(std::abs(xi(i)) > 1e-12);
    CHECK(orbit_contains(xi, {a, b}));
  }
  SECTION("a vector outside the orbit is detected") {
    CHECK_FALSE(orbit_contains(Vec::Unit(3, 0), {Vec::Unit(3, 1)}));
  }
}

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

#include <set>

#include "error.hpp"
#include "group.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace ehtp;

TEST_CASE("cyclic products", "[group]") {
  SECTION("shape [1] is the trivial group") {
    const auto g = FiniteGroup::cyclic_product({1});
    CHECK(g->order() == 1);
    CHECK(g->mul(0, 0) == 0);
  }
  SECTION("Z7 is modular addition") {
    const auto g = FiniteGroup::cyclic_product({7});
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) CHECK(g->mul(i, j) == (i + j) % 7);
    }
  }
  SECTION("Z2 x Z3 has an element of order 6") {
    const auto g = FiniteGroup::cyclic_product({2, 3});
    REQUIRE(g->order() == 6);
    int best = 0;
    for (int s = 0; s < 6; ++s) {
      int x = s, n = 1;
      while (x != g->identity()) {
        x = g->mul(x, s);
        ++n;
      }
      best = std::max(best, n);
    }
    CHECK(best == 6);
  }
  SECTION("element indexing matches the row-major convention") {
    const std::vector<int> shape{3, 4, 2};
    const auto g = FiniteGroup::cyclic_product(shape);
    for (int s = 0; s < g->order(); ++s) {
      CHECK(g->coordinates(s) == oracle::coords(shape, s));
      for (int t = 0; t < g->order(); ++t) CHECK(g->mul(s, t) == oracle::add(shape, s, t));
      CHECK(g->inverse(s) == oracle::neg(shape, s));
    }
  }
  SECTION("bad shapes are rejected") {
    CHECK_THROWS_AS(FiniteGroup::cyclic_product({0}), Error);
    CHECK_THROWS_AS(FiniteGroup::cyclic_product({-3}), Error);
    CHECK_THROWS_AS(FiniteGroup::cyclic_product({100, 100}, 4096), Error);
  }
}

TEST_CASE("Cayley table validation", "[group]") {
  SECTION("S3 is accepted and non-commutative") {
    const auto s3 = symmetric_group_3();
    CHECK(s3->order() == 6);
    CHECK_FALSE(s3->is_commutative());
    CHECK_FALSE(s3->abelian_shape().has_value());
    CHECK_THROWS_AS(s3->require_shape("test"), Error);
  }
  SECTION("round trip through the table") {
    const auto g = FiniteGroup::cyclic_product({4});
    const auto h = FiniteGroup::from_cayley(g->cayley_table());
    CHECK(h->order() == 4);
    CHECK(h->is_commutative());
  }
  SECTION("non-Latin table") {
    CHECK_THROWS_AS(FiniteGroup::from_cayley({{0, 1}, {1, 1}}), Error);
  }
  SECTION("Latin square that is not associative") {
    // A quasigroup with identity 0 (a loop of order 5) that is not a group.
    const std::vector<std::vector<int>> loop = {
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    try {
      FiniteGroup::from_cayley(loop);
      FAIL("loop accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInvalidArgument);
    }
  }
  SECTION("order bound") {
    const auto g = FiniteGroup::cyclic_product({8});
    CHECK_THROWS_AS(FiniteGroup::from_cayley(g->cayley_table(), 4), Error);
  }
}

TEST_CASE("characters and the dual group", "[group]") {
  SECTION("Z2 has the trivial and sign characters") {
    const auto g = FiniteGroup::cyclic_product({2});
    const auto dual = dual_group(g);
    REQUIRE(dual.size() == 2);
    CHECK(std::abs(evaluate(*g, dual[1], 1) - oracle::cplx(-1.0)) < 1e-15);
    CHECK(std::abs(evaluate(*g, dual[0], 1) - oracle::cplx(1.0)) < 1e-15);
  }
  SECTION("Z4 character table is 2 times a unitary") {
    const auto g = FiniteGroup::cyclic_product({4});
    const auto dual = dual_group(g);
    oracle::Mat table(4, 4);
    for (int c = 0; c < 4; ++c) {
      for (int s = 0; s < 4; ++s) table(c, s) = evaluate(*g, dual[c], s);
    }
    CHECK((table * table.adjoint() - 4.0 * oracle::Mat::Identity(4, 4)).norm() < 1e-12);
  }
  SECTION("Z2 x Z2 characters are real and multiplicative") {
    const std::vector<int> shape{2, 2};
    const auto g = FiniteGroup::cyclic_product(shape);
    for (const auto& c : dual_group(g).characters()) {
      for (int s = 0; s < 4; ++s) {
        const auto v = evaluate(*g, c, s);
        CHECK(std::abs(v.imag()) < 1e-15);
        CHECK(std::abs(v - oracle::character(shape, c.exponents, s)) < 1e-14);
        for (int t = 0; t < 4; ++t) CHECK(std::abs(evaluate(*g, c, g->mul(s, t)) - v * evaluate(*g, c, t)) < 1e-14);
      }
    }
  }
  SECTION("evaluation agrees with the oracle on a mixed product") {
    const std::vector<int> shape{3, 5, 4};
    const auto g = FiniteGroup::cyclic_product(shape);
    Rng rng(3);
    for (const auto& c : random_characters(rng, g, 10)) {
      for (int s = 0; s < g->order(); ++s) {
        CHECK(std::abs(evaluate(*g, c, s) - oracle::character(shape, c.exponents, s)) < 1e-13);
      }
    }
  }
  SECTION("invalid exponents") {
    const auto g = FiniteGroup::cyclic_product({3});
    CHECK_THROWS_AS(validate_character(*g, Character{{3}}), Error);
    CHECK_THROWS_AS(validate_character(*g, Character{{1, 1}}), Error);
  }
}

TEST_CASE("difference sets", "[group]") {
  const auto z7 = FiniteGroup::cyclic_product({7});
  SECTION("singleton") {
    const SpectrumSet e(z7, {Character{{4}}});
    CHECK(difference_set(e) == SpectrumSet(z7, {Character{{0}}}));
  }
  SECTION("full dual group is closed") {
    CHECK(difference_set(dual_group(z7)) == dual_group(z7));
  }
  SECTION("{1,3} in the dual of Z7") {
    const SpectrumSet e(z7, {Character{{1}}, Character{{3}}});
    const SpectrumSet expect(z7, {Character{{0}}, Character{{2}}, Character{{5}}});
    CHECK(difference_set(e) == expect);
  }
  SECTION("oracle comparison on Z3 x Z4") {
    const std::vector<int> shape{3, 4};
    const auto g = FiniteGroup::cyclic_product(shape);
    Rng rng(5);
    const auto chars = random_characters(rng, g, 4);
    std::set<std::vector<int>> expect;
    for (const auto& a : chars) {
      for (const auto& b : chars) expect.insert(oracle::char_quotient(shape, a.exponents, b.exponents));
    }
    const auto got = difference_set(SpectrumSet(g, chars));
    REQUIRE(got.size() == expect.size());
    for (const auto& c : got.characters()) CHECK(expect.count(c.exponents) == 1);
  }
}

TEST_CASE("subgroups and restriction", "[group]") {
  SECTION("identity generator gives the trivial subgroup") {
    const auto g = FiniteGroup::cyclic_product({6});
    const std::vector<int> gens{0};
    const auto h = subgroup_and_restriction(g, gens);
    CHECK(h.group->order() == 1);
    for (const auto& c : dual_group(g).characters()) CHECK(h.restrict(c) == trivial_character(*h.group));
  }
  SECTION("generators of G give G with a bijective restriction") {
    const auto g = FiniteGroup::cyclic_product({2, 3});
    const std::vector<int> gens{1, 3};
    const auto h = subgroup_and_restriction(g, gens);
    REQUIRE(h.group->order() == 6);
    std::set<Character> image;
    for (const auto& c : dual_group(g).characters()) image.insert(h.restrict(c));
    CHECK(image.size() == 6);
  }
  SECTION("subgroup 2Z6 collapses characters modulo 3") {
    const auto g = FiniteGroup::cyclic_product({6});
    const std::vector<int> gens{2};
    const auto h = subgroup_and_restriction(g, gens);
    REQUIRE(h.group->order() == 3);
    const auto dual = dual_group(g);
    for (int a = 0; a < 6; ++a) {
      for (int b = 0; b < 6; ++b) CHECK((h.restrict(dual[a]) == h.restrict(dual[b])) == (a % 3 == b % 3));
    }
  }
  SECTION("restriction agrees with evaluation on the embedded elements") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      const auto g = random_abelian_group(rng, 24);
      const std::vector<int> gens{rng.integer(0, g->order() - 1), rng.integer(0, g->order() - 1)};
      const auto h = subgroup_and_restriction(g, gens);
      std::set<int> elements(h.embedding.begin(), h.embedding.end());
      CHECK(static_cast<int>(elements.size()) == h.group->order());
      for (int x = 0; x < h.group->order(); ++x) {
        for (int y = 0; y < h.group->order(); ++y) {
          CHECK(h.embedding[h.group->mul(x, y)] == g->mul(h.embedding[x], h.embedding[y]));
        }
      }
      for (const auto& c : dual_group(g).characters()) {
        const auto r = h.restrict(c);
        for (int x = 0; x < h.group->order(); ++x) {
          CHECK(std::abs(evaluate(*h.group, r, x) - evaluate(*g, c, h.embedding[x])) < 1e-12);
        }
      }
    }
  }
}

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

#include <functional>

#include "error.hpp"
#include "serialize.hpp"

using namespace ehtp;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("groups", "[serialize]") {
  const auto g = group_from_json(json::parse(R"({"kind": "cyclic_product", "shape": [2, 3]})"));
  CHECK(g->order() == 6);
  CHECK(group_from_json(to_json(*g))->same_as(*g));
  const auto c = group_from_json(json::parse(R"({"kind": "cayley", "table": [[0, 1], [1, 0]]})"));
  CHECK(c->order() == 2);
  CHECK(code_of([] { group_from_json(json::parse(R"({"kind": "lattice"})")); }) == ErrorCode::kSchema);
  CHECK(code_of([] { group_from_json(json::parse(R"({"kind": "cyclic_product", "shape": "x"})")); }) ==
        ErrorCode::kSchema);
}

TEST_CASE("measures", "[serialize]") {
  const auto g = FiniteGroup::cyclic_product({4});
  const auto w = measure_from_json(json::parse(R"({"weights": [{"elem": 1, "re": 2, "im": -1}]})"), g);
  CHECK(w[1] == cplx(2, -1));
  CHECK(w[0] == cplx(0));
  const auto d = measure_from_json(json::parse(R"({"density": [4, 0, 0, [0, 4]]})"), g);
  CHECK(d[0] == cplx(1));
  CHECK(d[3] == cplx(0, 1));
  CHECK(measure_from_json(json::parse(R"({"dirac": 2})"), g)[2] == cplx(1));
  CHECK(measure_from_json(to_json(w), g).distance(w) == 0.0);
  CHECK(code_of([&] { measure_from_json(json::parse(R"({"dirac": 9})"), g); }) == ErrorCode::kSchema);
  CHECK(code_of([&] { measure_from_json(json::parse(R"({"density": [1, 2]})"), g); }) == ErrorCode::kSchema);
}

TEST_CASE("representations", "[serialize]") {
  const auto g = FiniteGroup::cyclic_product({2});
  const auto pi = representation_from_json(
      json::parse(R"({"kind": "matrices", "data": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]})"), g);
  CHECK(pi.dim() == 2);
  CHECK(representation_from_json(to_json(pi), g).dim() == 2);
  CHECK(representation_from_json(json::parse(R"({"kind": "characters", "chars": [[1], {"exponents": [0]}]})"), g)
            .dim() == 2);
  CHECK(representation_from_json(json::parse(R"({"kind": "trivial", "dim": 3})"), g).dim() == 3);
  CHECK(code_of([&] {
          representation_from_json(json::parse(R"({"kind": "matrices", "data": [[[1]], [[2]]]})"), g);
        }) == ErrorCode::kNotARepresentation);
  CHECK(code_of([&] { representation_from_json(json::parse(R"({"kind": "characters", "chars": [[5]]})"), g); }) ==
        ErrorCode::kSchema);
}

TEST_CASE("operators and complex entries", "[serialize]") {
  const auto t = operator_from_json(json::parse(R"({"dim": 1, "terms": [{"a": [[[0, 1]]], "b": [[{"re": 2, "im": 0}]]}]})"));
  CHECK(t.terms().size() == 1);
  CHECK(t.terms()[0].a(0, 0) == cplx(0, 1));
  CHECK(t.terms()[0].b(0, 0) == cplx(2, 0));
  CHECK(complex_from_json(complex_to_json(cplx(1.5, -2))) == cplx(1.5, -2));
  CHECK(code_of([] { matrix_from_json(json::parse(R"([[1, 2], [3]])")); }) == ErrorCode::kSchema);
}

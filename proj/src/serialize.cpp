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

#include "serialize.hpp"

#include <string>

#include "error.hpp"

namespace ehtp {
namespace {

[[noreturn]] void schema(const std::string& what) { fail(ErrorCode::kSchema, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) schema(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(as_int(v, what));
  return out;
}

}  // namespace

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  if (j.is_object() && j.contains("re")) {
    const double re = j.at("re").get<double>();
    const double im = j.contains("im") ? j.at("im").get<double>() : 0.0;
    return {re, im};
  }
  schema("complex entry must be a number, [re, im] or {re, im}");
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

Mat matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) schema("matrix must be a non-empty list of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) schema("matrix rows must be arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Mat m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) schema("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

GroupPtr group_from_json(const json& j, std::size_t max_order) {
  const auto& kind = field(j, "kind");
  if (kind == "cyclic_product") {
    return FiniteGroup::cyclic_product(int_list(field(j, "shape"), "shape"), max_order);
  }
  if (kind == "cayley") {
    const auto& t = field(j, "table");
    if (!t.is_array()) schema("table must be an array of rows");
    std::vector<std::vector<int>> table;
    for (const auto& row : t) table.push_back(int_list(row, "table row"));
    return FiniteGroup::from_cayley(table, max_order);
  }
  schema("unknown group kind");
}

json to_json(const FiniteGroup& g) {
  if (g.abelian_shape()) return {{"kind", "cyclic_product"}, {"shape", *g.abelian_shape()}};
  return {{"kind", "cayley"}, {"table", g.cayley_table()}};
}

Character character_from_json(const json& j) {
  if (j.is_array()) return Character{int_list(j, "exponents")};
  return Character{int_list(field(j, "exponents"), "exponents")};
}

json to_json(const Character& c) { return {{"exponents", c.exponents}}; }

Measure measure_from_json(const json& j, const GroupPtr& g) {
  if (!j.is_object()) schema("measure must be an object");
  if (j.contains("weights")) {
    std::vector<cplx> w(g->order());
    for (const auto& e : j.at("weights")) {
      const int s = as_int(field(e, "elem"), "elem");
      if (s < 0 || s >= g->order()) schema("measure element out of range");
      w[s] += complex_from_json(e);
    }
    return Measure(g, std::move(w));
  }
  if (j.contains("density")) {
    const auto& d = j.at("density");
    if (!d.is_array() || d.size() != static_cast<std::size_t>(g->order())) {
      schema("density must list one value per group element");
    }
    std::vector<cplx> f;
    for (const auto& v : d) f.push_back(complex_from_json(v));
    return Measure::from_density(g, std::move(f));
  }
  if (j.contains("dirac")) {
    const int s = as_int(j.at("dirac"), "dirac");
    if (s < 0 || s >= g->order()) schema("dirac element out of range");
    return Measure::dirac(g, s);
  }
  schema("measure needs \"weights\", \"density\" or \"dirac\"");
}

json to_json(const Measure& mu) {
  json w = json::array();
  for (int s = 0; s < mu.group()->order(); ++s) {
    if (mu[s] != 0.0) w.push_back({{"elem", s}, {"re", mu[s].real()}, {"im", mu[s].imag()}});
  }
  return {{"weights", w}};
}

Representation representation_from_json(const json& j, const GroupPtr& g) {
  const auto& kind = field(j, "kind");
  if (kind == "regular") return Representation::regular(g);
  if (kind == "trivial") return Representation::trivial(g, as_int(field(j, "dim"), "dim"));
  if (kind == "characters") {
    std::vector<Character> chars;
    for (const auto& c : field(j, "chars")) chars.push_back(character_from_json(c));
    try {
      return Representation::from_characters(g, chars);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInvalidArgument) schema(e.what());
      throw;
    }
  }
  if (kind == "matrices") {
    std::vector<Mat> mats;
    for (const auto& m : field(j, "data")) mats.push_back(matrix_from_json(m));
    return Representation::from_matrices(g, std::move(mats));
  }
  schema("unknown representation kind");
}

json to_json(const Representation& pi) {
  json data = json::array();
  for (const auto& m : pi.matrices()) data.push_back(matrix_to_json(m));
  return {{"kind", "matrices"}, {"data", data}};
}

ElementaryOperator operator_from_json(const json& j) {
  const int d = as_int(field(j, "dim"), "dim");
  std::vector<Term> terms;
  for (const auto& t : field(j, "terms")) {
    terms.push_back(Term{matrix_from_json(field(t, "a")), matrix_from_json(field(t, "b"))});
  }
  try {
    return ElementaryOperator(d, std::move(terms));
  } catch (const Error& e) {
    schema(e.what());
  }
}

json to_json(const ElementaryOperator& t) {
  json terms = json::array();
  for (const auto& term : t.terms()) {
    terms.push_back({{"a", matrix_to_json(term.a)}, {"b", matrix_to_json(term.b)}});
  }
  return {{"dim", t.dim()}, {"terms", terms}};
}

json to_json(const NormInterval& n) {
  return {{"lower", n.lower}, {"upper", n.upper}, {"iters", n.iters}};
}

json to_json(const VFunction& u) {
  json chars = json::array();
  for (const auto& c : u.spectrum.characters()) chars.push_back(c.exponents);
  return {{"characters", chars}, {"values", matrix_to_json(u.values)}};
}

}  // namespace ehtp

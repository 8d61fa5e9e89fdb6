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

#include "group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "error.hpp"

namespace ehtp {
namespace {

long long lcm_of(const std::vector<int>& ns) {
  long long l = 1;
  for (int n : ns) l = std::lcm(l, static_cast<long long>(n));
  return l;
}

// Phase numerator of sigma(s) over the common denominator lcm(shape).
long long phase_numerator(const std::vector<int>& shape, long long denom,
                          const std::vector<int>& exps, const std::vector<int>& coords) {
  long long acc = 0;
  for (std::size_t j = 0; j < shape.size(); ++j) {
    const long long k = (static_cast<long long>(exps[j]) * coords[j]) % shape[j];
    acc = (acc + k * (denom / shape[j])) % denom;
  }
  return acc;
}

}  // namespace

GroupPtr FiniteGroup::cyclic_product(std::vector<int> shape, std::size_t max_order) {
  if (shape.empty()) shape.push_back(1);
  std::size_t order = 1;
  for (int n : shape) {
    if (n < 1) fail(ErrorCode::kInvalidArgument, "cyclic factor orders must be >= 1");
    order *= static_cast<std::size_t>(n);
    if (order > max_order) {
      fail(ErrorCode::kOrderBound, "group order exceeds bound " + std::to_string(max_order));
    }
  }
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->order_ = static_cast<int>(order);
  g->shape_ = shape;
  g->strides_.assign(shape.size(), 1);
  for (std::size_t j = shape.size(); j-- > 1;) g->strides_[j - 1] = g->strides_[j] * shape[j];

  g->table_.resize(order * order);
  std::vector<std::vector<int>> coords(order);
  for (int s = 0; s < g->order_; ++s) coords[s] = g->coordinates(s);
  std::vector<int> sum(shape.size());
  for (int a = 0; a < g->order_; ++a) {
    for (int b = 0; b < g->order_; ++b) {
      for (std::size_t j = 0; j < shape.size(); ++j) sum[j] = (coords[a][j] + coords[b][j]) % shape[j];
      g->table_[static_cast<std::size_t>(a) * order + b] = g->element(sum);
    }
  }
  g->finish_tables();
  return g;
}

GroupPtr FiniteGroup::from_cayley(const std::vector<std::vector<int>>& table,
                                  std::size_t max_order) {
  const std::size_t n = table.size();
  if (n == 0) fail(ErrorCode::kInvalidArgument, "Cayley table is empty");
  if (n > max_order) {
    fail(ErrorCode::kOrderBound, "group order exceeds bound " + std::to_string(max_order));
  }
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->order_ = static_cast<int>(n);
  g->table_.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) fail(ErrorCode::kInvalidArgument, "Cayley table is not square");
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        fail(ErrorCode::kInvalidArgument, "Cayley table entry out of range");
      }
      g->table_.push_back(v);
    }
  }
  // Latin square.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      int r = g->table_[i * n + j], c = g->table_[j * n + i];
      if (row_seen[r]++ || col_seen[c]++) {
        fail(ErrorCode::kInvalidArgument, "Cayley table is not a Latin square");
      }
    }
  }
  int e = -1;
  for (int cand = 0; cand < g->order_ && e < 0; ++cand) {
    bool ok = true;
    for (int x = 0; x < g->order_ && ok; ++x) ok = g->mul(cand, x) == x && g->mul(x, cand) == x;
    if (ok) e = cand;
  }
  if (e < 0) fail(ErrorCode::kInvalidArgument, "Cayley table has no identity");
  g->identity_ = e;

  // Associativity by Light's test over a generating set.
  std::vector<int> gens;
  std::vector<char> reached(n, 0);
  reached[e] = 1;
  std::size_t reached_count = 1;
  while (reached_count < n) {
    int next = 0;
    while (reached[next]) ++next;
    gens.push_back(next);
    std::vector<int> frontier;
    for (int s = 0; s < g->order_; ++s) if (reached[s]) frontier.push_back(s);
    while (!frontier.empty()) {
      std::vector<int> fresh;
      for (int s : frontier) {
        for (int gen : gens) {
          int t = g->mul(s, gen);
          if (!reached[t]) { reached[t] = 1; ++reached_count; fresh.push_back(t); }
        }
      }
      frontier = std::move(fresh);
    }
  }
  for (int gen : gens) {
    for (int x = 0; x < g->order_; ++x) {
      for (int y = 0; y < g->order_; ++y) {
        if (g->mul(g->mul(x, y), gen) != g->mul(x, g->mul(y, gen))) {
          fail(ErrorCode::kInvalidArgument, "Cayley table is not associative");
        }
      }
    }
  }
  g->finish_tables();
  return g;
}

void FiniteGroup::finish_tables() {
  identity_ = -1;
  for (int x = 0; x < order_ && identity_ < 0; ++x) {
    if (mul(x, 0) == 0 && mul(0, x) == 0) identity_ = x;
  }
  inverse_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_) { inverse_[a] = b; break; }
    }
  }
  commutative_ = true;
  for (int a = 0; a < order_ && commutative_; ++a) {
    for (int b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) { commutative_ = false; break; }
    }
  }
}

const std::vector<int>& FiniteGroup::require_shape(const char* who) const {
  if (!shape_) {
    fail(ErrorCode::kNonAbelian,
         std::string(who) + ": requires an abelian group given as a cyclic product");
  }
  return *shape_;
}

std::vector<int> FiniteGroup::coordinates(int s) const {
  const auto& shape = require_shape("coordinates");
  std::vector<int> c(shape.size());
  for (std::size_t j = 0; j < shape.size(); ++j) c[j] = (s / strides_[j]) % shape[j];
  return c;
}

int FiniteGroup::element(std::span<const int> coords) const {
  const auto& shape = require_shape("element");
  if (coords.size() != shape.size()) {
    fail(ErrorCode::kInvalidArgument, "coordinate tuple has wrong length");
  }
  int s = 0;
  for (std::size_t j = 0; j < shape.size(); ++j) {
    int c = coords[j] % shape[j];
    if (c < 0) c += shape[j];
    s += c * strides_[j];
  }
  return s;
}

std::vector<std::vector<int>> FiniteGroup::cayley_table() const {
  std::vector<std::vector<int>> t(order_);
  for (int a = 0; a < order_; ++a) {
    t[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a) * order_,
                table_.begin() + static_cast<std::ptrdiff_t>(a + 1) * order_);
  }
  return t;
}

bool FiniteGroup::same_as(const FiniteGroup& other) const {
  return this == &other || (order_ == other.order_ && shape_ == other.shape_ && table_ == other.table_);
}

void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* who) {
  if (!a || !b || !a->same_as(*b)) {
    fail(ErrorCode::kGroupMismatch, std::string(who) + ": operands live on different groups");
  }
}

Character trivial_character(const FiniteGroup& g) {
  return Character{std::vector<int>(g.require_shape("trivial_character").size(), 0)};
}

void validate_character(const FiniteGroup& g, const Character& c) {
  const auto& shape = g.require_shape("character");
  if (c.exponents.size() != shape.size()) {
    fail(ErrorCode::kInvalidArgument, "character exponent tuple has wrong length");
  }
  for (std::size_t j = 0; j < shape.size(); ++j) {
    if (c.exponents[j] < 0 || c.exponents[j] >= shape[j]) {
      fail(ErrorCode::kInvalidArgument, "character exponent out of range");
    }
  }
}

cplx evaluate(const FiniteGroup& g, const Character& c, int s) {
  const auto& shape = g.require_shape("evaluate");
  const long long denom = lcm_of(shape);
  return root_of_unity(phase_numerator(shape, denom, c.exponents, g.coordinates(s)), denom);
}

Character multiply(const FiniteGroup& g, const Character& a, const Character& b) {
  const auto& shape = g.require_shape("multiply");
  Character out{std::vector<int>(shape.size())};
  for (std::size_t j = 0; j < shape.size(); ++j) {
    out.exponents[j] = (a.exponents[j] + b.exponents[j]) % shape[j];
  }
  return out;
}

Character inverse(const FiniteGroup& g, const Character& c) {
  const auto& shape = g.require_shape("inverse");
  Character out{std::vector<int>(shape.size())};
  for (std::size_t j = 0; j < shape.size(); ++j) {
    out.exponents[j] = (shape[j] - c.exponents[j]) % shape[j];
  }
  return out;
}

SpectrumSet::SpectrumSet(GroupPtr group, std::vector<Character> characters)
    : group_(std::move(group)), characters_(std::move(characters)) {
  for (const auto& c : characters_) validate_character(*group_, c);
  std::sort(characters_.begin(), characters_.end());
  characters_.erase(std::unique(characters_.begin(), characters_.end()), characters_.end());
}

bool SpectrumSet::contains(const Character& c) const {
  return std::binary_search(characters_.begin(), characters_.end(), c);
}

long SpectrumSet::index_of(const Character& c) const {
  auto it = std::lower_bound(characters_.begin(), characters_.end(), c);
  if (it == characters_.end() || *it != c) return -1;
  return static_cast<long>(it - characters_.begin());
}

SpectrumSet dual_group(const GroupPtr& g) {
  const auto& shape = g->require_shape("dual_group");
  std::vector<Character> chars;
  chars.reserve(g->order());
  // Exponent tuples enumerate exactly like element coordinates.
  for (int s = 0; s < g->order(); ++s) chars.push_back(Character{g->coordinates(s)});
  (void)shape;
  return SpectrumSet(g, std::move(chars));
}

SpectrumSet difference_set(const SpectrumSet& e) {
  const FiniteGroup& g = *e.group();
  std::vector<Character> out;
  out.reserve(e.size() * e.size());
  for (const auto& s : e.characters()) {
    for (const auto& t : e.characters()) out.push_back(multiply(g, s, inverse(g, t)));
  }
  return SpectrumSet(e.group(), std::move(out));
}

namespace {

using IntMat = std::vector<std::vector<long long>>;

// Brings `m` to diagonal form with unimodular row and column operations.
// Column operations are mirrored onto `qinv` as the inverse row operations,
// so that on return m_original * Q = P^{-1} * diag and qinv = Q^{-1}.
void integer_diagonalize(IntMat& m, IntMat& qinv) {
  const std::size_t n = m.size();
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : m) std::swap(row[a], row[b]);
    std::swap(qinv[a], qinv[b]);
  };
  // col_j += k * col_i
  auto add_col = [&](std::size_t j, std::size_t i, long long k) {
    for (auto& row : m) row[j] += k * row[i];
    for (std::size_t c = 0; c < n; ++c) qinv[i][c] -= k * qinv[j][c];
  };
  for (std::size_t p = 0; p < n; ++p) {
    for (;;) {
      std::size_t bi = n, bj = n;
      long long best = 0;
      for (std::size_t i = p; i < n; ++i) {
        for (std::size_t j = p; j < n; ++j) {
          long long v = m[i][j] < 0 ? -m[i][j] : m[i][j];
          if (v != 0 && (best == 0 || v < best)) { best = v; bi = i; bj = j; }
        }
      }
      if (best == 0) return;
      std::swap(m[p], m[bi]);
      swap_cols(p, bj);
      bool clean = true;
      for (std::size_t i = p + 1; i < n; ++i) {
        long long q = m[i][p] / m[p][p];
        if (q != 0) for (std::size_t c = 0; c < n; ++c) m[i][c] -= q * m[p][c];
        if (m[i][p] != 0) clean = false;
      }
      for (std::size_t j = p + 1; j < n; ++j) {
        long long q = m[p][j] / m[p][p];
        if (q != 0) add_col(j, p, -q);
        if (m[p][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (m[p][p] < 0) {
      for (auto& row : m) row[p] = -row[p];
      for (auto& v : qinv[p]) v = -v;
    }
  }
}

}  // namespace

Subgroup subgroup_and_restriction(const GroupPtr& g, std::span<const int> generators) {
  const auto& shape = g->require_shape("subgroup_and_restriction");
  const int order = g->order();
  for (int x : generators) {
    if (x < 0 || x >= order) fail(ErrorCode::kInvalidArgument, "generator index out of range");
  }
  // Power of a group element with a (possibly negative) integer exponent.
  auto power = [&](int x, long long k) {
    auto c = g->coordinates(x);
    for (std::size_t j = 0; j < shape.size(); ++j) {
      c[j] = static_cast<int>(((k % shape[j]) * c[j]) % shape[j]);
    }
    return g->element(c);
  };

  std::vector<int> basis;
  std::vector<long long> orders;
  // coeff[x] = coordinates of x in the current basis, empty when x is outside.
  std::vector<std::vector<long long>> coeff(order);
  coeff[g->identity()] = {};
  std::vector<char> member(order, 0);
  member[g->identity()] = 1;

  auto enumerate = [&]() {
    std::fill(member.begin(), member.end(), 0);
    std::vector<long long> c(basis.size(), 0);
    for (;;) {
      int x = g->identity();
      for (std::size_t j = 0; j < basis.size(); ++j) x = g->mul(x, power(basis[j], c[j]));
      if (member[x]) fail(ErrorCode::kNumericalFailure, "subgroup basis is not independent");
      member[x] = 1;
      coeff[x] = c;
      std::size_t j = basis.size();
      while (j > 0) {
        --j;
        if (++c[j] < orders[j]) break;
        c[j] = 0;
        if (j == 0) return;
      }
      if (basis.empty()) return;
    }
  };

  for (int gen : generators) {
    if (member[gen]) continue;
    long long q = 1;
    int x = gen;
    while (!member[x]) { x = g->mul(x, gen); ++q; }
    const std::size_t t = basis.size();
    IntMat rel(t + 1, std::vector<long long>(t + 1, 0));
    for (std::size_t i = 0; i < t; ++i) rel[i][i] = orders[i];
    for (std::size_t i = 0; i < t; ++i) rel[t][i] = -coeff[x][i];
    rel[t][t] = q;
    IntMat qinv(t + 1, std::vector<long long>(t + 1, 0));
    for (std::size_t i = 0; i <= t; ++i) qinv[i][i] = 1;
    integer_diagonalize(rel, qinv);

    std::vector<int> old = basis;
    old.push_back(gen);
    basis.clear();
    orders.clear();
    for (std::size_t j = 0; j <= t; ++j) {
      if (rel[j][j] == 1) continue;
      int f = g->identity();
      for (std::size_t i = 0; i <= t; ++i) f = g->mul(f, power(old[i], qinv[j][i]));
      basis.push_back(f);
      orders.push_back(rel[j][j]);
    }
    enumerate();
  }

  Subgroup out;
  out.parent = g;
  std::vector<int> sub_shape;
  for (long long d : orders) sub_shape.push_back(static_cast<int>(d));
  out.group = FiniteGroup::cyclic_product(sub_shape, static_cast<std::size_t>(order));
  out.basis = basis;
  if (out.basis.empty()) out.basis.push_back(g->identity());
  out.embedding.resize(out.group->order());
  for (int h = 0; h < out.group->order(); ++h) {
    auto c = out.group->coordinates(h);
    int x = g->identity();
    for (std::size_t j = 0; j < basis.size(); ++j) x = g->mul(x, power(basis[j], c[j]));
    out.embedding[h] = x;
  }
  return out;
}

Character Subgroup::restrict(const Character& sigma) const {
  const auto& gshape = parent->require_shape("restrict");
  validate_character(*parent, sigma);
  const auto& hshape = *group->abelian_shape();
  const long long denom = lcm_of(gshape);
  Character out{std::vector<int>(hshape.size(), 0)};
  for (std::size_t j = 0; j < hshape.size(); ++j) {
    const long long numer = phase_numerator(gshape, denom, sigma.exponents, parent->coordinates(basis[j]));
    // sigma(basis_j) is an hshape[j]-th root of unity: numer / denom = k / hshape[j].
    if ((numer * hshape[j]) % denom != 0) {
      fail(ErrorCode::kNumericalFailure, "restricted character is not a root of the factor order");
    }
    out.exponents[j] = static_cast<int>((numer * hshape[j]) / denom);
  }
  return out;
}

SpectrumSet Subgroup::restrict(const SpectrumSet& e) const {
  std::vector<Character> chars;
  chars.reserve(e.size());
  for (const auto& c : e.characters()) chars.push_back(restrict(c));
  return SpectrumSet(group, std::move(chars));
}

}  // namespace ehtp

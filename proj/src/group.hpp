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

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "linalg.hpp"

namespace ehtp {

inline constexpr std::size_t kDefaultMaxOrder = 4096;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by its multiplication table. Elements are the dense
/// indices 0..order-1. Groups built by cyclic_product also carry their
/// cyclic factor orders, which is what the character machinery needs.
class FiniteGroup {
 public:
  /// Z_{n_1} x ... x Z_{n_r}. Element index is row-major over the
  /// coordinates, last coordinate fastest.
  static GroupPtr cyclic_product(std::vector<int> shape,
                                 std::size_t max_order = kDefaultMaxOrder);

  /// Validates the table (Latin square, identity, associativity).
  static GroupPtr from_cayley(const std::vector<std::vector<int>>& table,
                              std::size_t max_order = kDefaultMaxOrder);

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_[a]; }
  bool is_commutative() const { return commutative_; }

  const std::optional<std::vector<int>>& abelian_shape() const { return shape_; }
  bool has_cyclic_presentation() const { return shape_.has_value(); }

  /// Throws kNonAbelian unless the group carries a cyclic-product shape.
  const std::vector<int>& require_shape(const char* who) const;

  std::vector<int> coordinates(int s) const;
  int element(std::span<const int> coords) const;

  /// Row-major order x order table.
  std::vector<std::vector<int>> cayley_table() const;

  bool same_as(const FiniteGroup& other) const;

 private:
  FiniteGroup() = default;
  void finish_tables();

  int order_ = 0;
  std::vector<int> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
  bool commutative_ = false;
  std::optional<std::vector<int>> shape_;
  std::vector<int> strides_;
};

void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* who);

/// sigma(s) = prod_j exp(2 pi i k_j s_j / n_j) for a cyclic-product group.
struct Character {
  std::vector<int> exponents;

  auto operator<=>(const Character&) const = default;
};

Character trivial_character(const FiniteGroup& g);
void validate_character(const FiniteGroup& g, const Character& c);
cplx evaluate(const FiniteGroup& g, const Character& c, int s);
Character multiply(const FiniteGroup& g, const Character& a, const Character& b);
Character inverse(const FiniteGroup& g, const Character& c);

/// Sorted, duplicate-free set of characters of one group.
class SpectrumSet {
 public:
  SpectrumSet(GroupPtr group, std::vector<Character> characters);

  const GroupPtr& group() const { return group_; }
  const std::vector<Character>& characters() const& { return characters_; }
  std::vector<Character> characters() && { return std::move(characters_); }
  std::size_t size() const { return characters_.size(); }
  const Character& operator[](std::size_t i) const { return characters_[i]; }

  bool contains(const Character& c) const;
  /// Position of c, or -1.
  long index_of(const Character& c) const;

  bool operator==(const SpectrumSet& other) const {
    return characters_ == other.characters_;
  }

 private:
  GroupPtr group_;
  std::vector<Character> characters_;
};

SpectrumSet dual_group(const GroupPtr& g);

/// { sigma tau^{-1} : sigma, tau in e }.
SpectrumSet difference_set(const SpectrumSet& e);

/// A subgroup H of an abelian G, presented as a cyclic product in its own
/// right, together with its embedding into G and the dual restriction map.
struct Subgroup {
  GroupPtr parent;
  GroupPtr group;
  /// embedding[h] is the element of G corresponding to h in H.
  std::vector<int> embedding;
  /// Elements of G generating the cyclic factors of H, in shape order.
  std::vector<int> basis;

  /// Restriction of a character of G to H, expressed in H's exponents.
  Character restrict(const Character& sigma) const;
  SpectrumSet restrict(const SpectrumSet& e) const;
};

Subgroup subgroup_and_restriction(const GroupPtr& g, std::span<const int> generators);

}  // namespace ehtp

/* Copyright (C) 2026 The homring Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "homring/error.hpp"
#include "homring/rational.hpp"

namespace homring::poset {

using Index = std::size_t;

/// Thrown by FinitePoset::build when the relation is not a partial order.
/// The witness pair is the offending (a, b) with `a <= b` as given.
class NotAPosetError : public Error {
 public:
  enum class Axiom { Reflexivity, Antisymmetry, Transitivity };

  NotAPosetError(Axiom axiom, Index a, Index b, const std::string& what)
      : Error(ErrorCode::NotAPoset, what), axiom_(axiom), witness_(a, b) {}

  Axiom axiom() const noexcept { return axiom_; }
  std::pair<Index, Index> witness() const noexcept { return witness_; }

 private:
  Axiom axiom_;
  std::pair<Index, Index> witness_;
};

/// Dense table of Möbius values for every comparable pair (a, b) with b <= a.
class MobiusTable {
 public:
  MobiusTable() = default;
  MobiusTable(std::size_t size, std::vector<std::int64_t> values, std::vector<bool> comparable)
      : size_(size), values_(std::move(values)), comparable_(std::move(comparable)) {}

  std::size_t size() const noexcept { return size_; }
  bool defined(Index a, Index b) const { return comparable_[a * size_ + b]; }

  /// mu(a, b); throws Error(Incomparable) unless b <= a.
  std::int64_t at(Index a, Index b) const;

 private:
  std::size_t size_ = 0;
  std::vector<std::int64_t> values_;
  std::vector<bool> comparable_;
};

/// A finite partially ordered set on the indices 0..size()-1.
///
/// The order relation is materialized as two bit matrices (up-sets and
/// down-sets) when the poset is built, and is immutable afterwards. Möbius
/// values are computed on demand by recursion on the lower argument,
///
///   mu(b, b) = 1,   mu(a, b) = -sum_{b <= z < a} mu(z, b),
///
/// and cached one lower argument at a time. The cache is shared between
/// copies and is safe to fill from several threads.
class FinitePoset {
 public:
  static constexpr std::size_t kMaxElements = 20000;

  FinitePoset() : FinitePoset(0) {}

  /// Materializes `leq` over all ordered pairs and checks the poset axioms.
  /// Throws NotAPosetError carrying a witness pair.
  static FinitePoset build(std::size_t size, const std::function<bool(Index, Index)>& leq,
                           std::vector<std::string> labels = {});

  /// Builds from explicit comparabilities `a <= b`; reflexive pairs are
  /// implied, nothing else is closed over.
  static FinitePoset from_pairs(std::size_t size, std::span<const std::pair<Index, Index>> pairs,
                                std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return size_; }
  bool leq(Index a, Index b) const noexcept { return bit(up_, a, b); }
  bool less(Index a, Index b) const noexcept { return a != b && leq(a, b); }
  bool comparable(Index a, Index b) const noexcept { return leq(a, b) || leq(b, a); }

  /// Label given at construction, or the decimal index.
  std::string label(Index a) const;

  /// Elements z with z <= a, in a linear extension order.
  std::vector<Index> down_set(Index a) const;
  /// Elements z with a <= z, in a linear extension order.
  std::vector<Index> up_set(Index a) const;

  /// Every element, ordered so that b < a implies b precedes a.
  const std::vector<Index>& linear_extension() const noexcept { return order_; }

  /// Number of strict comparabilities a < b.
  std::size_t strict_relation_count() const;

  /// mu(a, b) for b <= a. Throws Error(Incomparable) otherwise.
  std::int64_t mobius(Index a, Index b) const;

  MobiusTable mobius_table() const;

  /// f(a) = sum_{b <= a} mu(a, b) g(b).
  std::vector<Rational> mobius_invert(std::span<const Rational> g) const;

  /// g(a) = sum_{b <= a} f(b); the inverse of mobius_invert.
  std::vector<Rational> sum_below(std::span<const Rational> f) const;

 private:
  explicit FinitePoset(std::size_t size);

  using Rows = std::vector<std::uint64_t>;
  bool bit(const Rows& rows, Index r, Index c) const noexcept {
    return (rows[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void set_bit(Rows& rows, Index r, Index c) { rows[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  void finalize();
  const std::vector<std::int64_t>& mobius_column(Index b) const;

  struct Cache;

  std::size_t size_ = 0;
  std::size_t words_ = 0;
  Rows up_;    // row a: all z with a <= z
  Rows down_;  // row a: all z with z <= a
  std::vector<Index> order_;
  std::vector<Index> rank_;  // position of each element in order_
  std::vector<std::string> labels_;
  std::shared_ptr<Cache> cache_;
};

/// The chain 0 < 1 < ... < e.
FinitePoset chain(unsigned e);

/// Mu on the chain [0..e] in closed form: 1, -1 for a step of one, else 0.
std::int64_t chain_mobius(std::int64_t a, std::int64_t b);

/// The componentwise product order. Element index is the mixed-radix number
/// with the first factor as the most significant digit.
FinitePoset product(std::span<const FinitePoset> factors);

/// Mixed-radix index of `coords` in product(factors).
Index product_index(std::span<const FinitePoset> factors, std::span<const Index> coords);

/// prod_k mu_k(a_k, b_k). Throws Error(InvalidArgument) on arity mismatch
/// and Error(Incomparable) when some b_k <= a_k fails.
std::int64_t product_mobius(std::span<const MobiusTable> factors, std::span<const Index> a,
                            std::span<const Index> b);

}  // namespace homring::poset

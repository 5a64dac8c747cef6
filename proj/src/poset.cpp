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

#include "homring/poset.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <optional>

namespace homring::poset {

struct FinitePoset::Cache {
  std::mutex mutex;
  std::vector<std::shared_ptr<const std::vector<std::int64_t>>> columns;
};

namespace {

std::string pair_text(Index a, Index b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    throw Error(ErrorCode::OutOfRange, "Möbius value overflows 64 bits");
  return out;
}

}  // namespace

std::int64_t MobiusTable::at(Index a, Index b) const {
  if (a >= size_ || b >= size_ || !defined(a, b))
    throw Error(ErrorCode::Incomparable, "Möbius table has no entry for " + pair_text(a, b));
  return values_[a * size_ + b];
}

FinitePoset::FinitePoset(std::size_t size)
    : size_(size),
      words_((size + 63) / 64),
      up_(size * words_, 0),
      down_(size * words_, 0),
      cache_(std::make_shared<Cache>()) {}

FinitePoset FinitePoset::build(std::size_t size, const std::function<bool(Index, Index)>& leq,
                               std::vector<std::string> labels) {
  if (size > kMaxElements)
    throw Error(ErrorCode::BoundExceeded, "poset exceeds " + std::to_string(kMaxElements) + " elements");
  if (!labels.empty() && labels.size() != size)
    throw Error(ErrorCode::InvalidArgument, "label count does not match poset size");
  FinitePoset p(size);
  p.labels_ = std::move(labels);
  for (Index a = 0; a < size; ++a)
    for (Index b = 0; b < size; ++b)
      if (leq(a, b)) {
        p.set_bit(p.up_, a, b);
        p.set_bit(p.down_, b, a);
      }
  p.finalize();
  return p;
}

FinitePoset FinitePoset::from_pairs(std::size_t size, std::span<const std::pair<Index, Index>> pairs,
                                    std::vector<std::string> labels) {
  if (size > kMaxElements)
    throw Error(ErrorCode::BoundExceeded, "poset exceeds " + std::to_string(kMaxElements) + " elements");
  if (!labels.empty() && labels.size() != size)
    throw Error(ErrorCode::InvalidArgument, "label count does not match poset size");
  FinitePoset p(size);
  p.labels_ = std::move(labels);
  for (Index a = 0; a < size; ++a) {
    p.set_bit(p.up_, a, a);
    p.set_bit(p.down_, a, a);
  }
  for (const auto& [a, b] : pairs) {
    if (a >= size || b >= size)
      throw Error(ErrorCode::OutOfRange, "relation pair " + pair_text(a, b) + " out of range");
    p.set_bit(p.up_, a, b);
    p.set_bit(p.down_, b, a);
  }
  p.finalize();
  return p;
}

void FinitePoset::finalize() {
  using Axiom = NotAPosetError::Axiom;
  for (Index a = 0; a < size_; ++a)
    if (!leq(a, a))
      throw NotAPosetError(Axiom::Reflexivity, a, a, "relation is not reflexive at " + pair_text(a, a));
  for (Index a = 0; a < size_; ++a)
    for (Index b = a + 1; b < size_; ++b)
      if (leq(a, b) && leq(b, a))
        throw NotAPosetError(Axiom::Antisymmetry, a, b,
                             "relation is not antisymmetric: witness " + pair_text(a, b));
  // a <= b must imply up(b) is a subset of up(a).
  for (Index a = 0; a < size_; ++a) {
    for (Index b = 0; b < size_; ++b) {
      if (a == b || !leq(a, b)) continue;
      for (std::size_t w = 0; w < words_; ++w) {
        const std::uint64_t missing = up_[b * words_ + w] & ~up_[a * words_ + w];
        if (missing) {
          const Index c = w * 64 + static_cast<Index>(std::countr_zero(missing));
          throw NotAPosetError(Axiom::Transitivity, a, c,
                               "relation is not transitive: " + pair_text(a, b) + " and " +
                                   pair_text(b, c) + " hold but " + pair_text(a, c) + " does not");
        }
      }
    }
  }
  std::vector<std::size_t> depth(size_, 0);
  for (Index a = 0; a < size_; ++a)
    for (std::size_t w = 0; w < words_; ++w) depth[a] += std::popcount(down_[a * words_ + w]);
  order_.resize(size_);
  std::iota(order_.begin(), order_.end(), Index{0});
  // b < a implies down(b) is a proper subset of down(a), so sorting by
  // down-set size yields a linear extension.
  std::stable_sort(order_.begin(), order_.end(), [&](Index x, Index y) { return depth[x] < depth[y]; });
  rank_.resize(size_);
  for (std::size_t pos = 0; pos < size_; ++pos) rank_[order_[pos]] = pos;
  cache_->columns.assign(size_, nullptr);
}

std::string FinitePoset::label(Index a) const {
  return labels_.empty() ? std::to_string(a) : labels_.at(a);
}

std::vector<Index> FinitePoset::down_set(Index a) const {
  std::vector<Index> out;
  for (Index z : order_)
    if (bit(down_, a, z)) out.push_back(z);
  return out;
}

std::vector<Index> FinitePoset::up_set(Index a) const {
  std::vector<Index> out;
  for (Index z : order_)
    if (bit(up_, a, z)) out.push_back(z);
  return out;
}

std::size_t FinitePoset::strict_relation_count() const {
  std::size_t count = 0;
  for (auto word : up_) count += std::popcount(word);
  return count - size_;
}

const std::vector<std::int64_t>& FinitePoset::mobius_column(Index b) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->columns[b]) return *cache_->columns[b];
  }
  // column[a] = mu(a, b) for a >= b; zero elsewhere.
  auto column = std::make_shared<std::vector<std::int64_t>>(size_, 0);
  const std::vector<Index> above = up_set(b);
  for (Index a : above) {
    if (a == b) {
      (*column)[a] = 1;
      continue;
    }
    std::int64_t value = 0;
    for (Index z : above) {
      if (rank_[z] >= rank_[a]) break;
      if (leq(z, a)) value = checked_sub(value, (*column)[z]);
    }
    (*column)[a] = value;
  }
  std::lock_guard lock(cache_->mutex);
  if (!cache_->columns[b]) cache_->columns[b] = std::move(column);
  return *cache_->columns[b];
}

std::int64_t FinitePoset::mobius(Index a, Index b) const {
  if (a >= size_ || b >= size_)
    throw Error(ErrorCode::OutOfRange, "poset element out of range in " + pair_text(a, b));
  if (!leq(b, a))
    throw Error(ErrorCode::Incomparable,
                "Möbius function needs b <= a, got (a, b) = " + pair_text(a, b));
  return mobius_column(b)[a];
}

MobiusTable FinitePoset::mobius_table() const {
  std::vector<std::int64_t> values(size_ * size_, 0);
  std::vector<bool> comparable(size_ * size_, false);
  for (Index b = 0; b < size_; ++b) {
    const auto& column = mobius_column(b);
    for (Index a = 0; a < size_; ++a) {
      if (!leq(b, a)) continue;
      values[a * size_ + b] = column[a];
      comparable[a * size_ + b] = true;
    }
  }
  return MobiusTable(size_, std::move(values), std::move(comparable));
}

std::vector<Rational> FinitePoset::mobius_invert(std::span<const Rational> g) const {
  if (g.size() != size_)
    throw Error(ErrorCode::InvalidArgument, "function must be defined on every poset element");
  std::vector<Rational> f(size_, Rational(0));
  for (Index b = 0; b < size_; ++b) {
    if (g[b] == 0) continue;
    const auto& column = mobius_column(b);
    for (Index a = 0; a < size_; ++a)
      if (column[a] != 0) f[a] += Rational(column[a]) * g[b];
  }
  return f;
}

std::vector<Rational> FinitePoset::sum_below(std::span<const Rational> f) const {
  if (f.size() != size_)
    throw Error(ErrorCode::InvalidArgument, "function must be defined on every poset element");
  std::vector<Rational> g(size_, Rational(0));
  for (Index a = 0; a < size_; ++a)
    for (Index b = 0; b < size_; ++b)
      if (bit(down_, a, b)) g[a] += f[b];
  return g;
}

FinitePoset chain(unsigned e) {
  return FinitePoset::build(e + 1, [](Index a, Index b) { return a <= b; });
}

std::int64_t chain_mobius(std::int64_t a, std::int64_t b) {
  if (a == b) return 1;
  if (a - b == 1) return -1;
  return 0;
}

Index product_index(std::span<const FinitePoset> factors, std::span<const Index> coords) {
  if (coords.size() != factors.size())
    throw Error(ErrorCode::InvalidArgument, "coordinate arity does not match factor count");
  Index index = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (coords[k] >= factors[k].size())
      throw Error(ErrorCode::OutOfRange, "coordinate out of range in product poset");
    index = index * factors[k].size() + coords[k];
  }
  return index;
}

FinitePoset product(std::span<const FinitePoset> factors) {
  std::size_t total = 1;
  for (const auto& f : factors) {
    total *= f.size();
    if (total > FinitePoset::kMaxElements)
      throw Error(ErrorCode::BoundExceeded, "product poset too large");
  }
  auto decode = [&](Index index) {
    std::vector<Index> coords(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
      coords[k] = index % factors[k].size();
      index /= factors[k].size();
    }
    return coords;
  };
  std::vector<std::vector<Index>> coords(total);
  for (Index i = 0; i < total; ++i) coords[i] = decode(i);
  return FinitePoset::build(total, [&](Index a, Index b) {
    for (std::size_t k = 0; k < factors.size(); ++k)
      if (!factors[k].leq(coords[a][k], coords[b][k])) return false;
    return true;
  });
}

std::int64_t product_mobius(std::span<const MobiusTable> factors, std::span<const Index> a,
                            std::span<const Index> b) {
  if (a.size() != factors.size() || b.size() != factors.size())
    throw Error(ErrorCode::InvalidArgument, "tuple arity does not match factor count");
  std::int64_t result = 1;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const std::int64_t mu = factors[k].at(a[k], b[k]);
    if (mu == 0) {
      // keep validating the remaining components
      result = 0;
      continue;
    }
    if (__builtin_mul_overflow(result, mu, &result))
      throw Error(ErrorCode::OutOfRange, "Möbius product overflows 64 bits");
  }
  return result;
}

}  // namespace homring::poset

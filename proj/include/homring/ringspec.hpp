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
#include <string>
#include <utility>
#include <vector>

#include "homring/rational.hpp"

namespace homring::ringspec {

/// Parameters of a finite chain ring: residue field of order q = p^r and
/// nilpotency index e. The ring has q^e elements and ideals R, Rγ, ..., Rγ^e = 0
/// with |Rγ^j| = q^(e-j) for 0 <= j <= e.
struct ChainRingParams {
  std::uint64_t q;
  unsigned e;
  std::uint64_t p;
  unsigned r;

  /// Validates that q is a prime power and e >= 1.
  static ChainRingParams make(std::uint64_t q, unsigned e);

  BigInt cardinality() const;
  /// |Rγ^j|.
  BigInt ideal_size(unsigned j) const;

  friend bool operator==(const ChainRingParams&, const ChainRingParams&) = default;
};

/// A finite principal ideal ring, given as a product of chain rings.
class PirSpec {
 public:
  static constexpr std::uint64_t kMaxGrid = 1'000'000;

  explicit PirSpec(std::vector<ChainRingParams> components);

  /// Parses `q1^e1 x q2^e2 x ... x qs^es`, e.g. "2^3x3^1" (whitespace
  /// ignored, "^e" optional and defaulting to 1). Throws ParseError or
  /// Error(InvalidArgument) on a q that is not a prime power.
  static PirSpec parse(const std::string& text);

  const std::vector<ChainRingParams>& components() const noexcept { return components_; }
  std::size_t arity() const noexcept { return components_.size(); }

  BigInt cardinality() const;

  /// Number of exponent tuples, prod (e_k + 1).
  std::uint64_t grid_size() const;

  std::string to_string() const;

  friend bool operator==(const PirSpec&, const PirSpec&) = default;

 private:
  std::vector<ChainRingParams> components_;
};

/// A point of the grid [0,e_1] x ... x [0,e_s] of a PirSpec.
///
/// Tuples index ideals and association classes. Convention: the element
/// u·ρ_1^(ī_1)···ρ_s^(ī_s) belongs to the class keyed by i, where
/// ī = (e_1 - i_1, ..., e_s - i_s). So the zero element has i = 0 and the
/// units have i = (e_1, ..., e_s).
class ExponentTuple {
 public:
  /// Throws Error(InvalidArgument) on an arity or bound violation.
  ExponentTuple(const PirSpec& spec, std::vector<unsigned> exps);

  static ExponentTuple zero(const PirSpec& spec);
  static ExponentTuple top(const PirSpec& spec);

  const std::vector<unsigned>& exps() const noexcept { return exps_; }
  unsigned operator[](std::size_t k) const { return exps_[k]; }
  std::size_t size() const noexcept { return exps_.size(); }

  /// "(1,1)".
  std::string to_string() const;

  friend auto operator<=>(const ExponentTuple&, const ExponentTuple&) = default;

 private:
  ExponentTuple() = default;
  std::vector<unsigned> exps_;
};

/// Componentwise j <= i, the order matching ideal inclusion.
bool tuple_leq(const ExponentTuple& j, const ExponentTuple& i);

/// Calls `visit` on every tuple of the grid in lexicographic order.
void for_each_tuple(const PirSpec& spec, const std::function<void(const ExponentTuple&)>& visit);

/// ī = (e_1 - i_1, ..., e_s - i_s).
ExponentTuple complement(const PirSpec& spec, const ExponentTuple& i);

/// Number of generators of the ideal indexed by i:
/// prod over i_k > 0 of (q_k^i_k - q_k^(i_k - 1)).
BigInt ring_phi(const PirSpec& spec, const ExponentTuple& i);

/// Size of the ideal indexed by i, prod q_k^i_k.
BigInt ideal_size(const PirSpec& spec, const ExponentTuple& i);

/// Möbius function of the exponent grid: 0 if some i_k - j_k is negative
/// or exceeds 1, otherwise (-1)^(number of k with i_k - j_k = 1).
int ring_mobius(const PirSpec& spec, const ExponentTuple& i, const ExponentTuple& j);

/// Homogeneous weight of every element u·ρ^ī, i.e. of the class keyed by i:
/// lambda·(1 - mu(i, 0) / phi(i)).
LambdaRational weight(const PirSpec& spec, const ExponentTuple& i, const Lambda& lambda);

/// Weight of x = u·γ^ibar in a chain ring: 0 at ibar = e, λq/(q-1) at
/// ibar = e - 1, λ otherwise. Note the argument is ī, not the class key.
LambdaRational chain_weight(const ChainRingParams& params, unsigned ibar, const Lambda& lambda);

struct WeightTableRow {
  ExponentTuple tuple;
  ExponentTuple ibar;
  BigInt phi;
  int mobius;
  LambdaRational weight;
};

/// One row per grid tuple, in lexicographic tuple order.
/// Throws Error(BoundExceeded) when the grid exceeds kMaxGrid tuples.
std::vector<WeightTableRow> weight_table(const PirSpec& spec, const Lambda& lambda);

}  // namespace homring::ringspec

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

#include <complex>
#include <cstdint>
#include <vector>

#include "homring/numtheory.hpp"
#include "homring/rational.hpp"
#include "homring/ringspec.hpp"

namespace homring::zn {

/// Largest rounding residue tolerated when a floating-point character sum is
/// snapped to the integer it must equal.
inline constexpr double kRoundingGuard = 1e-6;

/// x = u·(n/m) with u a unit of Z_n and m | n.
struct CanonicalForm {
  std::uint64_t unit;
  std::uint64_t m;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// The association class {y : gcd(y, n) = d}; it generates the ideal dZ_n,
/// which has m = n/d elements, and it has phi(m) members.
struct ZnClass {
  std::uint64_t d;
  std::uint64_t m;

  friend bool operator==(const ZnClass&, const ZnClass&) = default;
};

/// x = u·p^i in Z_{p^e}, u a unit determined modulo p^(e-i).
struct ChainForm {
  unsigned i;
  std::uint64_t unit;

  friend bool operator==(const ChainForm&, const ChainForm&) = default;
};

/// The residue ring Z_n, isomorphic to the product of the chain rings
/// Z_{p_k^e_k}. Elements are the integers 0..n-1.
class ZnRing {
 public:
  static constexpr std::uint64_t kMaxModulus = 10'000'000;

  /// Throws Error(OutOfRange) unless 2 <= n <= kMaxModulus.
  explicit ZnRing(std::uint64_t n);

  std::uint64_t n() const noexcept { return n_; }
  const numtheory::FactoredInteger& factored() const noexcept { return factored_; }
  /// Chain factors (p_k, e_k), increasing p_k.
  const ringspec::PirSpec& spec() const noexcept { return spec_; }
  const std::vector<std::uint64_t>& divisors() const noexcept { return divisors_; }
  const std::vector<std::uint64_t>& units() const noexcept { return units_; }

  /// gcd(x, n), with gcd(0, n) = n. Throws Error(OutOfRange) unless x < n.
  std::uint64_t gcd_with(std::uint64_t x) const;

  /// Factorization of a divisor of n, read off n's factorization.
  numtheory::FactoredInteger factor_divisor(std::uint64_t m) const;

  /// m = n/gcd(x, n) and the least non-negative unit u with x = u·(n/m).
  CanonicalForm canonical_form(std::uint64_t x) const;

  ZnClass association_class(std::uint64_t x) const;
  /// Members of a class in increasing order.
  std::vector<std::uint64_t> members(const ZnClass& cls) const;

  /// Class key of x in spec(): i_k is the exponent of p_k in n/gcd(x, n).
  ringspec::ExponentTuple exponent_tuple(std::uint64_t x) const;

  /// The element congruent to p_k mod p_k^e_k and to 1 modulo every other
  /// chain factor (0-based k).
  std::uint64_t rho(std::size_t k) const;

  /// |association class of x| = phi(n / gcd(x, n)).
  std::uint64_t ring_phi_element(std::uint64_t x) const;

  /// lambda·(1 - mu(m)/phi(m)) with m = n/gcd(x, n).
  LambdaRational weight(std::uint64_t x, const Lambda& lambda) const;

  /// Same value by case split: λ if a square divides m, otherwise
  /// λ(φ(m) ∓ 1)/φ(m) for an even/odd number of prime factors.
  /// Throws Error(InvalidArgument) for x = 0.
  LambdaRational weight_case_form(std::uint64_t x, const Lambda& lambda) const;

  /// χ_a(y) = exp(2πi·a·y/n). `a` must be a unit; a = 1 is the standard
  /// generating character.
  std::complex<double> generating_character(std::uint64_t y, std::uint64_t a = 1) const;

  /// Sum of χ_a over the association class of x, snapped to an integer.
  /// Throws NumericalError when the residue reaches kRoundingGuard.
  std::int64_t mobius_via_character(std::uint64_t x, std::uint64_t a = 1) const;

  /// lambda·(1 - S/phi(x)) where S is the snapped class character sum.
  LambdaRational weight_via_character(std::uint64_t x, const Lambda& lambda,
                                      std::uint64_t a = 1) const;

  /// lambda·(1 - (1/|units|)·sum_u χ_a(u·x)).
  LambdaRational weight_via_unit_average(std::uint64_t x, const Lambda& lambda,
                                         std::uint64_t a = 1) const;

  /// |{u unit : u·x = x}|.
  std::uint64_t stabilizer_order(std::uint64_t x) const;

 private:
  void check_element(std::uint64_t x) const;
  void check_unit(std::uint64_t a) const;

  std::uint64_t n_;
  numtheory::FactoredInteger factored_;
  ringspec::PirSpec spec_;
  std::vector<std::uint64_t> divisors_;
  std::vector<std::uint64_t> units_;
};

/// Unique form x = u·p^i of a nonzero x in the chain ring Z_{p^e}, with u
/// reduced modulo p^(e-i). Throws Error(InvalidArgument) for x = 0, a
/// non-prime p, or x >= p^e.
ChainForm chainring_unique_form(std::uint64_t p, unsigned e, std::uint64_t x);

}  // namespace homring::zn

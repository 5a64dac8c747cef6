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
#include <optional>
#include <utility>
#include <vector>

#include "homring/rational.hpp"

namespace homring::numtheory {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer carried together with its prime factorization.
///
/// Factors are stored with strictly increasing primes and positive exponents;
/// the value 1 has an empty factor list.
class FactoredInteger {
 public:
  /// Validates and multiplies out `factors`. Throws Error(InvalidArgument)
  /// on a non-prime base, zero exponent, unsorted primes or 64-bit overflow.
  static FactoredInteger from_factors(std::vector<PrimePower> factors);

  std::uint64_t value() const noexcept { return value_; }
  const std::vector<PrimePower>& factors() const noexcept { return factors_; }

  /// Number of distinct primes.
  std::size_t size() const noexcept { return factors_.size(); }

  /// Exponent of `p` (0 if p does not divide the value).
  unsigned exponent_of(std::uint64_t p) const noexcept;

 private:
  friend FactoredInteger factor(std::uint64_t n);
  FactoredInteger(std::uint64_t value, std::vector<PrimePower> factors)
      : value_(value), factors_(std::move(factors)) {}

  std::uint64_t value_ = 1;
  std::vector<PrimePower> factors_;
};

/// Deterministic primality test (Miller-Rabin with the 64-bit witness set).
bool is_prime(std::uint64_t n);

/// Prime factorization by trial division. Throws Error(InvalidArgument) for 0.
FactoredInteger factor(std::uint64_t n);

/// (p, r) with q = p^r, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power_root(std::uint64_t q);

/// (-1)^r for a product of r distinct primes, 0 if a square divides m.
int classical_mobius(const FactoredInteger& m);

/// Product of (p^i - p^(i-1)) over the factorization.
BigInt classical_phi(const FactoredInteger& m);

/// All divisors in increasing order.
std::vector<std::uint64_t> divisors(const FactoredInteger& m);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

/// base^exp as an arbitrary precision integer.
BigInt power(std::uint64_t base, unsigned exp);

}  // namespace homring::numtheory

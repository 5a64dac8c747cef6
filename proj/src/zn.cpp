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

#include "homring/zn.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "homring/error.hpp"

namespace homring::zn {

namespace {

std::uint64_t checked_modulus(std::uint64_t n) {
  if (n < 2 || n > ZnRing::kMaxModulus)
    throw Error(ErrorCode::OutOfRange, "modulus " + std::to_string(n) + " outside [2, " +
                                           std::to_string(ZnRing::kMaxModulus) + "]");
  return n;
}

ringspec::PirSpec chain_factors(const numtheory::FactoredInteger& n) {
  std::vector<ringspec::ChainRingParams> components;
  for (const auto& f : n.factors()) components.push_back(ringspec::ChainRingParams::make(f.prime, f.exponent));
  return ringspec::PirSpec(std::move(components));
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

// Modular inverse of a modulo m (gcd(a, m) = 1), by extended Euclid.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

std::int64_t snap(std::complex<double> sum, const std::string& what) {
  const double nearest = std::round(sum.real());
  const double residue = std::abs(sum - std::complex<double>(nearest, 0.0));
  if (!(residue < kRoundingGuard))
    throw NumericalError(what + ": character sum residue " + std::to_string(residue) +
                             " exceeds the rounding guard",
                         residue);
  return static_cast<std::int64_t>(nearest);
}

}  // namespace

ZnRing::ZnRing(std::uint64_t n)
    : n_(checked_modulus(n)),
      factored_(numtheory::factor(n)),
      spec_(chain_factors(factored_)),
      divisors_(numtheory::divisors(factored_)) {
  for (std::uint64_t u = 1; u < n_; ++u)
    if (numtheory::gcd(u, n_) == 1) units_.push_back(u);
}

void ZnRing::check_element(std::uint64_t x) const {
  if (x >= n_)
    throw Error(ErrorCode::OutOfRange,
                std::to_string(x) + " is not a residue modulo " + std::to_string(n_));
}

void ZnRing::check_unit(std::uint64_t a) const {
  if (a == 0 || a >= n_ || numtheory::gcd(a, n_) != 1)
    throw Error(ErrorCode::InvalidArgument,
                "character twist " + std::to_string(a) + " is not a unit modulo " + std::to_string(n_));
}

std::uint64_t ZnRing::gcd_with(std::uint64_t x) const {
  check_element(x);
  return numtheory::gcd(x, n_);
}

numtheory::FactoredInteger ZnRing::factor_divisor(std::uint64_t m) const {
  if (m == 0 || n_ % m != 0)
    throw Error(ErrorCode::InvalidArgument, std::to_string(m) + " does not divide " + std::to_string(n_));
  std::vector<numtheory::PrimePower> factors;
  for (const auto& f : factored_.factors()) {
    unsigned e = 0;
    for (std::uint64_t rest = m; rest % f.prime == 0; rest /= f.prime) ++e;
    if (e) factors.push_back({f.prime, e});
  }
  return numtheory::FactoredInteger::from_factors(std::move(factors));
}

CanonicalForm ZnRing::canonical_form(std::uint64_t x) const {
  const std::uint64_t d = gcd_with(x);
  const std::uint64_t m = n_ / d;
  // u·d = x (mod n) iff u = x/d (mod m); take the least such unit.
  for (std::uint64_t u = (x / d) % m; u < n_; u += m)
    if (numtheory::gcd(u, n_) == 1) return {u, m};
  throw Error(ErrorCode::InvalidArgument, "no unit found for canonical form");  // unreachable
}

ZnClass ZnRing::association_class(std::uint64_t x) const {
  const std::uint64_t d = gcd_with(x);
  return {d, n_ / d};
}

std::vector<std::uint64_t> ZnRing::members(const ZnClass& cls) const {
  if (cls.d == 0 || n_ % cls.d != 0 || cls.d * cls.m != n_)
    throw Error(ErrorCode::InvalidArgument, "not an association class of Z_" + std::to_string(n_));
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 0; t < cls.m; ++t)
    if (numtheory::gcd(t, cls.m) == 1) out.push_back((t * cls.d) % n_);
  return out;
}

ringspec::ExponentTuple ZnRing::exponent_tuple(std::uint64_t x) const {
  const std::uint64_t m = n_ / gcd_with(x);
  std::vector<unsigned> exps;
  for (const auto& f : factored_.factors()) {
    unsigned e = 0;
    for (std::uint64_t rest = m; rest % f.prime == 0; rest /= f.prime) ++e;
    exps.push_back(e);
  }
  return ringspec::ExponentTuple(spec_, std::move(exps));
}

std::uint64_t ZnRing::rho(std::size_t k) const {
  const auto& factors = factored_.factors();
  if (k >= factors.size()) throw Error(ErrorCode::OutOfRange, "chain factor index out of range");
  // CRT: sum of r_l · M_l · (M_l^-1 mod q_l), M_l = n / q_l.
  std::uint64_t result = 0;
  for (std::size_t l = 0; l < factors.size(); ++l) {
    const std::uint64_t q = ipow(factors[l].prime, factors[l].exponent);
    const std::uint64_t residue = (l == k ? factors[l].prime : 1) % q;
    const std::uint64_t cofactor = n_ / q;
    const std::uint64_t term = mulmod(mulmod(residue, inverse_mod(cofactor % q, q), n_), cofactor, n_);
    result = (result + term) % n_;
  }
  return result;
}

std::uint64_t ZnRing::ring_phi_element(std::uint64_t x) const {
  const std::uint64_t m = n_ / gcd_with(x);
  return numtheory::classical_phi(factor_divisor(m)).get_ui();
}

LambdaRational ZnRing::weight(std::uint64_t x, const Lambda& lambda) const {
  const auto m = factor_divisor(n_ / gcd_with(x));
  const Rational multiple =
      Rational(1) - Rational(BigInt(numtheory::classical_mobius(m)), numtheory::classical_phi(m));
  return LambdaRational::scaled(lambda, multiple);
}

LambdaRational ZnRing::weight_case_form(std::uint64_t x, const Lambda& lambda) const {
  if (gcd_with(x) == n_)
    throw Error(ErrorCode::InvalidArgument, "the case form covers nonzero elements only");
  const auto m = factor_divisor(n_ / gcd_with(x));
  for (const auto& f : m.factors())
    if (f.exponent > 1) return LambdaRational::scaled(lambda, Rational(1));
  const BigInt phi = numtheory::classical_phi(m);
  const std::size_t simple_primes = m.size();
  const BigInt top = simple_primes % 2 == 0 ? BigInt(phi - 1) : BigInt(phi + 1);
  return LambdaRational::scaled(lambda, Rational(top, phi));
}

std::complex<double> ZnRing::generating_character(std::uint64_t y, std::uint64_t a) const {
  check_element(y);
  check_unit(a);
  const std::uint64_t k = mulmod(a, y, n_);
  if (k == 0) return {1.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_));
}

std::int64_t ZnRing::mobius_via_character(std::uint64_t x, std::uint64_t a) const {
  std::complex<double> sum{0.0, 0.0};
  for (std::uint64_t y : members(association_class(x))) sum += generating_character(y, a);
  return snap(sum, "class character sum of " + std::to_string(x) + " in Z_" + std::to_string(n_));
}

LambdaRational ZnRing::weight_via_character(std::uint64_t x, const Lambda& lambda, std::uint64_t a) const {
  const std::int64_t sum = mobius_via_character(x, a);
  const Rational multiple = Rational(1) - Rational(BigInt(sum), BigInt(ring_phi_element(x)));
  return LambdaRational::scaled(lambda, multiple);
}

LambdaRational ZnRing::weight_via_unit_average(std::uint64_t x, const Lambda& lambda,
                                               std::uint64_t a) const {
  check_element(x);
  std::complex<double> sum{0.0, 0.0};
  for (std::uint64_t u : units_) sum += generating_character(mulmod(u, x, n_), a);
  // The unit sum is |stabilizer| times the class sum, which is an integer.
  const std::uint64_t stab = stabilizer_order(x);
  const std::int64_t class_sum = snap(sum / static_cast<double>(stab),
                                      "unit-average character sum of " + std::to_string(x) +
                                          " in Z_" + std::to_string(n_));
  const Rational multiple =
      Rational(1) - Rational(BigInt(class_sum) * BigInt(stab), BigInt(units_.size()));
  return LambdaRational::scaled(lambda, multiple);
}

std::uint64_t ZnRing::stabilizer_order(std::uint64_t x) const {
  check_element(x);
  std::uint64_t count = 0;
  for (std::uint64_t u : units_)
    if (mulmod(u, x, n_) == x) ++count;
  return count;
}

ChainForm chainring_unique_form(std::uint64_t p, unsigned e, std::uint64_t x) {
  if (!numtheory::is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(ErrorCode::InvalidArgument, "nilpotency index must be at least 1");
  const std::uint64_t modulus = ipow(p, e);
  if (x == 0) throw Error(ErrorCode::InvalidArgument, "the unique form is defined for nonzero elements");
  if (x >= modulus)
    throw Error(ErrorCode::OutOfRange, std::to_string(x) + " is not a residue modulo " + std::to_string(modulus));
  unsigned i = 0;
  std::uint64_t rest = x;
  while (rest % p == 0) {
    rest /= p;
    ++i;
  }
  return {i, rest % ipow(p, e - i)};
}

}  // namespace homring::zn

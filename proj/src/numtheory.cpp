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

#include "homring/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "homring/error.hpp"

namespace homring::numtheory {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return !__builtin_mul_overflow(a, b, &out);
}

}  // namespace

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept { return std::gcd(a, b); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve witnesses are sufficient for every n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FactoredInteger FactoredInteger::from_factors(std::vector<PrimePower> factors) {
  std::uint64_t value = 1;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& f = factors[k];
    if (!is_prime(f.prime))
      throw Error(ErrorCode::InvalidArgument, std::to_string(f.prime) + " is not prime");
    if (f.exponent == 0)
      throw Error(ErrorCode::InvalidArgument, "prime exponents must be positive");
    if (k > 0 && factors[k - 1].prime >= f.prime)
      throw Error(ErrorCode::InvalidArgument, "primes must be strictly increasing");
    for (unsigned i = 0; i < f.exponent; ++i)
      if (!checked_mul(value, f.prime, value))
        throw Error(ErrorCode::OutOfRange, "factored value exceeds 64 bits");
  }
  return FactoredInteger(value, std::move(factors));
}

unsigned FactoredInteger::exponent_of(std::uint64_t p) const noexcept {
  for (const auto& f : factors_)
    if (f.prime == p) return f.exponent;
  return 0;
}

FactoredInteger factor(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot factor 0");
  std::vector<PrimePower> factors;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p <= rest / p; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    factors.push_back({p, e});
  }
  if (rest > 1) factors.push_back({rest, 1});
  return FactoredInteger(n, std::move(factors));
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power_root(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto f = factor(q);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(f.factors()[0].prime, f.factors()[0].exponent);
}

int classical_mobius(const FactoredInteger& m) {
  for (const auto& f : m.factors())
    if (f.exponent > 1) return 0;
  return m.size() % 2 == 0 ? 1 : -1;
}

BigInt power(std::uint64_t base, unsigned exp) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exp);
  return result;
}

BigInt classical_phi(const FactoredInteger& m) {
  BigInt result = 1;
  for (const auto& f : m.factors())
    result *= power(f.prime, f.exponent) - power(f.prime, f.exponent - 1);
  return result;
}

std::vector<std::uint64_t> divisors(const FactoredInteger& m) {
  std::vector<std::uint64_t> out{1};
  for (const auto& f : m.factors()) {
    const std::size_t before = out.size();
    std::uint64_t pk = 1;
    for (unsigned i = 1; i <= f.exponent; ++i) {
      pk *= f.prime;
      for (std::size_t j = 0; j < before; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace homring::numtheory

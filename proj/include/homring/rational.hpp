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

#include <compare>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace homring {

using BigInt = mpz_class;
using Rational = mpq_class;

// Parses "p", "p/q" or "-p/q" into a canonical rational. Throws ParseError.
Rational parse_rational(const std::string& text);

// Reduced "a/b" or "a" (denominator 1).
std::string to_string(const Rational& r);

/// The average weight used by a weight computation.
///
/// A symbolic lambda keeps every weight as a coefficient of an unspecified
/// non-negative scalar; a bound lambda substitutes a concrete rational.
class Lambda {
 public:
  /// Symbolic lambda; weights come back as multiples of it.
  Lambda() = default;

  /// Concrete lambda. Throws Error(InvalidArgument) when negative.
  explicit Lambda(Rational value);

  static Lambda symbolic() { return Lambda(); }
  static Lambda parse(const std::string& text);

  bool is_bound() const noexcept { return value_.has_value(); }

  /// The substituted value; 1 for the symbolic lambda.
  Rational value() const { return value_ ? *value_ : Rational(1); }

 private:
  std::optional<Rational> value_;
};

/// An exact weight value: `coefficient` times lambda when symbolic, or the
/// plain number `coefficient` when lambda was bound to a concrete rational.
class LambdaRational {
 public:
  LambdaRational() = default;
  LambdaRational(Rational coefficient, bool lambda_bound);

  /// `multiple * lambda`, with the binding of `lambda` carried over.
  static LambdaRational scaled(const Lambda& lambda, const Rational& multiple);

  const Rational& coefficient() const noexcept { return coefficient_; }
  bool lambda_bound() const noexcept { return lambda_bound_; }

  std::string numerator_string() const;
  std::string denominator_string() const;

  /// `0`, `1/2λ`, `λ`, `3/2λ`, `2λ`; the suffix is dropped when bound.
  std::string to_string() const;

  LambdaRational& operator+=(const LambdaRational& rhs);
  friend LambdaRational operator+(LambdaRational lhs, const LambdaRational& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend LambdaRational operator-(const LambdaRational& lhs, const LambdaRational& rhs);

  friend bool operator==(const LambdaRational& a, const LambdaRational& b) {
    return a.lambda_bound_ == b.lambda_bound_ && a.coefficient_ == b.coefficient_;
  }
  friend std::strong_ordering operator<=>(const LambdaRational& a,
                                          const LambdaRational& b);

 private:
  Rational coefficient_{0};
  bool lambda_bound_ = false;
};

}  // namespace homring

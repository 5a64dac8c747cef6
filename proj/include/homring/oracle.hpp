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
#include <optional>
#include <string>
#include <vector>

#include "homring/poset.hpp"
#include "homring/rational.hpp"

namespace homring::oracle {

inline constexpr std::uint64_t kMinModulus = 2;
inline constexpr std::uint64_t kMaxModulus = 5000;

/// The principal ideals of Z_n found by raw multiplication, ordered by
/// inclusion (J <= I iff J is a subset of I). Nothing here relies on
/// divisors, gcds or closed forms: ideals are the distinct sets
/// {r·x mod n : r in Z_n} and phi(I) counts the x that produce I.
class IdealPoset {
 public:
  std::uint64_t n() const noexcept { return n_; }
  std::size_t ideal_count() const noexcept { return ideals_.size(); }

  /// Sorted elements of ideal I.
  const std::vector<std::uint64_t>& ideal(poset::Index I) const { return ideals_.at(I); }
  std::uint64_t size(poset::Index I) const { return ideals_.at(I).size(); }
  /// Least element generating I.
  std::uint64_t least_generator(poset::Index I) const { return least_generator_.at(I); }
  /// Counted phi(I): how many x satisfy xZ_n = I.
  std::uint64_t generator_count(poset::Index I) const { return generator_count_.at(I); }

  /// Index of the ideal xZ_n.
  poset::Index ideal_of(std::uint64_t x) const;
  poset::Index zero_ideal() const noexcept { return zero_; }
  poset::Index whole_ring() const noexcept { return whole_; }

  const poset::FinitePoset& poset() const noexcept { return poset_; }

 private:
  friend IdealPoset enumerate_ideals(std::uint64_t n);

  std::uint64_t n_ = 0;
  std::vector<std::vector<std::uint64_t>> ideals_;
  std::vector<std::uint64_t> least_generator_;
  std::vector<std::uint64_t> generator_count_;
  std::vector<poset::Index> ideal_of_;
  poset::Index zero_ = 0;
  poset::Index whole_ = 0;
  poset::FinitePoset poset_;
};

/// Throws Error(OutOfRange) unless kMinModulus <= n <= kMaxModulus.
IdealPoset enumerate_ideals(std::uint64_t n);

/// sum_{J <= I} mu(I, J)·|J|.
std::int64_t phi_via_inversion(const IdealPoset& ideals, poset::Index I);

/// lambda·(1 - mu(xZ_n, 0)/phi(x)) with mu from the generic poset recursion.
LambdaRational weight_via_poset(const IdealPoset& ideals, std::uint64_t x, const Lambda& lambda);

/// The helper t(I) = lambda·|I| for I != 0 and t(0) = 0, indexed by ideal.
std::vector<LambdaRational> helper_table(const IdealPoset& ideals, const Lambda& lambda);

/// Per-element weights recovered from the helper t by Möbius inversion:
/// phi(I)·w(I) = sum_{J <= I} mu(I, J)·t(J).
std::vector<LambdaRational> weight_via_helper_inversion(const IdealPoset& ideals, const Lambda& lambda);

struct H1Violation {
  std::uint64_t x;
  std::uint64_t y;
  LambdaRational wx;
  LambdaRational wy;
};

struct H2Residual {
  std::uint64_t generator;  // least generator of the ideal
  std::uint64_t ideal_size;
  LambdaRational sum;       // sum of w over the ideal
  LambdaRational residual;  // sum - lambda·|ideal|
};

struct Disagreement {
  std::uint64_t x;
  std::string route;
  LambdaRational reference;  // the first route's value
  LambdaRational value;
};

struct RouteTable {
  std::string name;
  std::vector<LambdaRational> weights;  // indexed by element
};

struct HelperEntry {
  std::uint64_t generator;
  std::uint64_t ideal_size;
  LambdaRational t;
};

/// Outcome of an axiom check or a route cross-check on Z_n. Failures are
/// data: `passed()` is true iff w(0) = 0, H1 holds, every H2 residual is
/// exactly zero, no route disagrees and no character sum tripped the guard.
struct VerificationReport {
  std::uint64_t n = 0;
  Lambda lambda;
  std::vector<RouteTable> routes;
  LambdaRational zero_weight;
  std::optional<H1Violation> h1_violation;
  std::vector<H2Residual> h2;
  std::vector<Disagreement> disagreements;
  std::vector<HelperEntry> helper;
  std::optional<std::string> numerical_failure;

  bool zero_ok() const { return zero_weight.coefficient() == 0; }
  bool h1_ok() const { return !h1_violation.has_value(); }
  bool h2_ok() const;
  bool passed() const;
};

using WeightFunction = std::function<LambdaRational(std::uint64_t)>;

/// Checks w(0) = 0, H1 on every association class and H2 on every nonzero
/// principal ideal by literal summation.
VerificationReport verify_axioms(std::uint64_t n, const WeightFunction& weight, const Lambda& lambda);
VerificationReport verify_axioms(const IdealPoset& ideals, const WeightFunction& weight,
                                 const Lambda& lambda);

/// Route names in the order they appear in a cross-check report.
const std::vector<std::string>& route_names();

/// Computes the weight of every element by the five routes (closed form on
/// Z_n, generic poset Möbius, class character sum, unit average, symbolic
/// PIR spec), compares them to the first, checks the helper inversion and
/// runs verify_axioms on the closed-form table.
VerificationReport cross_check_routes(std::uint64_t n, const Lambda& lambda);

}  // namespace homring::oracle

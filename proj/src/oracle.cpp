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

#include "homring/oracle.hpp"

#include <algorithm>
#include <map>

#include "homring/error.hpp"
#include "homring/ringspec.hpp"
#include "homring/zn.hpp"

namespace homring::oracle {

using poset::Index;

Index IdealPoset::ideal_of(std::uint64_t x) const {
  if (x >= n_)
    throw Error(ErrorCode::OutOfRange, std::to_string(x) + " is not a residue modulo " + std::to_string(n_));
  return ideal_of_[x];
}

IdealPoset enumerate_ideals(std::uint64_t n) {
  if (n < kMinModulus || n > kMaxModulus)
    throw Error(ErrorCode::OutOfRange, "oracle modulus " + std::to_string(n) + " outside [" +
                                           std::to_string(kMinModulus) + ", " +
                                           std::to_string(kMaxModulus) + "]");
  IdealPoset result;
  result.n_ = n;
  result.ideal_of_.resize(n);
  std::map<std::vector<std::uint64_t>, Index> seen;
  std::vector<char> mark(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    std::fill(mark.begin(), mark.end(), 0);
    for (std::uint64_t r = 0; r < n; ++r) mark[(r * x) % n] = 1;
    std::vector<std::uint64_t> elements;
    for (std::uint64_t y = 0; y < n; ++y)
      if (mark[y]) elements.push_back(y);
    auto [it, inserted] = seen.emplace(std::move(elements), result.ideals_.size());
    if (inserted) {
      result.ideals_.push_back(it->first);
      result.least_generator_.push_back(x);
      result.generator_count_.push_back(0);
    }
    result.ideal_of_[x] = it->second;
    ++result.generator_count_[it->second];
  }
  result.zero_ = result.ideal_of_[0];
  result.whole_ = result.ideal_of_[1];
  std::vector<std::string> labels;
  for (std::uint64_t g : result.least_generator_) labels.push_back(std::to_string(g) + "Z_" + std::to_string(n));
  const auto& ideals = result.ideals_;
  result.poset_ = poset::FinitePoset::build(
      ideals.size(),
      [&](Index J, Index I) {
        return std::includes(ideals[I].begin(), ideals[I].end(), ideals[J].begin(), ideals[J].end());
      },
      std::move(labels));
  return result;
}

std::int64_t phi_via_inversion(const IdealPoset& ideals, Index I) {
  std::int64_t total = 0;
  for (Index J : ideals.poset().down_set(I))
    total += ideals.poset().mobius(I, J) * static_cast<std::int64_t>(ideals.size(J));
  return total;
}

LambdaRational weight_via_poset(const IdealPoset& ideals, std::uint64_t x, const Lambda& lambda) {
  const Index I = ideals.ideal_of(x);
  const std::int64_t mu = ideals.poset().mobius(I, ideals.zero_ideal());
  const Rational multiple = Rational(1) - Rational(BigInt(mu), BigInt(ideals.generator_count(I)));
  return LambdaRational::scaled(lambda, multiple);
}

std::vector<LambdaRational> helper_table(const IdealPoset& ideals, const Lambda& lambda) {
  std::vector<LambdaRational> t;
  for (Index I = 0; I < ideals.ideal_count(); ++I) {
    const Rational size = I == ideals.zero_ideal() ? Rational(0) : Rational(BigInt(ideals.size(I)));
    t.push_back(LambdaRational::scaled(lambda, size));
  }
  return t;
}

std::vector<LambdaRational> weight_via_helper_inversion(const IdealPoset& ideals, const Lambda& lambda) {
  const auto t = helper_table(ideals, lambda);
  std::vector<Rational> g;
  for (const auto& v : t) g.push_back(v.coefficient());
  const auto phi_times_w = ideals.poset().mobius_invert(g);
  std::vector<LambdaRational> per_ideal;
  for (Index I = 0; I < ideals.ideal_count(); ++I)
    per_ideal.emplace_back(phi_times_w[I] / Rational(BigInt(ideals.generator_count(I))), lambda.is_bound());
  std::vector<LambdaRational> out;
  for (std::uint64_t x = 0; x < ideals.n(); ++x) out.push_back(per_ideal[ideals.ideal_of(x)]);
  return out;
}

bool VerificationReport::h2_ok() const {
  return std::all_of(h2.begin(), h2.end(), [](const H2Residual& r) { return r.residual.coefficient() == 0; });
}

bool VerificationReport::passed() const {
  return zero_ok() && h1_ok() && h2_ok() && disagreements.empty() && !numerical_failure;
}

VerificationReport verify_axioms(std::uint64_t n, const WeightFunction& weight, const Lambda& lambda) {
  return verify_axioms(enumerate_ideals(n), weight, lambda);
}

VerificationReport verify_axioms(const IdealPoset& ideals, const WeightFunction& weight, const Lambda& lambda) {
  VerificationReport report;
  report.n = ideals.n();
  report.lambda = lambda;
  std::vector<LambdaRational> w;
  w.reserve(ideals.n());
  for (std::uint64_t x = 0; x < ideals.n(); ++x) w.push_back(weight(x));
  report.zero_weight = w[0];

  // H1: x and y associate iff they generate the same principal ideal.
  for (std::uint64_t y = 0; y < ideals.n() && !report.h1_violation; ++y) {
    const std::uint64_t x = ideals.least_generator(ideals.ideal_of(y));
    if (w[x] != w[y]) report.h1_violation = H1Violation{x, y, w[x], w[y]};
  }

  const auto t = helper_table(ideals, lambda);
  for (Index I = 0; I < ideals.ideal_count(); ++I) {
    report.helper.push_back({ideals.least_generator(I), ideals.size(I), t[I]});
    if (I == ideals.zero_ideal()) continue;
    LambdaRational sum(Rational(0), lambda.is_bound());
    for (std::uint64_t y : ideals.ideal(I)) sum += w[y];
    const auto expected = LambdaRational::scaled(lambda, Rational(BigInt(ideals.size(I))));
    report.h2.push_back({ideals.least_generator(I), ideals.size(I), sum, sum - expected});
  }
  std::sort(report.h2.begin(), report.h2.end(),
            [](const H2Residual& a, const H2Residual& b) { return a.generator < b.generator; });
  std::sort(report.helper.begin(), report.helper.end(),
            [](const HelperEntry& a, const HelperEntry& b) { return a.generator < b.generator; });
  return report;
}

const std::vector<std::string>& route_names() {
  static const std::vector<std::string> names{"closed_form", "ideal_poset", "character_sum",
                                              "unit_average", "pir_spec"};
  return names;
}

VerificationReport cross_check_routes(std::uint64_t n, const Lambda& lambda) {
  const IdealPoset ideals = enumerate_ideals(n);
  const zn::ZnRing ring(n);
  std::vector<RouteTable> routes;
  std::optional<std::string> numerical_failure;

  auto add_route = [&](const std::string& name, const WeightFunction& fn) {
    RouteTable table{name, {}};
    try {
      for (std::uint64_t x = 0; x < n; ++x) table.weights.push_back(fn(x));
    } catch (const NumericalError& e) {
      if (!numerical_failure) numerical_failure = e.what();
      return;
    }
    routes.push_back(std::move(table));
  };
  const auto& names = route_names();
  add_route(names[0], [&](std::uint64_t x) { return ring.weight(x, lambda); });
  add_route(names[1], [&](std::uint64_t x) { return weight_via_poset(ideals, x, lambda); });
  add_route(names[2], [&](std::uint64_t x) { return ring.weight_via_character(x, lambda); });
  add_route(names[3], [&](std::uint64_t x) { return ring.weight_via_unit_average(x, lambda); });
  add_route(names[4], [&](std::uint64_t x) {
    return ringspec::weight(ring.spec(), ring.exponent_tuple(x), lambda);
  });

  const auto& reference = routes.front().weights;
  VerificationReport report = verify_axioms(ideals, [&](std::uint64_t x) { return reference[x]; }, lambda);
  for (std::size_t r = 1; r < routes.size(); ++r)
    for (std::uint64_t x = 0; x < n; ++x)
      if (routes[r].weights[x] != reference[x])
        report.disagreements.push_back({x, routes[r].name, reference[x], routes[r].weights[x]});
  const auto recovered = weight_via_helper_inversion(ideals, lambda);
  for (std::uint64_t x = 0; x < n; ++x)
    if (recovered[x] != reference[x])
      report.disagreements.push_back({x, "helper_inversion", reference[x], recovered[x]});
  report.routes = std::move(routes);
  report.numerical_failure = std::move(numerical_failure);
  return report;
}

}  // namespace homring::oracle

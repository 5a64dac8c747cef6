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

#include "homring/ringspec.hpp"

#include <cctype>
#include <limits>

#include "homring/error.hpp"
#include "homring/numtheory.hpp"

namespace homring::ringspec {

using numtheory::power;

ChainRingParams ChainRingParams::make(std::uint64_t q, unsigned e) {
  const auto root = numtheory::prime_power_root(q);
  if (!root)
    throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
  if (e == 0) throw Error(ErrorCode::InvalidArgument, "nilpotency index must be at least 1");
  return ChainRingParams{q, e, root->first, root->second};
}

BigInt ChainRingParams::cardinality() const { return power(q, e); }

BigInt ChainRingParams::ideal_size(unsigned j) const {
  if (j > e) throw Error(ErrorCode::OutOfRange, "ideal index exceeds nilpotency index");
  return power(q, e - j);
}

PirSpec::PirSpec(std::vector<ChainRingParams> components) : components_(std::move(components)) {
  if (components_.empty())
    throw Error(ErrorCode::InvalidArgument, "a ring spec needs at least one chain ring");
  for (const auto& c : components_) {
    // re-validate hand-built params
    if (ChainRingParams::make(c.q, c.e) != c)
      throw Error(ErrorCode::InvalidArgument, "inconsistent chain ring parameters");
  }
}

namespace {

std::uint64_t parse_number(const std::string& text, std::size_t& pos, const std::string& whole) {
  const std::size_t start = pos;
  std::uint64_t value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    const std::uint64_t digit = text[pos] - '0';
    if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
      throw ParseError("number too large in ring spec '" + whole + "'", 0);
    value = value * 10 + digit;
    ++pos;
  }
  if (pos == start)
    throw ParseError("expected a number at offset " + std::to_string(start) + " in ring spec '" +
                         whole + "'",
                     0);
  return value;
}

}  // namespace

PirSpec PirSpec::parse(const std::string& text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty()) throw ParseError("empty ring spec", 0);
  std::vector<ChainRingParams> components;
  std::size_t pos = 0;
  while (true) {
    const std::uint64_t q = parse_number(compact, pos, text);
    std::uint64_t e = 1;
    if (pos < compact.size() && compact[pos] == '^') {
      ++pos;
      e = parse_number(compact, pos, text);
      if (e == 0 || e > std::numeric_limits<unsigned>::max())
        throw ParseError("nilpotency index out of range in ring spec '" + text + "'", 0);
    }
    components.push_back(ChainRingParams::make(q, static_cast<unsigned>(e)));
    if (pos == compact.size()) break;
    if (compact[pos] != 'x' && compact[pos] != 'X')
      throw ParseError("expected 'x' between factors at offset " + std::to_string(pos) +
                           " in ring spec '" + text + "'",
                       0);
    ++pos;
  }
  return PirSpec(std::move(components));
}

BigInt PirSpec::cardinality() const {
  BigInt total = 1;
  for (const auto& c : components_) total *= c.cardinality();
  return total;
}

std::uint64_t PirSpec::grid_size() const {
  std::uint64_t total = 1;
  for (const auto& c : components_)
    if (__builtin_mul_overflow(total, std::uint64_t{c.e} + 1, &total))
      return std::numeric_limits<std::uint64_t>::max();
  return total;
}

std::string PirSpec::to_string() const {
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out += "x";
    out += std::to_string(c.q) + "^" + std::to_string(c.e);
  }
  return out;
}

ExponentTuple::ExponentTuple(const PirSpec& spec, std::vector<unsigned> exps) : exps_(std::move(exps)) {
  if (exps_.size() != spec.arity())
    throw Error(ErrorCode::InvalidArgument, "exponent tuple arity does not match ring spec");
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] > spec.components()[k].e)
      throw Error(ErrorCode::InvalidArgument, "exponent " + std::to_string(exps_[k]) +
                                                  " exceeds nilpotency index " +
                                                  std::to_string(spec.components()[k].e));
}

ExponentTuple ExponentTuple::zero(const PirSpec& spec) {
  return ExponentTuple(spec, std::vector<unsigned>(spec.arity(), 0));
}

ExponentTuple ExponentTuple::top(const PirSpec& spec) {
  std::vector<unsigned> exps;
  for (const auto& c : spec.components()) exps.push_back(c.e);
  return ExponentTuple(spec, std::move(exps));
}

std::string ExponentTuple::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(exps_[k]);
  }
  return out + ")";
}

bool tuple_leq(const ExponentTuple& j, const ExponentTuple& i) {
  if (j.size() != i.size()) throw Error(ErrorCode::InvalidArgument, "exponent tuple arity mismatch");
  for (std::size_t k = 0; k < i.size(); ++k)
    if (j[k] > i[k]) return false;
  return true;
}

void for_each_tuple(const PirSpec& spec, const std::function<void(const ExponentTuple&)>& visit) {
  std::vector<unsigned> exps(spec.arity(), 0);
  while (true) {
    visit(ExponentTuple(spec, exps));
    std::size_t k = exps.size();
    while (k > 0) {
      --k;
      if (exps[k] < spec.components()[k].e) {
        ++exps[k];
        break;
      }
      exps[k] = 0;
      if (k == 0) return;
    }
  }
}

ExponentTuple complement(const PirSpec& spec, const ExponentTuple& i) {
  std::vector<unsigned> out(i.size());
  for (std::size_t k = 0; k < i.size(); ++k) out[k] = spec.components()[k].e - i[k];
  return ExponentTuple(spec, std::move(out));
}

BigInt ring_phi(const PirSpec& spec, const ExponentTuple& i) {
  BigInt result = 1;
  for (std::size_t k = 0; k < i.size(); ++k) {
    if (i[k] == 0) continue;
    const auto q = spec.components()[k].q;
    result *= power(q, i[k]) - power(q, i[k] - 1);
  }
  return result;
}

BigInt ideal_size(const PirSpec& spec, const ExponentTuple& i) {
  BigInt result = 1;
  for (std::size_t k = 0; k < i.size(); ++k) result *= power(spec.components()[k].q, i[k]);
  return result;
}

int ring_mobius(const PirSpec& spec, const ExponentTuple& i, const ExponentTuple& j) {
  if (i.size() != spec.arity() || j.size() != spec.arity())
    throw Error(ErrorCode::InvalidArgument, "exponent tuple arity mismatch");
  int sign = 1;
  for (std::size_t k = 0; k < i.size(); ++k) {
    const long diff = static_cast<long>(i[k]) - static_cast<long>(j[k]);
    if (diff < 0 || diff > 1) return 0;
    if (diff == 1) sign = -sign;
  }
  return sign;
}

LambdaRational weight(const PirSpec& spec, const ExponentTuple& i, const Lambda& lambda) {
  const int mu = ring_mobius(spec, i, ExponentTuple::zero(spec));
  const Rational multiple = Rational(1) - Rational(BigInt(mu), ring_phi(spec, i));
  return LambdaRational::scaled(lambda, multiple);
}

LambdaRational chain_weight(const ChainRingParams& params, unsigned ibar, const Lambda& lambda) {
  if (ibar > params.e) throw Error(ErrorCode::OutOfRange, "γ-exponent exceeds nilpotency index");
  if (ibar == params.e) return LambdaRational::scaled(lambda, Rational(0));
  if (ibar == params.e - 1)
    return LambdaRational::scaled(lambda, Rational(BigInt(params.q), BigInt(params.q - 1)));
  return LambdaRational::scaled(lambda, Rational(1));
}

std::vector<WeightTableRow> weight_table(const PirSpec& spec, const Lambda& lambda) {
  if (spec.grid_size() > PirSpec::kMaxGrid)
    throw Error(ErrorCode::BoundExceeded, "exponent grid of " + spec.to_string() + " exceeds " +
                                              std::to_string(PirSpec::kMaxGrid) + " tuples");
  std::vector<WeightTableRow> rows;
  rows.reserve(spec.grid_size());
  const auto zero = ExponentTuple::zero(spec);
  for_each_tuple(spec, [&](const ExponentTuple& i) {
    rows.push_back(WeightTableRow{i, complement(spec, i), ring_phi(spec, i),
                                  ring_mobius(spec, i, zero), weight(spec, i, lambda)});
  });
  return rows;
}

}  // namespace homring::ringspec

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

#include "homring/codes.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "homring/error.hpp"

namespace homring::codes {

GeneratorMatrix::GeneratorMatrix(std::uint64_t n, std::size_t k, std::size_t l, std::vector<std::uint64_t> entries)
    : n_(n), k_(k), l_(l), entries_(std::move(entries)) {
  if (n < 2 || n > zn::ZnRing::kMaxModulus)
    throw Error(ErrorCode::OutOfRange, "code modulus " + std::to_string(n) + " out of range");
  if (k == 0 || l == 0) throw Error(ErrorCode::InvalidArgument, "generator matrix needs k, l >= 1");
  if (entries_.size() != k * l)
    throw Error(ErrorCode::InvalidArgument, "generator matrix has " + std::to_string(entries_.size()) +
                                                " entries, expected " + std::to_string(k * l));
  for (auto v : entries_)
    if (v >= n) throw Error(ErrorCode::InvalidArgument, "matrix entry " + std::to_string(v) + " not reduced mod n");
}

namespace {

std::vector<std::uint64_t> parse_line(const std::string& line, std::size_t number) {
  std::vector<std::uint64_t> out;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 18)
      throw ParseError("line " + std::to_string(number) + ": '" + token + "' is not a non-negative integer", number);
    out.push_back(std::stoull(token));
  }
  return out;
}

}  // namespace

GeneratorMatrix GeneratorMatrix::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> lines;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto values = parse_line(line, number);
    if (!values.empty()) lines.emplace_back(number, std::move(values));
  }
  if (lines.empty()) throw ParseError("line 1: missing header 'n k l'", 1);
  const auto& [header_line, header] = lines.front();
  if (header.size() != 3)
    throw ParseError("line " + std::to_string(header_line) + ": header must be 'n k l'", header_line);
  const std::uint64_t n = header[0];
  const std::size_t k = header[1];
  const std::size_t l = header[2];
  if (n < 2 || k == 0 || l == 0)
    throw ParseError("line " + std::to_string(header_line) + ": need n >= 2, k >= 1, l >= 1", header_line);
  if (lines.size() - 1 != k)
    throw ParseError("line " + std::to_string(lines.back().first) + ": expected " + std::to_string(k) +
                         " matrix rows, found " + std::to_string(lines.size() - 1),
                     lines.back().first);
  std::vector<std::uint64_t> entries;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto& [row_line, row] = lines[r];
    if (row.size() != l)
      throw ParseError("line " + std::to_string(row_line) + ": expected " + std::to_string(l) + " entries",
                       row_line);
    for (auto v : row) {
      if (v >= n)
        throw ParseError("line " + std::to_string(row_line) + ": entry " + std::to_string(v) +
                             " not reduced modulo " + std::to_string(n),
                         row_line);
      entries.push_back(v);
    }
  }
  try {
    return GeneratorMatrix(n, k, l, std::move(entries));
  } catch (const Error& e) {
    throw ParseError("line " + std::to_string(header_line) + ": " + e.what(), header_line);
  }
}

LambdaRational vector_weight(const zn::ZnRing& ring, const Vector& v, const Lambda& lambda) {
  LambdaRational total(Rational(0), lambda.is_bound());
  for (auto x : v) total += ring.weight(x, lambda);
  return total;
}

std::vector<Vector> enumerate_code(const GeneratorMatrix& g) {
  const std::uint64_t n = g.modulus();
  std::uint64_t messages = 1;
  for (std::size_t r = 0; r < g.rows(); ++r)
    if (__builtin_mul_overflow(messages, n, &messages) || messages > kMaxMessages)
      throw Error(ErrorCode::BoundExceeded,
                  "message space n^k exceeds " + std::to_string(kMaxMessages));
  std::set<Vector> code;
  Vector message(g.rows(), 0);
  Vector word(g.length());
  for (std::uint64_t index = 0; index < messages; ++index) {
    std::fill(word.begin(), word.end(), 0);
    for (std::size_t r = 0; r < g.rows(); ++r) {
      if (message[r] == 0) continue;
      for (std::size_t c = 0; c < g.length(); ++c) word[c] = (word[c] + message[r] * g.at(r, c)) % n;
    }
    code.insert(word);
    for (std::size_t r = g.rows(); r-- > 0;) {
      if (++message[r] < n) break;
      message[r] = 0;
    }
  }
  return {code.begin(), code.end()};
}

WeightDistribution weight_enumerator(const GeneratorMatrix& g, const Lambda& lambda) {
  const zn::ZnRing ring(g.modulus());
  WeightDistribution dist;
  for (const auto& word : enumerate_code(g)) {
    ++dist.counts[vector_weight(ring, word, lambda)];
    ++dist.total;
  }
  return dist;
}

}  // namespace homring::codes

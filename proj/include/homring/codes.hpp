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
#include <map>
#include <string>
#include <vector>

#include "homring/rational.hpp"
#include "homring/zn.hpp"

namespace homring::codes {

using Vector = std::vector<std::uint64_t>;

/// k x l generator matrix over Z_n, row-major, entries reduced mod n.
class GeneratorMatrix {
 public:
  /// Throws Error(InvalidArgument) on empty dimensions, a wrong entry count
  /// or an unreduced entry, Error(OutOfRange) on a bad modulus.
  GeneratorMatrix(std::uint64_t n, std::size_t k, std::size_t l, std::vector<std::uint64_t> entries);

  /// Text format: header line `n k l`, then k lines of l integers. Blank
  /// lines and `#` comments are skipped. Throws ParseError naming the line.
  static GeneratorMatrix parse(const std::string& text);

  std::uint64_t modulus() const noexcept { return n_; }
  std::size_t rows() const noexcept { return k_; }
  std::size_t length() const noexcept { return l_; }
  std::uint64_t at(std::size_t row, std::size_t col) const { return entries_.at(row * l_ + col); }

 private:
  std::uint64_t n_;
  std::size_t k_;
  std::size_t l_;
  std::vector<std::uint64_t> entries_;
};

/// Number of codewords attaining each total weight.
struct WeightDistribution {
  std::map<LambdaRational, std::uint64_t> counts;
  std::uint64_t total = 0;
};

inline constexpr std::uint64_t kMaxMessages = 1'000'000;

/// Sum of the homogeneous weights of the coordinates.
LambdaRational vector_weight(const zn::ZnRing& ring, const Vector& v, const Lambda& lambda);

/// All distinct codewords xG, sorted. Throws Error(BoundExceeded) when
/// n^k exceeds kMaxMessages.
std::vector<Vector> enumerate_code(const GeneratorMatrix& g);

WeightDistribution weight_enumerator(const GeneratorMatrix& g, const Lambda& lambda);

}  // namespace homring::codes

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

#include "homring/rational.hpp"

#include <cctype>

#include "homring/error.hpp"

namespace homring {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

void check_binding(const LambdaRational& a, const LambdaRational& b) {
  if (a.lambda_bound() != b.lambda_bound())
    throw Error(ErrorCode::InvalidArgument,
                "cannot combine symbolic and bound lambda values");
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  const auto slash = body.find('/');
  const std::string num = body.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + text + "', expected p or p/q", 0);
  Rational r{BigInt(num), BigInt(den)};
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'", 0);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Lambda::Lambda(Rational value) : value_(std::move(value)) {
  value_->canonicalize();
  if (*value_ < 0)
    throw Error(ErrorCode::InvalidArgument, "lambda must be non-negative");
}

Lambda Lambda::parse(const std::string& text) { return Lambda(parse_rational(text)); }

LambdaRational::LambdaRational(Rational coefficient, bool lambda_bound)
    : coefficient_(std::move(coefficient)), lambda_bound_(lambda_bound) {
  coefficient_.canonicalize();
}

LambdaRational LambdaRational::scaled(const Lambda& lambda, const Rational& multiple) {
  if (!lambda.is_bound()) return LambdaRational(multiple, false);
  return LambdaRational(multiple * lambda.value(), true);
}

std::string LambdaRational::numerator_string() const {
  return coefficient_.get_num().get_str();
}

std::string LambdaRational::denominator_string() const {
  return coefficient_.get_den().get_str();
}

std::string LambdaRational::to_string() const {
  if (coefficient_ == 0) return "0";
  if (lambda_bound_) return homring::to_string(coefficient_);
  if (coefficient_ == 1) return "λ";
  if (coefficient_ == -1) return "-λ";
  return homring::to_string(coefficient_) + "λ";
}

LambdaRational& LambdaRational::operator+=(const LambdaRational& rhs) {
  check_binding(*this, rhs);
  coefficient_ += rhs.coefficient_;
  return *this;
}

LambdaRational operator-(const LambdaRational& lhs, const LambdaRational& rhs) {
  check_binding(lhs, rhs);
  return LambdaRational(lhs.coefficient_ - rhs.coefficient_, lhs.lambda_bound_);
}

std::strong_ordering operator<=>(const LambdaRational& a, const LambdaRational& b) {
  if (a.lambda_bound_ != b.lambda_bound_) return a.lambda_bound_ <=> b.lambda_bound_;
  const int c = cmp(a.coefficient_, b.coefficient_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace homring

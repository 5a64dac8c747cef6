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

#include <stdexcept>
#include <string>

namespace homring {

enum class ErrorCode {
  InvalidArgument,
  OutOfRange,
  Parse,
  NotAPoset,
  Incomparable,
  BoundExceeded,
  Numerical,
};

// Base exception for every failure the library reports. The C API maps
// `code()` onto its status enumeration.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when a floating-point character sum drifts too far from an integer.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double residue)
      : Error(ErrorCode::Numerical, what), residue_(residue) {}

  double residue() const noexcept { return residue_; }

 private:
  double residue_;
};

// Raised by text parsers; `line()` is 1-based, 0 when not line oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(ErrorCode::Parse, what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace homring

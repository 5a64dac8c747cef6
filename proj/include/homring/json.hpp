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

#include <json.hpp>

#include "homring/oracle.hpp"
#include "homring/rational.hpp"

namespace homring {

/// {"num": ..., "den": ..., "lambda_bound": ...}; num/den are JSON integers
/// when they fit in 64 bits and decimal strings otherwise.
nlohmann::json to_json(const LambdaRational& w);

/// Structured document for a verification report.
nlohmann::json to_json(const oracle::VerificationReport& report);

}  // namespace homring

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

#include "homring/json.hpp"

#include <algorithm>

namespace homring {

namespace {

nlohmann::json integer(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace

nlohmann::json to_json(const LambdaRational& w) {
  return {{"num", integer(w.coefficient().get_num())},
          {"den", integer(w.coefficient().get_den())},
          {"lambda_bound", w.lambda_bound()}};
}

nlohmann::json to_json(const oracle::VerificationReport& report) {
  nlohmann::json doc;
  doc["n"] = report.n;
  doc["lambda"] = report.lambda.is_bound() ? to_string(report.lambda.value()) : "symbolic";
  doc["passed"] = report.passed();

  std::size_t agreeing = 0;
  nlohmann::json routes = nlohmann::json::array();
  for (const auto& route : report.routes) {
    const bool ok = std::none_of(report.disagreements.begin(), report.disagreements.end(),
                                 [&](const oracle::Disagreement& d) { return d.route == route.name; });
    agreeing += ok ? 1 : 0;
    routes.push_back({{"name", route.name}, {"agrees", ok}});
  }
  doc["routes"] = routes;
  doc["routes_agreeing"] = agreeing;

  doc["zero_weight"] = to_json(report.zero_weight);
  doc["zero_ok"] = report.zero_ok();

  nlohmann::json h1 = {{"ok", report.h1_ok()}};
  if (report.h1_violation) {
    const auto& v = *report.h1_violation;
    h1["witness"] = {v.x, v.y};
    h1["weights"] = {to_json(v.wx), to_json(v.wy)};
  }
  doc["h1"] = h1;

  nlohmann::json h2 = nlohmann::json::array();
  for (const auto& r : report.h2)
    h2.push_back({{"generator", r.generator},
                  {"ideal_size", r.ideal_size},
                  {"sum", to_json(r.sum)},
                  {"residual", to_json(r.residual)}});
  doc["h2"] = {{"ok", report.h2_ok()}, {"ideals", h2}};

  nlohmann::json disagreements = nlohmann::json::array();
  for (const auto& d : report.disagreements)
    disagreements.push_back(
        {{"x", d.x}, {"route", d.route}, {"reference", to_json(d.reference)}, {"value", to_json(d.value)}});
  doc["disagreements"] = disagreements;

  nlohmann::json helper = nlohmann::json::array();
  for (const auto& h : report.helper)
    helper.push_back({{"generator", h.generator}, {"ideal_size", h.ideal_size}, {"t", to_json(h.t)}});
  doc["helper_t"] = helper;

  doc["numerical_failure"] =
      report.numerical_failure ? nlohmann::json(*report.numerical_failure) : nlohmann::json(nullptr);
  return doc;
}

}  // namespace homring

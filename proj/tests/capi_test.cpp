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

#include "homring/homring.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <memory>
#include <string>

#include "brute_force.hpp"

namespace {

struct LambdaDeleter {
  void operator()(hr_lambda* p) const { hr_lambda_free(p); }
};
struct WeightDeleter {
  void operator()(hr_weight* p) const { hr_weight_free(p); }
};
struct ZnDeleter {
  void operator()(hr_zn* p) const { hr_zn_free(p); }
};
struct TableDeleter {
  void operator()(hr_table* p) const { hr_table_free(p); }
};
struct ReportDeleter {
  void operator()(hr_report* p) const { hr_report_free(p); }
};
struct CodeDeleter {
  void operator()(hr_code* p) const { hr_code_free(p); }
};
struct DistDeleter {
  void operator()(hr_distribution* p) const { hr_distribution_free(p); }
};

using LambdaPtr = std::unique_ptr<hr_lambda, LambdaDeleter>;
using WeightPtr = std::unique_ptr<hr_weight, WeightDeleter>;
using ZnPtr = std::unique_ptr<hr_zn, ZnDeleter>;

LambdaPtr lambda(const char* text) {
  hr_lambda* out = nullptr;
  EXPECT_EQ(text ? hr_lambda_parse(text, &out) : hr_lambda_symbolic(&out), HR_OK);
  return LambdaPtr(out);
}

ZnPtr zn(std::uint64_t n) {
  hr_zn* out = nullptr;
  EXPECT_EQ(hr_zn_create(n, &out), HR_OK);
  return ZnPtr(out);
}

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(hr_version(), "1.0.0");
  EXPECT_STREQ(hr_status_name(HR_OK), "ok");
  EXPECT_STREQ(hr_status_name(HR_ERR_PARSE), "parse error");
}

TEST(CApi, Lambda) {
  EXPECT_FALSE(hr_lambda_is_bound(lambda(nullptr).get()));
  EXPECT_TRUE(hr_lambda_is_bound(lambda("7/3").get()));
  hr_lambda* out = nullptr;
  EXPECT_EQ(hr_lambda_parse("-1", &out), HR_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(out, nullptr);
  EXPECT_EQ(hr_lambda_parse("1/0", &out), HR_ERR_PARSE);
  EXPECT_EQ(hr_lambda_parse("abc", &out), HR_ERR_PARSE);
  EXPECT_NE(std::string(hr_last_error()), "");
  EXPECT_EQ(hr_lambda_parse(nullptr, &out), HR_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ClassicalFunctions) {
  int mu = 0;
  std::uint64_t phi = 0;
  EXPECT_EQ(hr_mobius(30, &mu), HR_OK);
  EXPECT_EQ(mu, -1);
  EXPECT_EQ(hr_phi(24, &phi), HR_OK);
  EXPECT_EQ(phi, 8u);
  EXPECT_EQ(hr_mobius(0, &mu), HR_ERR_INVALID_ARGUMENT);
  for (std::uint64_t m = 1; m <= 500; ++m) {
    ASSERT_EQ(hr_mobius(m, &mu), HR_OK);
    ASSERT_EQ(mu, homring::testing::brute_mobius(m));
    ASSERT_EQ(hr_phi(m, &phi), HR_OK);
    ASSERT_EQ(phi, homring::testing::brute_phi(m));
  }
}

TEST(CApi, Factor) {
  std::uint64_t primes[4];
  unsigned exps[4];
  std::size_t count = 0;
  EXPECT_EQ(hr_factor(360, primes, exps, 4, &count), HR_OK);
  ASSERT_EQ(count, 3u);
  EXPECT_EQ(primes[2], 5u);
  EXPECT_EQ(exps[0], 3u);
  EXPECT_EQ(hr_factor(360, primes, exps, 1, &count), HR_OK);
  EXPECT_EQ(count, 3u);
  EXPECT_EQ(primes[0], 2u);
}

TEST(CApi, ZnWeights) {
  const auto ring = zn(24);
  ASSERT_TRUE(ring);
  EXPECT_EQ(hr_zn_modulus(ring.get()), 24u);
  const auto sym = lambda(nullptr);
  hr_weight* raw = nullptr;
  ASSERT_EQ(hr_zn_weight(ring.get(), 4, sym.get(), &raw), HR_OK);
  WeightPtr w(raw);
  EXPECT_STREQ(hr_weight_text(w.get()), "1/2λ");
  EXPECT_STREQ(hr_weight_num(w.get()), "1");
  EXPECT_STREQ(hr_weight_den(w.get()), "2");
  EXPECT_FALSE(hr_weight_lambda_bound(w.get()));

  ASSERT_EQ(hr_zn_weight_via_character(ring.get(), 4, sym.get(), &raw), HR_OK);
  WeightPtr via_char(raw);
  ASSERT_EQ(hr_zn_weight_via_unit_average(ring.get(), 4, sym.get(), &raw), HR_OK);
  WeightPtr via_avg(raw);
  EXPECT_TRUE(hr_weight_equal(w.get(), via_char.get()));
  EXPECT_TRUE(hr_weight_equal(w.get(), via_avg.get()));

  const auto seven_thirds = lambda("7/3");
  ASSERT_EQ(hr_zn_weight(ring.get(), 8, seven_thirds.get(), &raw), HR_OK);
  WeightPtr bound(raw);
  EXPECT_STREQ(hr_weight_text(bound.get()), "7/2");
  EXPECT_TRUE(hr_weight_lambda_bound(bound.get()));
  EXPECT_FALSE(hr_weight_equal(w.get(), bound.get()));

  EXPECT_EQ(hr_zn_weight(ring.get(), 24, sym.get(), &raw), HR_ERR_OUT_OF_RANGE);
}

TEST(CApi, ZnStructure) {
  const auto ring = zn(24);
  std::uint64_t value = 0, unit = 0, m = 0;
  std::int64_t mu = 0;
  EXPECT_EQ(hr_zn_phi(ring.get(), 4, &value), HR_OK);
  EXPECT_EQ(value, 2u);
  EXPECT_EQ(hr_zn_stabilizer_order(ring.get(), 8, &value), HR_OK);
  EXPECT_EQ(value, 4u);
  EXPECT_EQ(hr_zn_canonical_form(ring.get(), 20, &unit, &m), HR_OK);
  EXPECT_EQ(unit, 5u);
  EXPECT_EQ(m, 6u);
  EXPECT_EQ(hr_zn_mobius_via_character(ring.get(), 4, &mu), HR_OK);
  EXPECT_EQ(mu, 1);
  hr_zn* bad = nullptr;
  EXPECT_EQ(hr_zn_create(1, &bad), HR_ERR_OUT_OF_RANGE);
  EXPECT_EQ(bad, nullptr);
}

TEST(CApi, NullArguments) {
  EXPECT_EQ(hr_zn_create(6, nullptr), HR_ERR_INVALID_ARGUMENT);
  std::uint64_t value = 0;
  EXPECT_EQ(hr_zn_phi(nullptr, 0, &value), HR_ERR_INVALID_ARGUMENT);
  hr_zn_free(nullptr);
  hr_weight_free(nullptr);
  hr_table_free(nullptr);
}

TEST(CApi, ZnTable) {
  const auto sym = lambda(nullptr);
  hr_table* raw = nullptr;
  ASSERT_EQ(hr_table_zn(6, sym.get(), &raw), HR_OK);
  std::unique_ptr<hr_table, TableDeleter> table(raw);
  ASSERT_EQ(hr_table_rows(table.get()), 6u);
  EXPECT_STREQ(hr_table_key(table.get(), 3), "3");
  EXPECT_STREQ(hr_table_phi(table.get(), 1), "2");
  EXPECT_EQ(hr_table_mobius(table.get(), 2), -1);
  EXPECT_STREQ(hr_weight_text(hr_table_weight(table.get(), 3)), "2λ");
  EXPECT_EQ(hr_table_complement(table.get(), 0), nullptr);
  EXPECT_STREQ(hr_table_spec(table.get()), "2^1x3^1");
  EXPECT_EQ(hr_table_zn(1, sym.get(), &raw), HR_ERR_OUT_OF_RANGE);
}

TEST(CApi, RingTable) {
  const auto one = lambda("1");
  hr_table* raw = nullptr;
  ASSERT_EQ(hr_table_ring("2^3x3^1", one.get(), &raw), HR_OK);
  std::unique_ptr<hr_table, TableDeleter> table(raw);
  ASSERT_EQ(hr_table_rows(table.get()), 8u);
  EXPECT_STREQ(hr_table_key(table.get(), 0), "(0,0)");
  EXPECT_STREQ(hr_table_complement(table.get(), 0), "(3,1)");
  EXPECT_STREQ(hr_weight_text(hr_table_weight(table.get(), 0)), "0");
  EXPECT_EQ(hr_table_ring("6^1", one.get(), &raw), HR_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::string(hr_last_error()).find("6"), std::string::npos);
  EXPECT_EQ(hr_table_ring("2^", one.get(), &raw), HR_ERR_PARSE);
}

TEST(CApi, Verify) {
  const auto sym = lambda(nullptr);
  hr_report* raw = nullptr;
  ASSERT_EQ(hr_verify(24, sym.get(), &raw), HR_OK);
  std::unique_ptr<hr_report, ReportDeleter> report(raw);
  EXPECT_EQ(hr_report_modulus(report.get()), 24u);
  EXPECT_TRUE(hr_report_passed(report.get()));
  EXPECT_FALSE(hr_report_numerical_failure(report.get()));
  EXPECT_EQ(hr_report_routes_agreeing(report.get()), 5u);
  EXPECT_EQ(hr_report_disagreement_count(report.get()), 0u);
  const std::string json = hr_report_json(report.get());
  EXPECT_NE(json.find("\"passed\":true"), std::string::npos);
  EXPECT_EQ(hr_verify(5001, sym.get(), &raw), HR_ERR_OUT_OF_RANGE);
}

TEST(CApi, Codes) {
  hr_code* raw = nullptr;
  ASSERT_EQ(hr_code_parse("4 1 2\n1 1\n", &raw), HR_OK);
  std::unique_ptr<hr_code, CodeDeleter> code(raw);
  EXPECT_EQ(hr_code_modulus(code.get()), 4u);
  const auto one = lambda("1");
  hr_distribution* draw = nullptr;
  ASSERT_EQ(hr_code_enumerator(code.get(), one.get(), &draw), HR_OK);
  std::unique_ptr<hr_distribution, DistDeleter> dist(draw);
  ASSERT_EQ(hr_distribution_size(dist.get()), 3u);
  EXPECT_EQ(hr_distribution_total(dist.get()), 4u);
  const char* weights[] = {"0", "2", "4"};
  const std::uint64_t counts[] = {1, 2, 1};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_STREQ(hr_weight_text(hr_distribution_weight(dist.get(), i)), weights[i]);
    EXPECT_EQ(hr_distribution_count(dist.get(), i), counts[i]);
  }
  EXPECT_EQ(hr_code_parse("4 1\n1 1\n", &raw), HR_ERR_PARSE);
  EXPECT_NE(std::string(hr_last_error()).find("line 1"), std::string::npos);
  EXPECT_EQ(hr_code_load("/nonexistent/matrix.txt", &raw), HR_ERR_IO);
  ASSERT_EQ(hr_code_parse("100 4 1\n1\n1\n1\n1\n", &raw), HR_OK);
  std::unique_ptr<hr_code, CodeDeleter> big(raw);
  EXPECT_EQ(hr_code_enumerator(big.get(), one.get(), &draw), HR_ERR_BOUND_EXCEEDED);
}

TEST(CApi, CodeLoadFromFile) {
  const std::string path = ::testing::TempDir() + "homring_capi_matrix.txt";
  std::ofstream(path) << "6 1 1\n3\n";
  hr_code* raw = nullptr;
  ASSERT_EQ(hr_code_load(path.c_str(), &raw), HR_OK);
  std::unique_ptr<hr_code, CodeDeleter> code(raw);
  EXPECT_EQ(hr_code_modulus(code.get()), 6u);
  std::remove(path.c_str());
}

}  // namespace

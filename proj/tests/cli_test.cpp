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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "reference_weights.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(HOMRING_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::size_t codepoints(const std::string& s) {
  std::size_t count = 0;
  for (unsigned char c : s) count += (c & 0xC0) != 0x80;
  return count;
}

std::string pad(const std::string& s, std::size_t width) { return std::string(width - codepoints(s), ' ') + s; }

std::string bind_one(std::string w) {
  if (w == "λ") return "1";
  if (auto pos = w.find("λ"); pos != std::string::npos) w.erase(pos);
  return w;
}

std::string expected_table(std::uint64_t n, bool bound) {
  std::vector<std::string> keys, weights;
  for (std::uint64_t x = 0; x < n; ++x) {
    keys.push_back(std::to_string(x));
    const auto& w = homring::testing::reference_weights().at(n)[x];
    weights.push_back(bound ? bind_one(w) : w);
  }
  std::size_t kw = 1, ww = 4;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    kw = std::max(kw, codepoints(keys[i]));
    ww = std::max(ww, codepoints(weights[i]));
  }
  std::ostringstream out;
  out << pad("x", kw) << " | " << pad("w(x)", ww) << "\n";
  out << std::string(kw, '-') << "-+-" << std::string(ww, '-') << "\n";
  for (std::size_t i = 0; i < keys.size(); ++i) out << pad(keys[i], kw) << " | " << pad(weights[i], ww) << "\n";
  return out.str();
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

TEST(Cli, ReferenceTablesByteForByte) {
  for (std::uint64_t n : {24u, 12u, 6u}) {
    const auto symbolic = run("table " + std::to_string(n));
    EXPECT_EQ(symbolic.status, 0);
    EXPECT_EQ(symbolic.out, expected_table(n, false)) << n;
    const auto bound = run("table " + std::to_string(n) + " --lambda 1");
    EXPECT_EQ(bound.status, 0);
    EXPECT_EQ(bound.out, expected_table(n, true)) << n;
  }
}

TEST(Cli, TableOfTwo) {
  const auto r = run("table 2 --format csv");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("1,1,-1,2λ,2,1,false"), std::string::npos);
}

TEST(Cli, JsonCarriesTheSameNumbersAsTable) {
  for (const char* lambda : {"", " --lambda 1", " --lambda 7/3"}) {
    const auto table = run(std::string("table 24") + lambda);
    const auto json = run(std::string("table 24 --format json") + lambda);
    ASSERT_EQ(json.status, 0);
    const auto doc = nlohmann::json::parse(json.out);
    EXPECT_EQ(doc["command"], "table");
    EXPECT_EQ(doc["params"]["n"], 24);
    std::istringstream lines(table.out);
    std::string line;
    std::getline(lines, line);
    std::getline(lines, line);
    for (const auto& row : doc["rows"]) {
      ASSERT_TRUE(std::getline(lines, line));
      const auto bar = line.find(" | ");
      const auto key = line.substr(0, bar);
      const auto weight = line.substr(bar + 3);
      EXPECT_EQ(row["key"], key.substr(key.find_first_not_of(' ')));
      const auto& w = row["weight"];
      const std::string num = w["num"].dump(), den = w["den"].dump();
      std::string text = num == "0" ? "0" : (den == "1" ? num : num + "/" + den);
      if (!w["lambda_bound"].get<bool>() && num != "0") text = text == "1" ? "λ" : text + "λ";
      EXPECT_EQ(text, weight.substr(weight.find_first_not_of(' ')));
      EXPECT_GT(w["den"].get<long>(), 0);
    }
  }
}

TEST(Cli, RingCommand) {
  const auto r = run("ring 2^3x3^1 --format json");
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["rows"].size(), 8u);
  EXPECT_EQ(doc["rows"][0]["key"], "(0,0)");
  EXPECT_EQ(doc["rows"][0]["complement"], "(3,1)");
  const auto chain = run("ring 4^2");
  EXPECT_EQ(chain.status, 0);
  EXPECT_NE(chain.out.find("4/3λ"), std::string::npos);
  const auto bad = run("ring 6^1");
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.out.find("6 is not a prime power"), std::string::npos);
}

TEST(Cli, MobiusAndPhi) {
  EXPECT_EQ(run("mobius 12").out, "μ(12) = 0\n");
  EXPECT_EQ(run("mobius 30 --format csv").out, "m,mobius\n30,-1\n");
  const auto phi = nlohmann::json::parse(run("phi 24 --format json").out);
  EXPECT_EQ(phi["rows"][0]["phi"], 8);
  EXPECT_EQ(run("mobius 0").status, 1);
}

TEST(Cli, Verify) {
  const auto range = run("verify 2..100");
  EXPECT_EQ(range.status, 0);
  EXPECT_EQ(range.out.find("fail"), std::string::npos);
  const auto one = run("verify 24");
  EXPECT_EQ(one.status, 0);
  EXPECT_NE(one.out.find("5/5"), std::string::npos);
  const auto json = nlohmann::json::parse(run("verify 24 --format json").out);
  EXPECT_EQ(json["report"][0]["routes_agreeing"], 5);
  EXPECT_EQ(run("verify 1").status, 1);
  EXPECT_EQ(run("verify 5..3").status, 1);
  EXPECT_EQ(run("verify 2..5001").status, 1);
}

TEST(Cli, Enumerator) {
  const auto lee = run("enumerator " + write_temp("cli_lee.txt", "4 1 2\n1 1\n") + " --lambda 1 --format json");
  ASSERT_EQ(lee.status, 0);
  const auto doc = nlohmann::json::parse(lee.out);
  ASSERT_EQ(doc["rows"].size(), 3u);
  EXPECT_EQ(doc["rows"][1]["key"], "2");
  EXPECT_EQ(doc["rows"][1]["count"], 2);
  EXPECT_EQ(doc["total"], 4);
  const auto z6 = run("enumerator " + write_temp("cli_z6.txt", "6 1 1\n3\n") + " --lambda 1 --format csv");
  EXPECT_EQ(z6.status, 0);
  EXPECT_NE(z6.out.find("2,1"), std::string::npos);
  const auto bad = run("enumerator " + write_temp("cli_bad.txt", "4 1\n1 1\n"));
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.out.find("line 1"), std::string::npos);
  EXPECT_EQ(run("enumerator /nonexistent/file.txt").status, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("table").status, 1);
  EXPECT_EQ(run("table 24 --lambda -1").status, 1);
  EXPECT_EQ(run("table 24 --lambda x").status, 1);
  EXPECT_EQ(run("table 24 --format xml").status, 1);
  EXPECT_EQ(run("table 1").status, 1);
  EXPECT_EQ(run("--help").status, 0);
}

}  // namespace

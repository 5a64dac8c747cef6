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

// homring: command-line front end over the C interface of libhomring.
//
//   homring table <n> [--lambda p/q] [--format table|csv|json]
//   homring ring <spec> [--lambda p/q] [--format ...]
//   homring mobius <m> [--format ...]
//   homring phi <m> [--format ...]
//   homring verify <a>..<b> [--lambda p/q] [--format ...]
//   homring enumerator <file> [--lambda p/q] [--format ...]
//
// Exit status: 0 success, 1 usage error, 2 verification failure,
// 3 numerical-guard failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "homring/homring.h"

namespace {

using nlohmann::json;

enum ExitCode { kSuccess = 0, kUsage = 1, kVerificationFailed = 2, kNumericalFailure = 3 };

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using LambdaPtr = std::unique_ptr<hr_lambda, Deleter<hr_lambda, hr_lambda_free>>;
using TablePtr = std::unique_ptr<hr_table, Deleter<hr_table, hr_table_free>>;
using ReportPtr = std::unique_ptr<hr_report, Deleter<hr_report, hr_report_free>>;
using CodePtr = std::unique_ptr<hr_code, Deleter<hr_code, hr_code_free>>;
using DistributionPtr = std::unique_ptr<hr_distribution, Deleter<hr_distribution, hr_distribution_free>>;

// Carries a library failure up to main() with the exit status it maps to.
struct CommandError {
  int exit_code;
  std::string message;
};

void check(hr_status status) {
  if (status == HR_OK) return;
  throw CommandError{status == HR_ERR_NUMERICAL ? kNumericalFailure : kUsage, hr_last_error()};
}

enum class Format { Table, Csv, Json };

struct Options {
  std::string lambda;
  Format format = Format::Table;
};

LambdaPtr make_lambda(const std::string& text) {
  hr_lambda* raw = nullptr;
  if (text.empty())
    check(hr_lambda_symbolic(&raw));
  else
    check(hr_lambda_parse(text.c_str(), &raw));
  return LambdaPtr(raw);
}

json lambda_param(const Options& opts) { return opts.lambda.empty() ? json("symbolic") : json(opts.lambda); }

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw CommandError{kUsage, std::string("invalid ") + what + " '" + text + "'"};
  return value;
}

// Decimal string to a JSON integer when it fits, otherwise kept as a string.
json integer(const char* text) {
  const std::string s = text;
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec == std::errc() && ptr == s.data() + s.size()) return value;
  return s;
}

json weight_json(const hr_weight* w) {
  return {{"num", integer(hr_weight_num(w))},
          {"den", integer(hr_weight_den(w))},
          {"lambda_bound", hr_weight_lambda_bound(w) != 0}};
}

std::size_t display_width(const std::string& s) {
  std::size_t width = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++width;
  return width;
}

// Right-aligned columns separated by " | ", with a dashed rule under the header.
void print_aligned(std::ostream& out, const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) widths[c] = display_width(header[c]);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], display_width(row[c]));
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out << " | ";
      out << std::string(widths[c] - display_width(cells[c]), ' ') << cells[c];
    }
    out << '\n';
  };
  line(header);
  for (std::size_t c = 0; c < widths.size(); ++c) {
    if (c) out << "-+-";
    out << std::string(widths[c], '-');
  }
  out << '\n';
  for (const auto& row : rows) line(row);
}

std::string quoted(const char* cell) { return std::string("\"") + cell + "\""; }

void print_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << cells[c];
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

int emit_weight_table(const hr_table* table, const std::string& command, const json& params, const Options& opts,
                      bool ring) {
  const std::size_t n = hr_table_rows(table);
  switch (opts.format) {
    case Format::Json: {
      json rows = json::array();
      for (std::size_t r = 0; r < n; ++r) {
        json row = {{"key", hr_table_key(table, r)},
                    {"phi", integer(hr_table_phi(table, r))},
                    {"mobius", hr_table_mobius(table, r)},
                    {"weight", weight_json(hr_table_weight(table, r))}};
        if (ring) row["complement"] = hr_table_complement(table, r);
        rows.push_back(row);
      }
      std::cout << json{{"command", command}, {"params", params}, {"rows", rows}}.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      std::vector<std::string> header = ring ? std::vector<std::string>{"i", "ibar"} : std::vector<std::string>{"x"};
      for (const char* h : {"phi", "mobius", "weight", "num", "den", "lambda_bound"}) header.push_back(h);
      std::vector<std::vector<std::string>> rows;
      for (std::size_t r = 0; r < n; ++r) {
        const hr_weight* w = hr_table_weight(table, r);
        std::vector<std::string> row{ring ? quoted(hr_table_key(table, r)) : hr_table_key(table, r)};
        if (ring) row.push_back(quoted(hr_table_complement(table, r)));
        row.insert(row.end(), {hr_table_phi(table, r), std::to_string(hr_table_mobius(table, r)),
                               hr_weight_text(w), hr_weight_num(w), hr_weight_den(w),
                               hr_weight_lambda_bound(w) ? "true" : "false"});
        rows.push_back(std::move(row));
      }
      print_csv(std::cout, header, rows);
      break;
    }
    case Format::Table: {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t r = 0; r < n; ++r) {
        const char* w = hr_weight_text(hr_table_weight(table, r));
        if (ring)
          rows.push_back({hr_table_key(table, r), hr_table_complement(table, r), hr_table_phi(table, r),
                          std::to_string(hr_table_mobius(table, r)), w});
        else
          rows.push_back({hr_table_key(table, r), w});
      }
      if (ring)
        print_aligned(std::cout, {"i", "ī", "φ(i)", "μ(i,0)", "w"}, rows);
      else
        print_aligned(std::cout, {"x", "w(x)"}, rows);
      break;
    }
  }
  return kSuccess;
}

int run_table(const std::string& n_text, const Options& opts) {
  const std::uint64_t n = parse_u64(n_text, "modulus");
  if (n < 2) throw CommandError{kUsage, "table needs n >= 2"};
  const auto lambda = make_lambda(opts.lambda);
  hr_table* raw = nullptr;
  check(hr_table_zn(n, lambda.get(), &raw));
  TablePtr table(raw);
  return emit_weight_table(table.get(), "table", {{"n", n}, {"lambda", lambda_param(opts)}}, opts, false);
}

int run_ring(const std::string& spec, const Options& opts) {
  const auto lambda = make_lambda(opts.lambda);
  hr_table* raw = nullptr;
  check(hr_table_ring(spec.c_str(), lambda.get(), &raw));
  TablePtr table(raw);
  return emit_weight_table(table.get(), "ring", {{"spec", hr_table_spec(table.get())}, {"lambda", lambda_param(opts)}},
                           opts, true);
}

int run_arithmetic(const std::string& command, const std::string& m_text, const Options& opts) {
  const std::uint64_t m = parse_u64(m_text, "argument");
  if (m == 0) throw CommandError{kUsage, command + " needs m >= 1"};
  int mu = 0;
  std::uint64_t phi = 0;
  check(hr_mobius(m, &mu));
  check(hr_phi(m, &phi));
  const bool is_mobius = command == "mobius";
  switch (opts.format) {
    case Format::Json:
      std::cout << json{{"command", command},
                        {"params", {{"m", m}}},
                        {"rows", json::array({{{"key", std::to_string(m)}, {"phi", phi}, {"mobius", mu}}})}}
                       .dump(2)
                << '\n';
      break;
    case Format::Csv:
      print_csv(std::cout, {"m", command}, {{std::to_string(m), is_mobius ? std::to_string(mu) : std::to_string(phi)}});
      break;
    case Format::Table:
      std::cout << (is_mobius ? "μ(" : "φ(") << m << ") = " << (is_mobius ? std::to_string(mu) : std::to_string(phi))
                << '\n';
      break;
  }
  return kSuccess;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto n = parse_u64(text, "modulus");
    return {n, n};
  }
  return {parse_u64(text.substr(0, dots), "range start"), parse_u64(text.substr(dots + 2), "range end")};
}

int run_verify(const std::string& range, const Options& opts) {
  const auto [from, to] = parse_range(range);
  if (from < 2) throw CommandError{kUsage, "verify needs n >= 2"};
  if (to < from) throw CommandError{kUsage, "empty range '" + range + "'"};
  if (to > 5000) throw CommandError{kUsage, "verify range must lie within [2, 5000]"};
  const auto lambda = make_lambda(opts.lambda);

  json reports = json::array();
  json rows = json::array();
  std::vector<std::vector<std::string>> table_rows;
  bool any_failed = false;
  bool any_numerical = false;
  for (std::uint64_t n = from; n <= to; ++n) {
    hr_report* raw = nullptr;
    check(hr_verify(n, lambda.get(), &raw));
    ReportPtr report(raw);
    const json doc = json::parse(hr_report_json(report.get()));
    const bool passed = hr_report_passed(report.get()) != 0;
    const bool numerical = hr_report_numerical_failure(report.get()) != 0;
    any_failed |= !passed;
    any_numerical |= numerical;
    const std::string routes = std::to_string(hr_report_routes_agreeing(report.get())) + "/" +
                               std::to_string(doc["routes"].size());
    const std::string h1 = doc["h1"]["ok"].get<bool>() ? "ok" : "FAIL";
    const std::string h2 = doc["h2"]["ok"].get<bool>() ? "ok" : "FAIL";
    rows.push_back({{"key", std::to_string(n)}, {"passed", passed}});
    table_rows.push_back({std::to_string(n), passed ? "pass" : "FAIL", routes, h1, h2,
                          std::to_string(doc["h2"]["ideals"].size()),
                          std::to_string(hr_report_disagreement_count(report.get())),
                          numerical ? "guard" : "-"});
    reports.push_back(doc);
  }

  switch (opts.format) {
    case Format::Json:
      std::cout << json{{"command", "verify"},
                        {"params", {{"from", from}, {"to", to}, {"lambda", lambda_param(opts)}}},
                        {"rows", rows},
                        {"report", reports}}
                       .dump(2)
                << '\n';
      break;
    case Format::Csv:
      print_csv(std::cout, {"n", "status", "routes", "h1", "h2", "ideals", "disagreements", "numerical"}, table_rows);
      break;
    case Format::Table:
      print_aligned(std::cout, {"n", "status", "routes", "H1", "H2", "ideals", "disagreements", "numerical"},
                    table_rows);
      for (const auto& doc : reports) {
        if (doc["passed"].get<bool>()) continue;
        std::cout << "\nn=" << doc["n"] << " failure detail:\n" << doc.dump(2) << '\n';
      }
      break;
  }
  if (any_numerical) return kNumericalFailure;
  return any_failed ? kVerificationFailed : kSuccess;
}

int run_enumerator(const std::string& path, const Options& opts) {
  const auto lambda = make_lambda(opts.lambda);
  hr_code* code_raw = nullptr;
  check(hr_code_load(path.c_str(), &code_raw));
  CodePtr code(code_raw);
  hr_distribution* dist_raw = nullptr;
  check(hr_code_enumerator(code.get(), lambda.get(), &dist_raw));
  DistributionPtr dist(dist_raw);

  const std::size_t size = hr_distribution_size(dist.get());
  switch (opts.format) {
    case Format::Json: {
      json rows = json::array();
      for (std::size_t i = 0; i < size; ++i) {
        const hr_weight* w = hr_distribution_weight(dist.get(), i);
        rows.push_back({{"key", hr_weight_text(w)}, {"count", hr_distribution_count(dist.get(), i)},
                        {"weight", weight_json(w)}});
      }
      std::cout << json{{"command", "enumerator"},
                        {"params", {{"file", path}, {"n", hr_code_modulus(code.get())}, {"lambda", lambda_param(opts)}}},
                        {"rows", rows},
                        {"total", hr_distribution_total(dist.get())}}
                       .dump(2)
                << '\n';
      break;
    }
    case Format::Csv:
    case Format::Table: {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t i = 0; i < size; ++i)
        rows.push_back({hr_weight_text(hr_distribution_weight(dist.get(), i)),
                        std::to_string(hr_distribution_count(dist.get(), i))});
      if (opts.format == Format::Csv)
        print_csv(std::cout, {"weight", "count"}, rows);
      else
        print_aligned(std::cout, {"weight", "count"}, rows);
      break;
    }
  }
  return kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homogeneous weights, Möbius and Euler phi-functions on finite rings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hr_version()));

  Options opts;
  const std::map<std::string, Format> formats{{"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};
  auto add_common = [&](CLI::App* sub, bool with_lambda) {
    if (with_lambda)
      sub->add_option("--lambda", opts.lambda, "average weight as an exact rational p/q (default: symbolic)");
    sub->add_option("--format", opts.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  std::string argument;
  auto* table = app.add_subcommand("table", "weights of every element of Z_n");
  table->add_option("n", argument, "modulus, 2 <= n <= 1000000")->required();
  add_common(table, true);

  auto* ring = app.add_subcommand("ring", "weights of every class of a principal ideal ring");
  ring->add_option("spec", argument, "chain ring factors, e.g. 2^3x3^1")->required();
  add_common(ring, true);

  auto* mobius = app.add_subcommand("mobius", "classical Möbius function");
  mobius->add_option("m", argument, "positive integer")->required();
  add_common(mobius, false);

  auto* phi = app.add_subcommand("phi", "classical Euler phi-function");
  phi->add_option("m", argument, "positive integer")->required();
  add_common(phi, false);

  auto* verify = app.add_subcommand("verify", "cross-check all weight routes and the axioms on Z_n");
  verify->add_option("range", argument, "n or a..b within [2, 5000]")->required();
  add_common(verify, true);

  auto* enumerator = app.add_subcommand("enumerator", "homogeneous weight distribution of a linear code");
  enumerator->add_option("file", argument, "generator matrix file: 'n k l' then k rows")->required();
  add_common(enumerator, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*table) return run_table(argument, opts);
    if (*ring) return run_ring(argument, opts);
    if (*mobius) return run_arithmetic("mobius", argument, opts);
    if (*phi) return run_arithmetic("phi", argument, opts);
    if (*verify) return run_verify(argument, opts);
    if (*enumerator) return run_enumerator(argument, opts);
  } catch (const CommandError& e) {
    std::cerr << "homring: " << e.message << '\n';
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "homring: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

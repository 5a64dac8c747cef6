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

#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "homring/codes.hpp"
#include "homring/error.hpp"
#include "homring/json.hpp"
#include "homring/numtheory.hpp"
#include "homring/oracle.hpp"
#include "homring/ringspec.hpp"
#include "homring/zn.hpp"

using namespace homring;

struct hr_lambda {
  Lambda value;
};

struct hr_weight {
  explicit hr_weight(const LambdaRational& w)
      : value(w), num(w.numerator_string()), den(w.denominator_string()), text(w.to_string()) {}
  LambdaRational value;
  std::string num;
  std::string den;
  std::string text;
};

struct hr_zn {
  zn::ZnRing ring;
};

struct hr_table {
  struct Row {
    std::string key;
    std::string complement;
    std::string phi;
    int mobius;
    hr_weight weight;
  };
  bool has_complement = false;
  std::string spec;
  std::vector<Row> rows;
};

struct hr_report {
  oracle::VerificationReport report;
  std::string json;
  std::size_t agreeing = 0;
};

struct hr_code {
  codes::GeneratorMatrix matrix;
};

struct hr_distribution {
  std::vector<std::pair<hr_weight, std::uint64_t>> entries;
  std::uint64_t total = 0;
};

namespace {

thread_local std::string last_error;

constexpr std::uint64_t kMaxTableModulus = 1'000'000;

hr_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return HR_ERR_INVALID_ARGUMENT;
    case ErrorCode::OutOfRange: return HR_ERR_OUT_OF_RANGE;
    case ErrorCode::Parse: return HR_ERR_PARSE;
    case ErrorCode::NotAPoset: return HR_ERR_NOT_A_POSET;
    case ErrorCode::Incomparable: return HR_ERR_INCOMPARABLE;
    case ErrorCode::BoundExceeded: return HR_ERR_BOUND_EXCEEDED;
    case ErrorCode::Numerical: return HR_ERR_NUMERICAL;
  }
  return HR_ERR_INTERNAL;
}

hr_status fail(hr_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Fn>
hr_status guarded(Fn&& fn) {
  try {
    fn();
    return HR_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HR_ERR_INTERNAL, e.what());
  }
}

#define HR_REQUIRE(cond, what)                                     \
  do {                                                             \
    if (!(cond)) return fail(HR_ERR_INVALID_ARGUMENT, (what));     \
  } while (0)

Lambda lambda_or_symbolic(const hr_lambda* lambda) { return lambda ? lambda->value : Lambda::symbolic(); }

}  // namespace

extern "C" {

const char* hr_version(void) { return "1.0.0"; }

const char* hr_status_name(hr_status status) {
  switch (status) {
    case HR_OK: return "ok";
    case HR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HR_ERR_OUT_OF_RANGE: return "out of range";
    case HR_ERR_PARSE: return "parse error";
    case HR_ERR_NOT_A_POSET: return "not a poset";
    case HR_ERR_INCOMPARABLE: return "incomparable elements";
    case HR_ERR_BOUND_EXCEEDED: return "bound exceeded";
    case HR_ERR_NUMERICAL: return "numerical guard failure";
    case HR_ERR_IO: return "i/o error";
    case HR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hr_last_error(void) { return last_error.c_str(); }

hr_status hr_lambda_symbolic(hr_lambda** out) {
  HR_REQUIRE(out, "null output pointer");
  return guarded([&] { *out = new hr_lambda{Lambda::symbolic()}; });
}

hr_status hr_lambda_parse(const char* text, hr_lambda** out) {
  HR_REQUIRE(text && out, "null argument");
  return guarded([&] { *out = new hr_lambda{Lambda::parse(text)}; });
}

int hr_lambda_is_bound(const hr_lambda* lambda) { return lambda && lambda->value.is_bound(); }

void hr_lambda_free(hr_lambda* lambda) { delete lambda; }

const char* hr_weight_num(const hr_weight* w) { return w ? w->num.c_str() : nullptr; }
const char* hr_weight_den(const hr_weight* w) { return w ? w->den.c_str() : nullptr; }
int hr_weight_lambda_bound(const hr_weight* w) { return w && w->value.lambda_bound(); }
const char* hr_weight_text(const hr_weight* w) { return w ? w->text.c_str() : nullptr; }
int hr_weight_equal(const hr_weight* a, const hr_weight* b) { return a && b && a->value == b->value; }
void hr_weight_free(hr_weight* w) { delete w; }

hr_status hr_mobius(uint64_t m, int* out) {
  HR_REQUIRE(out, "null output pointer");
  return guarded([&] { *out = numtheory::classical_mobius(numtheory::factor(m)); });
}

hr_status hr_phi(uint64_t m, uint64_t* out) {
  HR_REQUIRE(out, "null output pointer");
  return guarded([&] { *out = numtheory::classical_phi(numtheory::factor(m)).get_ui(); });
}

hr_status hr_factor(uint64_t n, uint64_t* primes, unsigned* exponents, size_t capacity, size_t* count) {
  HR_REQUIRE(count, "null count pointer");
  HR_REQUIRE(capacity == 0 || (primes && exponents), "null output arrays");
  return guarded([&] {
    const auto f = numtheory::factor(n);
    *count = f.size();
    for (std::size_t k = 0; k < f.size() && k < capacity; ++k) {
      primes[k] = f.factors()[k].prime;
      exponents[k] = f.factors()[k].exponent;
    }
  });
}

hr_status hr_zn_create(uint64_t n, hr_zn** out) {
  HR_REQUIRE(out, "null output pointer");
  return guarded([&] { *out = new hr_zn{zn::ZnRing(n)}; });
}

uint64_t hr_zn_modulus(const hr_zn* ring) { return ring ? ring->ring.n() : 0; }

hr_status hr_zn_weight(const hr_zn* ring, uint64_t x, const hr_lambda* lambda, hr_weight** out) {
  HR_REQUIRE(ring && out, "null argument");
  return guarded([&] { *out = new hr_weight(ring->ring.weight(x, lambda_or_symbolic(lambda))); });
}

hr_status hr_zn_weight_via_character(const hr_zn* ring, uint64_t x, const hr_lambda* lambda, hr_weight** out) {
  HR_REQUIRE(ring && out, "null argument");
  return guarded(
      [&] { *out = new hr_weight(ring->ring.weight_via_character(x, lambda_or_symbolic(lambda))); });
}

hr_status hr_zn_weight_via_unit_average(const hr_zn* ring, uint64_t x, const hr_lambda* lambda,
                                        hr_weight** out) {
  HR_REQUIRE(ring && out, "null argument");
  return guarded(
      [&] { *out = new hr_weight(ring->ring.weight_via_unit_average(x, lambda_or_symbolic(lambda))); });
}

hr_status hr_zn_phi(const hr_zn* ring, uint64_t x, uint64_t* out) {
  HR_REQUIRE(ring && out, "null argument");
  return guarded([&] { *out = ring->ring.ring_phi_element(x); });
}

hr_status hr_zn_mobius_via_character(const hr_zn* ring, uint64_t x, int64_t* out) {
  HR_REQUIRE(ring && out, "null argument");
  return guarded([&] { *out = ring->ring.mobius_via_character(x); });
}

hr_status hr_zn_canonical_form(const hr_zn* ring, uint64_t x, uint64_t* unit, uint64_t* m) {
  HR_REQUIRE(ring && unit && m, "null argument");
  return guarded([&] {
    const auto form = ring->ring.canonical_form(x);
    *unit = form.unit;
    *m = form.m;
  });
}

hr_status hr_zn_stabilizer_order(const hr_zn* ring, uint64_t x, uint64_t* out) {
  HR_REQUIRE(ring && out, "null argument");
  return guarded([&] { *out = ring->ring.stabilizer_order(x); });
}

void hr_zn_free(hr_zn* ring) { delete ring; }

hr_status hr_table_zn(uint64_t n, const hr_lambda* lambda, hr_table** out) {
  HR_REQUIRE(out, "null output pointer");
  if (n < 2 || n > kMaxTableModulus)
    return fail(HR_ERR_OUT_OF_RANGE, "table modulus must lie in [2, 1000000], got " + std::to_string(n));
  return guarded([&] {
    const zn::ZnRing ring(n);
    const Lambda l = lambda_or_symbolic(lambda);
    auto table = std::make_unique<hr_table>();
    table->spec = ring.spec().to_string();
    table->rows.reserve(n);
    for (std::uint64_t x = 0; x < n; ++x) {
      const auto m = ring.factor_divisor(n / ring.gcd_with(x));
      table->rows.push_back({std::to_string(x), "", std::to_string(ring.ring_phi_element(x)),
                             numtheory::classical_mobius(m), hr_weight(ring.weight(x, l))});
    }
    *out = table.release();
  });
}

hr_status hr_table_ring(const char* spec, const hr_lambda* lambda, hr_table** out) {
  HR_REQUIRE(spec && out, "null argument");
  return guarded([&] {
    const auto parsed = ringspec::PirSpec::parse(spec);
    auto table = std::make_unique<hr_table>();
    table->has_complement = true;
    table->spec = parsed.to_string();
    for (const auto& row : ringspec::weight_table(parsed, lambda_or_symbolic(lambda)))
      table->rows.push_back(
          {row.tuple.to_string(), row.ibar.to_string(), row.phi.get_str(), row.mobius, hr_weight(row.weight)});
    *out = table.release();
  });
}

size_t hr_table_rows(const hr_table* table) { return table ? table->rows.size() : 0; }

const char* hr_table_key(const hr_table* table, size_t row) {
  return table && row < table->rows.size() ? table->rows[row].key.c_str() : nullptr;
}

const char* hr_table_complement(const hr_table* table, size_t row) {
  if (!table || !table->has_complement || row >= table->rows.size()) return nullptr;
  return table->rows[row].complement.c_str();
}

const char* hr_table_phi(const hr_table* table, size_t row) {
  return table && row < table->rows.size() ? table->rows[row].phi.c_str() : nullptr;
}

int hr_table_mobius(const hr_table* table, size_t row) {
  return table && row < table->rows.size() ? table->rows[row].mobius : 0;
}

const hr_weight* hr_table_weight(const hr_table* table, size_t row) {
  return table && row < table->rows.size() ? &table->rows[row].weight : nullptr;
}

const char* hr_table_spec(const hr_table* table) { return table ? table->spec.c_str() : nullptr; }

void hr_table_free(hr_table* table) { delete table; }

hr_status hr_verify(uint64_t n, const hr_lambda* lambda, hr_report** out) {
  HR_REQUIRE(out, "null output pointer");
  return guarded([&] {
    auto report = std::make_unique<hr_report>();
    report->report = oracle::cross_check_routes(n, lambda_or_symbolic(lambda));
    const auto doc = to_json(report->report);
    report->json = doc.dump();
    report->agreeing = doc["routes_agreeing"].get<std::size_t>();
    *out = report.release();
  });
}

uint64_t hr_report_modulus(const hr_report* report) { return report ? report->report.n : 0; }
int hr_report_passed(const hr_report* report) { return report && report->report.passed(); }
int hr_report_numerical_failure(const hr_report* report) {
  return report && report->report.numerical_failure.has_value();
}
size_t hr_report_routes_agreeing(const hr_report* report) { return report ? report->agreeing : 0; }
size_t hr_report_disagreement_count(const hr_report* report) {
  return report ? report->report.disagreements.size() : 0;
}
const char* hr_report_json(const hr_report* report) { return report ? report->json.c_str() : nullptr; }
void hr_report_free(hr_report* report) { delete report; }

hr_status hr_code_parse(const char* text, hr_code** out) {
  HR_REQUIRE(text && out, "null argument");
  return guarded([&] { *out = new hr_code{codes::GeneratorMatrix::parse(text)}; });
}

hr_status hr_code_load(const char* path, hr_code** out) {
  HR_REQUIRE(path && out, "null argument");
  std::ifstream in(path);
  if (!in) return fail(HR_ERR_IO, std::string("cannot open ") + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return guarded([&] { *out = new hr_code{codes::GeneratorMatrix::parse(buffer.str())}; });
}

uint64_t hr_code_modulus(const hr_code* code) { return code ? code->matrix.modulus() : 0; }

hr_status hr_code_enumerator(const hr_code* code, const hr_lambda* lambda, hr_distribution** out) {
  HR_REQUIRE(code && out, "null argument");
  return guarded([&] {
    const auto dist = codes::weight_enumerator(code->matrix, lambda_or_symbolic(lambda));
    auto result = std::make_unique<hr_distribution>();
    for (const auto& [w, count] : dist.counts) result->entries.emplace_back(hr_weight(w), count);
    result->total = dist.total;
    *out = result.release();
  });
}

void hr_code_free(hr_code* code) { delete code; }

size_t hr_distribution_size(const hr_distribution* dist) { return dist ? dist->entries.size() : 0; }

const hr_weight* hr_distribution_weight(const hr_distribution* dist, size_t index) {
  return dist && index < dist->entries.size() ? &dist->entries[index].first : nullptr;
}

uint64_t hr_distribution_count(const hr_distribution* dist, size_t index) {
  return dist && index < dist->entries.size() ? dist->entries[index].second : 0;
}

uint64_t hr_distribution_total(const hr_distribution* dist) { return dist ? dist->total : 0; }

void hr_distribution_free(hr_distribution* dist) { delete dist; }

}  // extern "C"

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

#ifndef HOMRING_HOMRING_H
#define HOMRING_HOMRING_H

/*
 * C interface to the homring library: homogeneous weights, Möbius and Euler
 * phi-functions on Z_n and on finite principal ideal rings.
 *
 * Conventions:
 *   - Every fallible call returns an hr_status; HR_OK is 0. On failure the
 *     message is available from hr_last_error() on the same thread until the
 *     next failing call.
 *   - Objects are opaque handles created by hr_*_create/parse/compute calls
 *     and released by the matching hr_*_free, which accepts NULL.
 *   - Strings returned as const char* are owned by the handle they came
 *     from and stay valid until that handle is freed.
 *   - Weights are exact rationals. With a symbolic lambda they are
 *     coefficients of lambda; with a bound lambda they are plain numbers.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(HOMRING_BUILDING)
#define HOMRING_API __declspec(dllexport)
#else
#define HOMRING_API __declspec(dllimport)
#endif
#else
#define HOMRING_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hr_status {
  HR_OK = 0,
  HR_ERR_INVALID_ARGUMENT = 1,
  HR_ERR_OUT_OF_RANGE = 2,
  HR_ERR_PARSE = 3,
  HR_ERR_NOT_A_POSET = 4,
  HR_ERR_INCOMPARABLE = 5,
  HR_ERR_BOUND_EXCEEDED = 6,
  HR_ERR_NUMERICAL = 7,
  HR_ERR_IO = 8,
  HR_ERR_INTERNAL = 9
} hr_status;

typedef struct hr_lambda hr_lambda;
typedef struct hr_weight hr_weight;
typedef struct hr_zn hr_zn;
typedef struct hr_table hr_table;
typedef struct hr_report hr_report;
typedef struct hr_code hr_code;
typedef struct hr_distribution hr_distribution;

HOMRING_API const char* hr_version(void);
HOMRING_API const char* hr_status_name(hr_status status);
HOMRING_API const char* hr_last_error(void);

/* ---- average weight ---------------------------------------------------- */

HOMRING_API hr_status hr_lambda_symbolic(hr_lambda** out);
/* "p" or "p/q", non-negative. */
HOMRING_API hr_status hr_lambda_parse(const char* text, hr_lambda** out);
HOMRING_API int hr_lambda_is_bound(const hr_lambda* lambda);
HOMRING_API void hr_lambda_free(hr_lambda* lambda);

/* ---- weight values ----------------------------------------------------- */

HOMRING_API const char* hr_weight_num(const hr_weight* w);
HOMRING_API const char* hr_weight_den(const hr_weight* w);
HOMRING_API int hr_weight_lambda_bound(const hr_weight* w);
/* "0", "1/2λ", "λ", "3/2λ" (symbolic) or "0", "1/2", "1" (bound). */
HOMRING_API const char* hr_weight_text(const hr_weight* w);
HOMRING_API int hr_weight_equal(const hr_weight* a, const hr_weight* b);
HOMRING_API void hr_weight_free(hr_weight* w);

/* ---- classical number theory ------------------------------------------- */

HOMRING_API hr_status hr_mobius(uint64_t m, int* out);
HOMRING_API hr_status hr_phi(uint64_t m, uint64_t* out);
/* Writes up to `capacity` prime powers; `count` receives the true count. */
HOMRING_API hr_status hr_factor(uint64_t n, uint64_t* primes, unsigned* exponents, size_t capacity,
                                size_t* count);

/* ---- the ring Z_n ------------------------------------------------------ */

HOMRING_API hr_status hr_zn_create(uint64_t n, hr_zn** out);
HOMRING_API uint64_t hr_zn_modulus(const hr_zn* ring);
HOMRING_API hr_status hr_zn_weight(const hr_zn* ring, uint64_t x, const hr_lambda* lambda, hr_weight** out);
HOMRING_API hr_status hr_zn_weight_via_character(const hr_zn* ring, uint64_t x, const hr_lambda* lambda,
                                                 hr_weight** out);
HOMRING_API hr_status hr_zn_weight_via_unit_average(const hr_zn* ring, uint64_t x, const hr_lambda* lambda,
                                                    hr_weight** out);
/* Size of the association class of x. */
HOMRING_API hr_status hr_zn_phi(const hr_zn* ring, uint64_t x, uint64_t* out);
/* mu(xZ_n, 0) from the class character sum. */
HOMRING_API hr_status hr_zn_mobius_via_character(const hr_zn* ring, uint64_t x, int64_t* out);
HOMRING_API hr_status hr_zn_canonical_form(const hr_zn* ring, uint64_t x, uint64_t* unit, uint64_t* m);
HOMRING_API hr_status hr_zn_stabilizer_order(const hr_zn* ring, uint64_t x, uint64_t* out);
HOMRING_API void hr_zn_free(hr_zn* ring);

/* ---- weight tables ----------------------------------------------------- */

/* One row per element of Z_n, 2 <= n <= 1000000. Key is the element. */
HOMRING_API hr_status hr_table_zn(uint64_t n, const hr_lambda* lambda, hr_table** out);
/* One row per exponent tuple of a spec such as "2^3x3^1". Key is the tuple
 * i; the complement ī is available from hr_table_complement. */
HOMRING_API hr_status hr_table_ring(const char* spec, const hr_lambda* lambda, hr_table** out);
HOMRING_API size_t hr_table_rows(const hr_table* table);
HOMRING_API const char* hr_table_key(const hr_table* table, size_t row);
/* NULL for Z_n tables. */
HOMRING_API const char* hr_table_complement(const hr_table* table, size_t row);
HOMRING_API const char* hr_table_phi(const hr_table* table, size_t row);
HOMRING_API int hr_table_mobius(const hr_table* table, size_t row);
/* Borrowed; owned by the table. */
HOMRING_API const hr_weight* hr_table_weight(const hr_table* table, size_t row);
/* Canonical spec string ("2^3x3^1"); for Z_n tables, the chain factors. */
HOMRING_API const char* hr_table_spec(const hr_table* table);
HOMRING_API void hr_table_free(hr_table* table);

/* ---- verification ------------------------------------------------------ */

/* Cross-checks every weight route and the axioms on Z_n, 2 <= n <= 5000.
 * A failed check is not an error: inspect hr_report_passed. */
HOMRING_API hr_status hr_verify(uint64_t n, const hr_lambda* lambda, hr_report** out);
HOMRING_API uint64_t hr_report_modulus(const hr_report* report);
HOMRING_API int hr_report_passed(const hr_report* report);
HOMRING_API int hr_report_numerical_failure(const hr_report* report);
HOMRING_API size_t hr_report_routes_agreeing(const hr_report* report);
HOMRING_API size_t hr_report_disagreement_count(const hr_report* report);
/* Structured JSON document. */
HOMRING_API const char* hr_report_json(const hr_report* report);
HOMRING_API void hr_report_free(hr_report* report);

/* ---- codes over Z_n ---------------------------------------------------- */

/* Header line "n k l" followed by k rows of l integers. */
HOMRING_API hr_status hr_code_parse(const char* text, hr_code** out);
HOMRING_API hr_status hr_code_load(const char* path, hr_code** out);
HOMRING_API uint64_t hr_code_modulus(const hr_code* code);
HOMRING_API hr_status hr_code_enumerator(const hr_code* code, const hr_lambda* lambda, hr_distribution** out);
HOMRING_API void hr_code_free(hr_code* code);

/* Entries are sorted by increasing weight. */
HOMRING_API size_t hr_distribution_size(const hr_distribution* dist);
HOMRING_API const hr_weight* hr_distribution_weight(const hr_distribution* dist, size_t index);
HOMRING_API uint64_t hr_distribution_count(const hr_distribution* dist, size_t index);
HOMRING_API uint64_t hr_distribution_total(const hr_distribution* dist);
HOMRING_API void hr_distribution_free(hr_distribution* dist);

#ifdef __cplusplus
}
#endif

#endif /* HOMRING_HOMRING_H */

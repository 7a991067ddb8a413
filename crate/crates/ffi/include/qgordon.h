#ifndef QGORDON_H
#define QGORDON_H

#pragma once

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum QgStatus {
  QG_STATUS_OK = 0,
  QG_STATUS_NULL_POINTER = 1,
  QG_STATUS_INVALID_UTF8 = 2,
  QG_STATUS_PARSE = 3,
  QG_STATUS_DOMAIN = 4,
  QG_STATUS_PRECONDITION = 5,
  QG_STATUS_CONSISTENCY = 6,
  QG_STATUS_OUT_OF_RANGE = 7,
  QG_STATUS_PANIC = 8,
} QgStatus;

/**
 * Which finite Rogers-Ramanujan family.
 */
typedef enum QgRrKind {
  QG_RR_KIND_E = 0,
  QG_RR_KIND_D = 1,
} QgRrKind;

/**
 * Exact Laurent polynomial in `q` with integer coefficients.
 */
typedef struct QgPoly QgPoly;

/**
 * Reports of one suite run, in run order.
 */
typedef struct QgSuite QgSuite;

/**
 * Grid options for `qg_suite_run`. Negative integers and a zero `jobs`
 * select the defaults.
 */
typedef struct QgSuiteOptions {
  int64_t l_max;
  int64_t m_max;
  int64_t nu;
  int64_t cutoff;
  bool nu3;
  uint32_t jobs;
} QgSuiteOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *qg_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void qg_string_free(char *s);

/**
 * Parses the canonical text form, e.g. `"1 + q - 2*q^-3"`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum QgStatus qg_poly_parse(const char *text, struct QgPoly **out);

/**
 * # Safety
 * `p` must be null or a handle from this library and not yet freed.
 */
void qg_poly_free(struct QgPoly *p);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum QgStatus qg_poly_to_string(const struct QgPoly *p, char **out);

/**
 * Coefficients as JSON `[[exponent, "decimal"], ...]` in increasing exponent order.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum QgStatus qg_poly_to_json(const struct QgPoly *p, char **out);

/**
 * Coefficient of `q^exponent` as a decimal string.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum QgStatus qg_poly_coeff(const struct QgPoly *p, int64_t exponent, char **out);

/**
 * Value at `q = 1` as a decimal string.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum QgStatus qg_poly_eval_at_one(const struct QgPoly *p, char **out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum QgStatus qg_poly_equal(const struct QgPoly *a, const struct QgPoly *b, bool *out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum QgStatus qg_poly_add(const struct QgPoly *a, const struct QgPoly *b, struct QgPoly **out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum QgStatus qg_poly_sub(const struct QgPoly *a, const struct QgPoly *b, struct QgPoly **out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum QgStatus qg_poly_mul(const struct QgPoly *a, const struct QgPoly *b, struct QgPoly **out);

/**
 * Substitutes `q -> 1/q`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum QgStatus qg_poly_invert(const struct QgPoly *p, struct QgPoly **out);

/**
 * `[n+m choose n]`.
 *
 * # Safety
 * `out` must be writable.
 */
enum QgStatus qg_q_binomial(int64_t n, int64_t m, struct QgPoly **out);

/**
 * `(q^a; q)_t`.
 *
 * # Safety
 * `out` must be writable.
 */
enum QgStatus qg_q_pochhammer(int64_t a, int64_t t, struct QgPoly **out);

/**
 * `e_L` or `d_L` from the positive sum (any integer `L`).
 *
 * # Safety
 * `out` must be writable.
 */
enum QgStatus qg_rr_fermionic(enum QgRrKind kind, int64_t l, struct QgPoly **out);

/**
 * `e_L` or `d_L` from the alternating sum (`L >= 0`).
 *
 * # Safety
 * `out` must be writable.
 */
enum QgStatus qg_rr_bosonic(enum QgRrKind kind, int64_t l, struct QgPoly **out);

/**
 * Shifted Rogers-Ramanujan polynomial `f_{s,b}(L, M)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum QgStatus qg_f_shifted(int64_t s, int64_t b, int64_t l, int64_t m, struct QgPoly **out);

/**
 * Unshifted Andrews-Gordon multisum.
 *
 * # Safety
 * `out` must be writable.
 */
enum QgStatus qg_f_tilde(int64_t nu, int64_t s, int64_t b, int64_t l, struct QgPoly **out);

/**
 * Shifted Andrews-Gordon multisum.
 *
 * # Safety
 * `out` must be writable.
 */
enum QgStatus qg_big_f(int64_t nu, int64_t s, int64_t b, int64_t l, int64_t m, struct QgPoly **out);

/**
 * Alternating-sum Andrews-Gordon polynomial with 1-based indices.
 *
 * # Safety
 * `out` must be writable.
 */
enum QgStatus qg_b_bosonic(int64_t nu, int64_t s, int64_t b, int64_t l, struct QgPoly **out);

/**
 * Weight generating function of admissible paths on `[i, f]` from `s` to `b`.
 *
 * # Safety
 * `out` must be writable.
 */
enum QgStatus qg_path_gf(int64_t i, int64_t f, uint8_t s, uint8_t b, struct QgPoly **out);

/**
 * Runs one identity family (`"rr"`, `"paths"`, `"ag"`, `"gis"`, `"santos"`,
 * `"series"` or `"all"`). `options` may be null for the defaults.
 *
 * # Safety
 * `family` must be a NUL-terminated string; `options` null or readable;
 * `out` writable.
 */
enum QgStatus qg_suite_run(const char *family,
                           const struct QgSuiteOptions *options,
                           struct QgSuite **out);

/**
 * Number of reports; 0 for a null handle.
 *
 * # Safety
 * `suite` must be null or a live handle.
 */
size_t qg_suite_len(const struct QgSuite *suite);

/**
 * Report `index` as one JSON line (no trailing newline).
 *
 * # Safety
 * `suite` must be a live handle; `out` writable.
 */
enum QgStatus qg_suite_report_json(const struct QgSuite *suite, size_t index, char **out);

/**
 * True when every report passed; false for a null handle.
 *
 * # Safety
 * `suite` must be null or a live handle.
 */
bool qg_suite_passed(const struct QgSuite *suite);

/**
 * The command-line exit code for this run: 0 when all reports pass, 1 otherwise.
 *
 * # Safety
 * `suite` must be null or a live handle.
 */
int32_t qg_suite_exit_code(const struct QgSuite *suite);

/**
 * # Safety
 * `suite` must be null or a handle from `qg_suite_run` and not yet freed.
 */
void qg_suite_free(struct QgSuite *suite);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QGORDON_H */

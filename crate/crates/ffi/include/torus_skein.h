#ifndef TORUS_SKEIN_H
#define TORUS_SKEIN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum TsStatus {
  TS_STATUS_OK = 0,
  TS_STATUS_NULL_POINTER = 1,
  TS_STATUS_INVALID_UTF8 = 2,
  TS_STATUS_PARSE = 3,
  TS_STATUS_INVALID_ARGUMENT = 4,
  TS_STATUS_RANK_MISMATCH = 5,
  /**
   * A verification ran and at least one check failed.
   */
  TS_STATUS_CHECKS_FAILED = 6,
  TS_STATUS_INTERNAL = 7,
} TsStatus;

/**
 * A skein element on a fixed number of strands.
 */
typedef struct TsElement TsElement;

/**
 * A verification report.
 */
typedef struct TsReport TsReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Short description of a status code. The pointer is static.
 */
const char *ts_status_message(enum TsStatus status);

/**
 * Copy of the last error message on this thread, or null if none.
 */
char *ts_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void ts_string_free(char *s);

/**
 * Parses an element such as `"x1 s1 - s^2 * y1^-1"` on `strands` strands.
 *
 * # Safety
 * `text` must be a valid C string and `out` a valid pointer.
 */
enum TsStatus ts_element_parse(const char *text, uintptr_t strands, struct TsElement **out);

/**
 * `Q̃_x` for `x = (a, b)` at rank `n`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum TsStatus ts_element_qtilde(int64_t a, int64_t b, uintptr_t n, struct TsElement **out);

/**
 * `W_x` at rank `n`, from power sums when `axis` is set.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum TsStatus ts_element_w(int64_t a, int64_t b, uintptr_t n, bool axis, struct TsElement **out);

/**
 * `a * b`
 *
 * # Safety
 * All pointers must be valid; `a`, `b` must be live handles.
 */
enum TsStatus ts_element_mul(const struct TsElement *a,
                             const struct TsElement *b,
                             struct TsElement **out);

/**
 * `a - b`
 *
 * # Safety
 * All pointers must be valid; `a`, `b` must be live handles.
 */
enum TsStatus ts_element_sub(const struct TsElement *a,
                             const struct TsElement *b,
                             struct TsElement **out);

/**
 * Renders an element; free the result with [`ts_string_free`].
 *
 * # Safety
 * `e` must be a live handle and `out` a valid pointer.
 */
enum TsStatus ts_element_to_string(const struct TsElement *e, char **out);

/**
 * # Safety
 * `e` must be null or a handle not yet freed.
 */
void ts_element_free(struct TsElement *e);

/**
 * Compares two elements on the monomial box of radius `box_radius`.
 * `*equal` is set only on success.
 *
 * # Safety
 * All pointers must be valid; `a`, `b` must be live handles.
 */
enum TsStatus ts_oracle_equal(const struct TsElement *a,
                              const struct TsElement *b,
                              uint32_t box_radius,
                              uint32_t trials,
                              uint64_t seed,
                              bool *equal);

/**
 * Image of the polynomial `poly` (e.g. `"X1 X2^-1"`) under `e`.
 *
 * # Safety
 * `e` must be a live handle, `poly` a valid C string, `out` valid.
 */
enum TsStatus ts_element_apply(const struct TsElement *e, const char *poly, char **out);

/**
 * Runs a verification suite at rank `n` with default box, prime and
 * trials. Returns `ChecksFailed` with a valid report when checks fail.
 *
 * # Safety
 * `suite` must be a valid C string and `out` a valid pointer.
 */
enum TsStatus ts_verify(const char *suite, uintptr_t n, uint64_t seed, struct TsReport **out);

/**
 * Number of checks and failures in a report.
 *
 * # Safety
 * `r` must be a live handle; `total`, `failed` valid pointers.
 */
enum TsStatus ts_report_counts(const struct TsReport *r, uintptr_t *total, uintptr_t *failed);

/**
 * The report as JSON; free with [`ts_string_free`].
 *
 * # Safety
 * `r` must be a live handle and `out` a valid pointer.
 */
enum TsStatus ts_report_json(const struct TsReport *r, char **out);

/**
 * # Safety
 * `r` must be null or a handle not yet freed.
 */
void ts_report_free(struct TsReport *r);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TORUS_SKEIN_H */

#ifndef QUANTUM_GALOIS_H
#define QUANTUM_GALOIS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum QgStatus {
  QG_STATUS_OK = 0,
  QG_STATUS_NULL_POINTER = 1,
  QG_STATUS_INVALID_UTF8 = 2,
  QG_STATUS_PARSE = 3,
  QG_STATUS_MISMATCH = 4,
  QG_STATUS_DIVISION_BY_ZERO = 5,
  QG_STATUS_LIMIT_EXCEEDED = 6,
  QG_STATUS_UNKNOWN_NAME = 7,
  QG_STATUS_INVALID = 8,
  QG_STATUS_PANIC = 9,
} QgStatus;

// A parsed algebra.
typedef struct QgAlgebra QgAlgebra;

// An element of some algebra.
typedef struct QgElement QgElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or NULL. The pointer
// stays valid until the next failing call on the same thread.
const char *qg_last_error(void);

// Library version as a static string.
const char *qg_version(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void qg_string_free(char *s);

// Parses an algebra spec such as `weyl:2`, `skew-torus:1` or `gwa:usl2`.
//
// # Safety
// `spec` must be a nul-terminated string and `out` writable.
enum QgStatus qg_algebra_parse(const char *spec, struct QgAlgebra **out);

// # Safety
// `alg` must come from `qg_algebra_parse` and not be freed twice.
void qg_algebra_free(struct QgAlgebra *alg);

// Parses an expression in the given algebra and returns its normal form.
//
// # Safety
// Pointers must be valid; `out` must be writable.
enum QgStatus qg_element_parse(const struct QgAlgebra *alg,
                               const char *text,
                               struct QgElement **out);

// # Safety
// `u` must come from this library and not be freed twice.
void qg_element_free(struct QgElement *u);

// `out = a * b`. Both factors must live in the same algebra.
//
// # Safety
// Pointers must be valid; `out` must be writable.
enum QgStatus qg_element_mul(const struct QgElement *a,
                             const struct QgElement *b,
                             struct QgElement **out);

// `out = a + b`.
//
// # Safety
// Pointers must be valid; `out` must be writable.
enum QgStatus qg_element_add(const struct QgElement *a,
                             const struct QgElement *b,
                             struct QgElement **out);

// Writes whether `a` and `b` are the same element.
//
// # Safety
// Pointers must be valid; `out` must be writable.
enum QgStatus qg_element_equal(const struct QgElement *a, const struct QgElement *b, bool *out);

// Normal form as text; release with `qg_string_free`.
//
// # Safety
// Pointers must be valid; `out` must be writable.
enum QgStatus qg_element_to_string(const struct QgElement *u, char **out);

// Structured JSON form; release with `qg_string_free`.
//
// # Safety
// Pointers must be valid; `out` must be writable.
enum QgStatus qg_element_to_json(const struct QgElement *u, char **out);

// Parses `expr` in the algebra `spec` and writes its normal form.
//
// # Safety
// Pointers must be valid; `out` must be writable.
enum QgStatus qg_compute(const char *spec, const char *expr, char **out);

// Replays a built-in claim, or every claim when `id` is `all`, with default
// limits. Writes the JSON report and whether every verdict matched its
// expectation.
//
// # Safety
// Pointers must be valid; `report` and `as_expected` must be writable.
enum QgStatus qg_verify_claim(const char *id, char **report, bool *as_expected);

// Whether `count` integer vectors of length `n`, stored row after row in
// `vectors`, generate `Z^n` as a group.
//
// # Safety
// `vectors` must point to `count * n` readable values; `out` writable.
enum QgStatus qg_generates_group(const int64_t *vectors, size_t count, size_t n, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUANTUM_GALOIS_H */

#ifndef LONGEQ_H
#define LONGEQ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes; `LONGEQ_STATUS_OK` is zero.
 */
typedef enum LongeqStatus {
  LONGEQ_STATUS_OK = 0,
  LONGEQ_STATUS_NULL_POINTER = 1,
  LONGEQ_STATUS_INVALID_UTF8 = 2,
  LONGEQ_STATUS_PARSE = 3,
  LONGEQ_STATUS_INVALID_ARGUMENT = 4,
  LONGEQ_STATUS_NOT_A_LONG_SOLUTION = 5,
  LONGEQ_STATUS_NOT_IDEMPOTENT = 6,
  LONGEQ_STATUS_SINGULAR = 7,
  LONGEQ_STATUS_BUFFER_TOO_SMALL = 8,
  LONGEQ_STATUS_INTERNAL = 70,
} LongeqStatus;

/**
 * Equations understood by [`longeq_operator_check`], which takes them as
 * plain integers.
 */
typedef enum LongeqLaw {
  LONGEQ_LAW_LONG = 0,
  LONGEQ_LAW_D_EQUATION = 1,
  LONGEQ_LAW_QYBE = 2,
  LONGEQ_LAW_HOPF = 3,
  LONGEQ_LAW_KZ_BRACKET = 4,
  LONGEQ_LAW_SYMMETRIC = 5,
} LongeqLaw;

/**
 * An operator on `M ⊗ M` with exact rational coefficients.
 */
typedef struct LongeqOperator LongeqOperator;

/**
 * The Long bialgebra `L(R)` of an operator, as a finite presentation.
 */
typedef struct LongeqPresentation LongeqPresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or NULL. Valid until the
 * next call into this library from the same thread.
 */
const char *longeq_last_error_message(void);

/**
 * Static name of a status code; unknown codes get `"unknown status"`.
 */
const char *longeq_status_name(int status);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void longeq_string_free(char *s);

/**
 * Parses operator JSON (`{"dim": n, "entries": [...]}`).
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum LongeqStatus longeq_operator_from_json(const char *json, struct LongeqOperator **out);

/**
 * The identity on `k^n ⊗ k^n`.
 *
 * # Safety
 * `out` must be writable.
 */
enum LongeqStatus longeq_operator_identity(size_t n, struct LongeqOperator **out);

/**
 * `R^φ` for an idempotent `φ` given as `n` 1-based values.
 *
 * # Safety
 * `map` must point to `n` readable values; `out` must be writable.
 */
enum LongeqStatus longeq_operator_phi(const size_t *map, size_t n, struct LongeqOperator **out);

/**
 * # Safety
 * `op` must be a live handle; `out` must be writable.
 */
enum LongeqStatus longeq_operator_dim(const struct LongeqOperator *op, size_t *out);

/**
 * Sets `x_{uv}^{ji} = num/den` (1-based), the coefficient of `m_i ⊗ m_j` in `R(m_v ⊗ m_u)`.
 *
 * # Safety
 * `op` must be a live handle.
 */
enum LongeqStatus longeq_operator_set(struct LongeqOperator *op,
                                      size_t v,
                                      size_t u,
                                      size_t i,
                                      size_t j,
                                      int64_t num,
                                      int64_t den);

/**
 * Writes `x_{uv}^{ji}` as a fraction string into a caller-supplied buffer.
 *
 * # Safety
 * `op` must be a live handle; `buf` must have room for `len` bytes.
 */
enum LongeqStatus longeq_operator_get(const struct LongeqOperator *op,
                                      size_t v,
                                      size_t u,
                                      size_t i,
                                      size_t j,
                                      char *buf,
                                      size_t len);

/**
 * # Safety
 * `op` must be a live handle; `out` must be writable.
 */
enum LongeqStatus longeq_operator_to_json(const struct LongeqOperator *op, char **out);

/**
 * Exact check of one equation.
 *
 * # Safety
 * `op` must be a live handle; `holds` must be writable.
 */
enum LongeqStatus longeq_operator_check(const struct LongeqOperator *op, int law, bool *holds);

/**
 * First violated coefficient identity of the Long equation. On a failure
 * `*found` is true, `*equation` is 1 or 2 and `tuple` receives the 1-based
 * `(i, j, k, l, p, q)`.
 *
 * # Safety
 * `op` must be a live handle; `tuple` must have room for 6 values.
 */
enum LongeqStatus longeq_operator_long_witness(const struct LongeqOperator *op,
                                               bool *found,
                                               uint8_t *equation,
                                               size_t *tuple);

/**
 * # Safety
 * `op` must be NULL or a handle from this library not yet freed.
 */
void longeq_operator_free(struct LongeqOperator *op);

/**
 * Builds `L(R)`. `naming_json` may be NULL for canonical `c_i_j` names,
 * or a JSON object mapping comatrix labels to generator names.
 *
 * # Safety
 * `op` must be a live handle; `naming_json` NULL or NUL-terminated; `out` writable.
 */
enum LongeqStatus longeq_presentation_build(const struct LongeqOperator *op,
                                            const char *naming_json,
                                            struct LongeqPresentation **out);

/**
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum LongeqStatus longeq_presentation_num_generators(const struct LongeqPresentation *p,
                                                     size_t *out);

/**
 * Text form, one declaration per line.
 *
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum LongeqStatus longeq_presentation_text(const struct LongeqPresentation *p, char **out);

/**
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum LongeqStatus longeq_presentation_to_json(const struct LongeqPresentation *p, char **out);

/**
 * The operator `R_σ` reconstructed from the presentation.
 *
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum LongeqStatus longeq_presentation_round_trip(const struct LongeqPresentation *p,
                                                 struct LongeqOperator **out);

/**
 * # Safety
 * `p` must be NULL or a handle from this library not yet freed.
 */
void longeq_presentation_free(struct LongeqPresentation *p);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LONGEQ_H */

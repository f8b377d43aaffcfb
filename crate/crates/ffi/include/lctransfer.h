#ifndef LCTRANSFER_H
#define LCTRANSFER_H

/* Generated with cbindgen:0.27.0 */

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result of every call. Values from `InvalidInput` on mirror the library
 * error codes.
 */
typedef enum LctStatus {
  LCT_STATUS_OK = 0,
  LCT_STATUS_NULL_POINTER = 1,
  LCT_STATUS_INVALID_UTF8 = 2,
  LCT_STATUS_PARSE_ERROR = 3,
  LCT_STATUS_PANIC = 4,
  LCT_STATUS_INVALID_INPUT = 10,
  LCT_STATUS_NOT_PRIME = 11,
  LCT_STATUS_NOT_INTEGRAL = 12,
  LCT_STATUS_CONTEXT_MISMATCH = 13,
  LCT_STATUS_SHAPE_MISMATCH = 14,
  LCT_STATUS_OBSTRUCTION = 15,
  LCT_STATUS_DISC_MISMATCH = 16,
  LCT_STATUS_SEARCH_EXHAUSTED = 17,
  LCT_STATUS_NO_AUXILIARY_PLACE = 18,
  LCT_STATUS_UNSUPPORTED_SPECTRUM = 19,
  LCT_STATUS_NOT_UNRAMIFIED = 20,
  LCT_STATUS_NOT_REGULAR = 21,
  LCT_STATUS_MODULUS_MISMATCH = 22,
  LCT_STATUS_NON_GENERIC = 23,
  LCT_STATUS_RANK_MISMATCH = 24,
} LctStatus;

/**
 * Opaque unramified parameter of a general linear group.
 */
typedef struct LctGlParam LctGlParam;

/**
 * Opaque residue field data for a pair (ell, q).
 */
typedef struct LctReductionContext LctReductionContext;

/**
 * Opaque Satake parameter of a quasi-split classical group.
 */
typedef struct LctSatakeParam LctSatakeParam;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer
 * stays valid until the next call on the same thread.
 */
const char *lct_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void lct_string_free(char *s);

/**
 * Hilbert symbol `(a, b)_v` of two nonzero rationals given as `"n"` or
 * `"n/d"`; `place` is a prime or `"inf"`.
 *
 * # Safety
 * String arguments must be NUL-terminated; `result` must be writable.
 */
enum LctStatus lct_hilbert_symbol(const char *a, const char *b, const char *place, int8_t *result);

/**
 * Builds a Satake parameter from a group name (`"Sp4"`, `"SO5"`,
 * `"SO4-ns"`, `"U3"`, ...), the residue cardinality `q` and a JSON list
 * of `{half_exponent: coefficient}` maps.
 *
 * # Safety
 * String arguments must be NUL-terminated; `result` must be writable.
 */
enum LctStatus lct_satake_param_new(const char *group,
                                    uint64_t q,
                                    const char *chars_json,
                                    struct LctSatakeParam **result);

/**
 * # Safety
 * `p` must be NULL or a handle from this library not yet freed.
 */
void lct_satake_param_free(struct LctSatakeParam *p);

/**
 * Parses a GL parameter from its JSON form (`q`, `q_target`, `eigenvalues`).
 *
 * # Safety
 * `json` must be NUL-terminated; `result` must be writable.
 */
enum LctStatus lct_gl_param_from_json(const char *json, struct LctGlParam **result);

/**
 * Canonical JSON of a GL parameter, to be released with [`lct_string_free`].
 *
 * # Safety
 * `p` must be a live handle; `result` must be writable.
 */
enum LctStatus lct_gl_param_to_json(const struct LctGlParam *p, char **result);

/**
 * Dimension `N` of a GL parameter.
 *
 * # Safety
 * `p` must be a live handle; `result` must be writable.
 */
enum LctStatus lct_gl_param_dim(const struct LctGlParam *p, size_t *result);

/**
 * # Safety
 * `p` must be NULL or a handle from this library not yet freed.
 */
void lct_gl_param_free(struct LctGlParam *p);

/**
 * Transfer of a Satake parameter to the general linear group.
 *
 * # Safety
 * `p` must be a live handle; `result` must be writable.
 */
enum LctStatus lct_transfer(const struct LctSatakeParam *p, struct LctGlParam **result);

/**
 * Residue field data for a prime `ell` not dividing the prime power `q`.
 *
 * # Safety
 * `result` must be writable.
 */
enum LctStatus lct_reduction_context_new(uint64_t ell,
                                         uint64_t q,
                                         struct LctReductionContext **result);

/**
 * # Safety
 * `ctx` must be NULL or a handle from this library not yet freed.
 */
void lct_reduction_context_free(struct LctReductionContext *ctx);

/**
 * Whether two GL parameters have equal reduced eigenvalue multisets.
 *
 * # Safety
 * Handles must be live; `result` must be writable.
 */
enum LctStatus lct_congruent(const struct LctGlParam *a,
                             const struct LctGlParam *b,
                             const struct LctReductionContext *ctx,
                             bool *result);

/**
 * Whether two Satake parameters of the same group have the same reduced
 * Weyl orbit.
 *
 * # Safety
 * Handles must be live; `result` must be writable.
 */
enum LctStatus lct_same_support(const struct LctSatakeParam *a,
                                const struct LctSatakeParam *b,
                                const struct LctReductionContext *ctx,
                                bool *result);

/**
 * Checks a global certificate given as JSON. `ok` receives the verdict;
 * if `report` is not NULL it receives the full report as JSON.
 *
 * # Safety
 * `cert_json` must be NUL-terminated; `ok` must be writable.
 */
enum LctStatus lct_certificate_check(const char *cert_json, bool *ok, char **report);

/**
 * Kloosterman sum over `F_q` (`q` a power of 2) of the generic tuple
 * `u[0..len]` of nonzero element codes, twisted by `a`.
 *
 * # Safety
 * `u` must point to `len` readable values; `result` must be writable.
 */
enum LctStatus lct_kloosterman_value(uint64_t q,
                                     const uint64_t *u,
                                     size_t len,
                                     uint64_t a,
                                     int64_t *result);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LCTRANSFER_H */

#ifndef MOTIVIC_POWER_H
#define MOTIVIC_POWER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  MP_STATUS_OK = 0,
  MP_STATUS_NULL_ARGUMENT = 1,
  MP_STATUS_INVALID_UTF8 = 2,
  MP_STATUS_SYNTAX = 3,
  MP_STATUS_RING_MISMATCH = 4,
  MP_STATUS_NOT_UNITAL = 5,
  MP_STATUS_INVALID_ARGUMENT = 6,
  MP_STATUS_UNSUPPORTED = 7,
  MP_STATUS_JSON = 8,
  MP_STATUS_PANIC = 9,
} MpStatus;

/**
 * Opaque polynomial handle.
 */
typedef struct MpPolynomial MpPolynomial;

/**
 * Opaque ring handle.
 */
typedef struct MpRing MpRing;

/**
 * Opaque truncated series handle.
 */
typedef struct MpSeries MpSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failed call on this thread; empty after a
 * successful call. Valid until the next call on the same thread.
 */
const char *mp_last_error(void);

/**
 * # Safety
 * `s` must come from one of the `*_to_string`/`*_to_json` functions and not
 * have been freed.
 */
void mp_string_free(char *s);

/**
 * Ring over the comma-separated `vars` (empty for the integers).
 *
 * # Safety
 * `vars` must be a NUL-terminated string and `out` writable.
 */
MpStatus mp_ring_new(const char *vars, bool laurent, MpRing **out);

/**
 * # Safety
 * `ring` must come from [`mp_ring_new`] and not have been freed.
 */
void mp_ring_free(MpRing *ring);

/**
 * # Safety
 * `ring` must be a live handle, `src` a NUL-terminated string, `out` writable.
 */
MpStatus mp_polynomial_parse(const MpRing *ring, const char *src, MpPolynomial **out);

/**
 * # Safety
 * `p` must come from this library and not have been freed.
 */
void mp_polynomial_free(MpPolynomial *p);

/**
 * Writes a string to be released with [`mp_string_free`].
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
MpStatus mp_polynomial_to_string(const MpPolynomial *p, char **out);

/**
 * Parses a polynomial in the ring variables and `t`, truncated at `order`.
 *
 * # Safety
 * `ring` must be a live handle, `src` a NUL-terminated string, `out` writable.
 */
MpStatus mp_series_parse(const MpRing *ring, const char *src, size_t order, MpSeries **out);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void mp_series_free(MpSeries *s);

/**
 * Truncation order, or 0 for a null handle.
 *
 * # Safety
 * `s` must be null or a live handle.
 */
size_t mp_series_order(const MpSeries *s);

/**
 * Coefficient of `t^n`.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
MpStatus mp_series_coefficient(const MpSeries *s, size_t n, MpPolynomial **out);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
MpStatus mp_series_to_string(const MpSeries *s, char **out);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
MpStatus mp_series_to_json(const MpSeries *s, char **out);

/**
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
MpStatus mp_series_from_json(const char *json, MpSeries **out);

/**
 * `A(t)^m` for a unital series.
 *
 * # Safety
 * `series` and `exponent` must be live handles and `out` writable.
 */
MpStatus mp_pow(const MpSeries *series, const MpPolynomial *exponent, MpSeries **out);

/**
 * Kapranov zeta function `(1-t)^(-[X])`.
 *
 * # Safety
 * `class` must be a live handle and `out` writable.
 */
MpStatus mp_zeta(const MpPolynomial *class_, size_t order, MpSeries **out);

/**
 * Hilbert series of points on a smooth variety of class `class` (in a ring
 * with the variable `L`) and dimension `dimension`, from the built-in local
 * data.
 *
 * # Safety
 * `class` must be a live handle and `out` writable.
 */
MpStatus mp_hilbert(const MpPolynomial *class_, uint32_t dimension, size_t order, MpSeries **out);

/**
 * Hodge-Deligne specialization for a class `e_x` in a two-variable ring.
 *
 * # Safety
 * `e_x` must be a live handle and `out` writable.
 */
MpStatus mp_hilbert_hodge(const MpPolynomial *e_x,
                          uint32_t dimension,
                          size_t order,
                          MpSeries **out);

/**
 * Evaluates every coefficient at 1 for all variables.
 *
 * # Safety
 * `series` must be a live handle and `out` writable.
 */
MpStatus mp_euler_specialization(const MpSeries *series, MpSeries **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MOTIVIC_POWER_H */

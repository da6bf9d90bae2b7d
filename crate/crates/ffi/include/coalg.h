#ifndef COALG_H
#define COALG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum CoalgStatus {
  COALG_STATUS_OK = 0,
  COALG_STATUS_NULL_POINTER = 1,
  COALG_STATUS_INVALID_UTF8 = 2,
  COALG_STATUS_PARSE = 3,
  COALG_STATUS_UNKNOWN_BUILTIN = 4,
  COALG_STATUS_AXIOM_FAILURE = 5,
  COALG_STATUS_INVALID_ARGUMENT = 6,
  COALG_STATUS_RESOURCE_GUARD = 7,
  COALG_STATUS_BUFFER_TOO_SMALL = 8,
  COALG_STATUS_INTERNAL = 9,
} CoalgStatus;

/**
 * Opaque coalgebra handle.
 */
typedef struct CoalgCoalgebra CoalgCoalgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread; empty after a
 * success. Valid until the next call on the same thread.
 */
const char *coalg_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *coalg_version(void);

/**
 * Built-in coalgebra: `trivial`, `group:<n>`, `matrix:<n>`,
 * `matrix:<n>:<spec>`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CoalgStatus coalg_builtin(const char *spec, struct CoalgCoalgebra **out);

/**
 * Coalgebra from the JSON file format; axioms are not checked.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CoalgStatus coalg_from_json(const char *text, struct CoalgCoalgebra **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `c` must come from this library and not be used afterwards.
 */
void coalg_free(struct CoalgCoalgebra *c);

/**
 * # Safety
 * `c` must be a live handle and `out` a valid pointer.
 */
enum CoalgStatus coalg_dim(const struct CoalgCoalgebra *c, size_t *out);

/**
 * Coassociativity, counit laws and the `Lie(C)` axioms. `*passed` is
 * set even when an axiom fails; the status is `Ok` either way.
 *
 * # Safety
 * `c` must be a live handle and `passed` a valid pointer.
 */
enum CoalgStatus coalg_check(const struct CoalgCoalgebra *c, bool *passed);

/**
 * Homology of one complex (`bar`, `hochschild`, `ce`, `ce-sym`,
 * `ce-red`, `cyclic`) in degrees from `*first_degree` through
 * `max_degree`. `*len` always receives the number of values; when it
 * exceeds `capacity` nothing is written to `dims` and the status is
 * `BufferTooSmall`.
 *
 * # Safety
 * Pointers must be valid; `dims` must hold `capacity` values.
 */
enum CoalgStatus coalg_homology(const struct CoalgCoalgebra *c,
                                const char *kind,
                                size_t max_degree,
                                size_t *first_degree,
                                size_t *dims,
                                size_t capacity,
                                size_t *len);

/**
 * Compares `H^Lie(gl_n^c(C))` with `Λ* HC(C)[+1]` in degrees
 * `0..=max_degree`; `*stable_agreement` is whether they agree in every
 * degree `m ≤ n`.
 *
 * # Safety
 * `c` must be a live handle and `stable_agreement` a valid pointer.
 */
enum CoalgStatus coalg_lqt(const struct CoalgCoalgebra *c,
                           size_t n,
                           size_t max_degree,
                           bool *stable_agreement);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COALG_H */

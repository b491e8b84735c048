#ifndef SLODOWY_H
#define SLODOWY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SlodowyMethod {
  SLODOWY_METHOD_BRUTE = 0,
  SLODOWY_METHOD_THEOREM = 1,
  SLODOWY_METHOD_BOTH = 2,
} SlodowyMethod;

typedef enum SlodowyStatus {
  SLODOWY_STATUS_OK = 0,
  SLODOWY_STATUS_NULL_POINTER = 1,
  SLODOWY_STATUS_INVALID_ARGUMENT = 2,
  SLODOWY_STATUS_GUARD_EXCEEDED = 3,
  SLODOWY_STATUS_NOT_CLOSED = 4,
  SLODOWY_STATUS_VERIFICATION_FAILED = 5,
  SLODOWY_STATUS_PANIC = 6,
} SlodowyStatus;

/**
 * Opaque handle: a root system with its enumerated Weyl group.
 */
typedef struct SlodowyGroup SlodowyGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the Weyl group of `label` (for example `"B3"`). Free the handle
 * with [`slodowy_group_free`].
 *
 * # Safety
 * `label` must be a valid C string and `out_group` a valid pointer.
 */
enum SlodowyStatus slodowy_group_new(const char *label, struct SlodowyGroup **out_group);

/**
 * # Safety
 * `group` must come from [`slodowy_group_new`] and not be freed twice.
 */
void slodowy_group_free(struct SlodowyGroup *group);

/**
 * # Safety
 * Pointers must be valid.
 */
enum SlodowyStatus slodowy_group_rank(const struct SlodowyGroup *group, uint32_t *out_rank);

/**
 * # Safety
 * Pointers must be valid.
 */
enum SlodowyStatus slodowy_group_order(const struct SlodowyGroup *group, uint64_t *out_order);

/**
 * Closedness of `Γ(I,J,K)`. When closed, the splitting `(X, Y)` is written
 * to `out_x` and `out_y`; otherwise both are set to 0.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SlodowyStatus slodowy_gamma_closed(const struct SlodowyGroup *group,
                                        uint32_t i,
                                        uint32_t j,
                                        uint32_t k,
                                        bool *out_closed,
                                        uint32_t *out_x,
                                        uint32_t *out_y);

/**
 * Number of torus fixed points for `(L, Γ(I,J,K))`, as cosets of `W/W_I`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SlodowyStatus slodowy_fixed_point_count(const struct SlodowyGroup *group,
                                             uint32_t l,
                                             uint32_t i,
                                             uint32_t j,
                                             uint32_t k,
                                             enum SlodowyMethod method,
                                             uint64_t *out_count);

/**
 * `|(W_L\W/W_I)^free|`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SlodowyStatus slodowy_free_double_coset_count(const struct SlodowyGroup *group,
                                                   uint32_t l,
                                                   uint32_t i,
                                                   uint64_t *out_count);

/**
 * Applies a Hanany-Witten move at `pos` (0-based) and returns the new
 * diagram as a string owned by the caller; release it with
 * [`slodowy_string_free`].
 *
 * # Safety
 * `diagram` must be a valid C string and `out_diagram` a valid pointer.
 */
enum SlodowyStatus slodowy_bow_hw(const char *diagram, size_t pos, char **out_diagram);

/**
 * Same as [`slodowy_bow_hw`] for normalization to separated form.
 *
 * # Safety
 * `diagram` must be a valid C string and `out_diagram` a valid pointer.
 */
enum SlodowyStatus slodowy_bow_normalize(const char *diagram, char **out_diagram);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void slodowy_string_free(char *s);

/**
 * Coulomb dimension of the star quiver of `parts` compared with `n² + n`.
 *
 * # Safety
 * `parts` must point to `len` values; outputs must be valid.
 */
enum SlodowyStatus slodowy_quiver_crosscheck(const uint64_t *parts,
                                             size_t len,
                                             bool *out_ok,
                                             int64_t *out_coulomb);

/**
 * Message for the last failure on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *slodowy_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SLODOWY_H */

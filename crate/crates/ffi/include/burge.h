#ifndef BURGE_H
#define BURGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Object families accepted by the count and convert calls.
 */
typedef enum BurgeFamily {
  BURGE_FAMILY_PARTITION = 0,
  BURGE_FAMILY_MULTIPARTITION = 1,
  BURGE_FAMILY_PATH = 2,
} BurgeFamily;

/**
 * Result code of every fallible call.
 */
typedef enum BurgeStatus {
  BURGE_STATUS_OK = 0,
  BURGE_STATUS_NULL_POINTER = 1,
  BURGE_STATUS_INVALID_CONFIG = 2,
  BURGE_STATUS_INVALID_INPUT = 3,
  BURGE_STATUS_OVERFLOW = 4,
  BURGE_STATUS_INTERNAL = 5,
} BurgeStatus;

/**
 * Opaque boundary configuration `(k, i)`.
 */
typedef struct BurgeConfig BurgeConfig;

/**
 * Create a configuration. On success `*out` owns a handle that must be
 * released with [`burge_config_free`].
 *
 * # Safety
 * `out` must be null or valid for a pointer write.
 */
enum BurgeStatus burge_config_new(int64_t k, int64_t i, struct BurgeConfig **out);

/**
 * Release a handle from [`burge_config_new`]. Null is ignored.
 *
 * # Safety
 * `cfg` must be null or a live handle not freed before.
 */
void burge_config_free(struct BurgeConfig *cfg);

/**
 * `k` of a live handle, or 0 for null.
 *
 * # Safety
 * `cfg` must be null or a live handle.
 */
uint32_t burge_config_k(const struct BurgeConfig *cfg);

/**
 * `i` of a live handle, or 0 for null.
 *
 * # Safety
 * `cfg` must be null or a live handle.
 */
uint32_t burge_config_i(const struct BurgeConfig *cfg);

/**
 * Number of objects of `family` with weight `n`, restricted to length /
 * charge `m` when `m >= 0`.
 *
 * # Safety
 * `cfg` must be a live handle and `out` valid for a write.
 */
enum BurgeStatus burge_count(const struct BurgeConfig *cfg,
                             enum BurgeFamily family,
                             uint64_t n,
                             int64_t m,
                             uint64_t *out);

/**
 * Coefficient of `z^m q^n` in the closed-form sum.
 *
 * # Safety
 * `cfg` must be a live handle and `out` valid for a write.
 */
enum BurgeStatus burge_series_coefficient(const struct BurgeConfig *cfg,
                                          size_t n,
                                          size_t m,
                                          int64_t *out);

/**
 * Convert the JSON object `input` of family `from` into family `to`. On
 * success `*out` holds a JSON string to release with [`burge_string_free`].
 *
 * # Safety
 * `cfg` must be a live handle, `input` a NUL-terminated string and `out`
 * valid for a pointer write.
 */
enum BurgeStatus burge_convert(const struct BurgeConfig *cfg,
                               enum BurgeFamily from,
                               enum BurgeFamily to,
                               const char *input,
                               char **out);

/**
 * Release a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not freed before.
 */
void burge_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *burge_last_error(void);

#endif  /* BURGE_H */

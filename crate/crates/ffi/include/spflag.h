#ifndef SPFLAG_H
#define SPFLAG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SpflagStatus {
  SPFLAG_STATUS_OK = 0,
  SPFLAG_STATUS_NULL_POINTER = 1,
  SPFLAG_STATUS_INVALID_UTF8 = 2,
  SPFLAG_STATUS_CHART_MISMATCH = 3,
  SPFLAG_STATUS_BAD_RATIONAL = 4,
  SPFLAG_STATUS_BAD_SYNTAX = 5,
  SPFLAG_STATUS_RULE_VIOLATION = 6,
  SPFLAG_STATUS_CONSTANT_NOT_ADMITTED = 7,
  SPFLAG_STATUS_INDEX_OUT_OF_RANGE = 8,
  SPFLAG_STATUS_BAD_MODEL_NAME = 9,
  SPFLAG_STATUS_NOT_SPECIAL_FLAG = 10,
  SPFLAG_STATUS_DEGENERATE_PIVOT = 11,
  SPFLAG_STATUS_GENERATOR_BLOWUP = 12,
  SPFLAG_STATUS_UNEXPECTED_COVARIANT_DIMENSION = 13,
  SPFLAG_STATUS_OVERFLOW = 14,
  SPFLAG_STATUS_PANIC = 15,
} SpflagStatus;

/**
 * Opaque EKR label with shift constants.
 */
typedef struct SpflagEkr SpflagEkr;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into the library on this thread.
 */
const char *spflag_last_error_message(void);

/**
 * Creates a handle for a dot-separated word with all constants zero.
 *
 * # Safety
 * `word` must be a nul-terminated string; `out` must be writable.
 */
enum SpflagStatus spflag_ekr_new(const char *word, struct SpflagEkr **out);

/**
 * Creates a handle from the JSON constants format
 * `{"word": "1.2.1.3", "b": {"3": "1/2"}, "c": {"3": "-2"}}`.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum SpflagStatus spflag_ekr_from_json(const char *json, struct SpflagEkr **out);

/**
 * Sets `b_step` (`which = 'b'`) or `c_step` (`which = 'c'`) to a rational
 * written like `-3/7`.
 *
 * # Safety
 * `ekr` must come from this library; `value` must be a nul-terminated string.
 */
enum SpflagStatus spflag_ekr_set_constant(struct SpflagEkr *ekr,
                                          char which,
                                          size_t step,
                                          const char *value);

/**
 * Word length `r`, or 0 for a null handle.
 *
 * # Safety
 * `ekr` must be null or come from this library.
 */
size_t spflag_ekr_length(const struct SpflagEkr *ekr);

/**
 * # Safety
 * `ekr` must be null or come from this library and not be used afterwards.
 */
void spflag_ekr_free(struct SpflagEkr *ekr);

/**
 * Classifies the EKR at a comma-separated rational point (null for the
 * origin) and stores the JSON report in `report`.
 *
 * # Safety
 * `ekr` must come from this library; `point` must be null or a
 * nul-terminated string; `report` must be writable.
 */
enum SpflagStatus spflag_ekr_classify(const struct SpflagEkr *ekr,
                                      const char *point,
                                      int generic_geometry,
                                      char **report);

/**
 * Classifies a named model (`ca_2`, `ex_2`, `appxB_D(1,2,3)`, …).
 *
 * # Safety
 * `name` must be a nul-terminated string; `point` null or nul-terminated;
 * `report` writable.
 */
enum SpflagStatus spflag_model_classify(const char *name,
                                        const char *point,
                                        int generic_geometry,
                                        char **report);

/**
 * Number of singularity classes of width `width` and length `length`.
 *
 * # Safety
 * `out` must be writable.
 */
enum SpflagStatus spflag_count_classes(size_t width, size_t length, uint64_t *out);

/**
 * Codimension of a singularity class.
 *
 * # Safety
 * `word` must be a nul-terminated string; `out` writable.
 */
enum SpflagStatus spflag_codimension(const char *word, size_t *out);

/**
 * Locus equations of a class, one `var=0` per line.
 *
 * # Safety
 * `word` must be a nul-terminated string; `out` writable.
 */
enum SpflagStatus spflag_locus(const char *word, char **out);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `s` must be null or come from this library and not be used afterwards.
 */
void spflag_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPFLAG_H */

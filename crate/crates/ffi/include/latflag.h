#ifndef LATFLAG_H
#define LATFLAG_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LatflagStatus {
  LATFLAG_STATUS_OK = 0,
  LATFLAG_STATUS_NULL_POINTER = 1,
  LATFLAG_STATUS_INVALID_UTF8 = 2,
  LATFLAG_STATUS_PARSE = 3,
  LATFLAG_STATUS_INVALID_POSET = 4,
  LATFLAG_STATUS_INVALID_ARGUMENT = 5,
  LATFLAG_STATUS_PRECONDITION = 6,
  LATFLAG_STATUS_OVERFLOW = 7,
  LATFLAG_STATUS_BUFFER_TOO_SMALL = 8,
  LATFLAG_STATUS_IO = 9,
  LATFLAG_STATUS_BUDGET = 10,
  LATFLAG_STATUS_PANIC = 11,
} LatflagStatus;

typedef enum LatflagVerdict {
  LATFLAG_VERDICT_PASS = 0,
  LATFLAG_VERDICT_FAIL = 1,
  LATFLAG_VERDICT_NOT_APPLICABLE = 2,
} LatflagVerdict;

/**
 * Opaque poset handle.
 */
typedef struct LatflagPoset LatflagPoset;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses the text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum LatflagStatus latflag_poset_parse(const char *text, struct LatflagPoset **out);

/**
 * Reads a poset file.
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be writable.
 */
enum LatflagStatus latflag_poset_read_file(const char *path, struct LatflagPoset **out);

/**
 * Builds a catalog poset: `B<n>`, `Pi<n>`, `chain<n>`, `butterfly`.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum LatflagStatus latflag_poset_catalog(const char *name, struct LatflagPoset **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `p` must come from this library and not be used afterwards.
 */
void latflag_poset_free(struct LatflagPoset *p);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum LatflagStatus latflag_poset_element_count(const struct LatflagPoset *p, size_t *out);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum LatflagStatus latflag_poset_rank(const struct LatflagPoset *p, size_t *out);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum LatflagStatus latflag_poset_is_lattice(const struct LatflagPoset *p, bool *out);

/**
 * Serializes to the text format.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum LatflagStatus latflag_poset_to_text(const struct LatflagPoset *p, char **out);

/**
 * Number of entries of a flag vector of `p`, `2^(rank-1)` (1 for rank 0).
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum LatflagStatus latflag_flag_len(const struct LatflagPoset *p, size_t *out);

/**
 * Writes the flag f-vector, indexed by rank-subset bitmask (bit `i-1` for
 * rank `i`), into `out[0..len]`.
 *
 * # Safety
 * `p` must be a live handle; `out` must have room for `len` values.
 */
enum LatflagStatus latflag_flag_f(const struct LatflagPoset *p, int64_t *out, size_t len);

/**
 * Writes the flag h-vector; layout as for `latflag_flag_f`.
 *
 * # Safety
 * `p` must be a live handle; `out` must have room for `len` values.
 */
enum LatflagStatus latflag_flag_h(const struct LatflagPoset *p, int64_t *out, size_t len);

/**
 * Möbius function between bottom and top.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum LatflagStatus latflag_mobius(const struct LatflagPoset *p, int64_t *out);

/**
 * Top reduced Betti number of the proper part.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum LatflagStatus latflag_top_betti(const struct LatflagPoset *p, uint64_t prime, size_t *out);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum LatflagStatus latflag_is_cohen_macaulay(const struct LatflagPoset *p,
                                             uint64_t prime,
                                             bool *out);

/**
 * Runs one named check (`theorem`, `proposition`, `ideal-bound`, ...). When
 * `witness` is non-null it receives the witness, reason or detail string.
 *
 * # Safety
 * `p` must be a live handle; `check` a NUL-terminated string; `verdict`
 * writable; `witness` null or writable.
 */
enum LatflagStatus latflag_verify(const struct LatflagPoset *p,
                                  const char *check,
                                  uint64_t prime,
                                  uint64_t seed,
                                  enum LatflagVerdict *verdict,
                                  char **witness);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void latflag_string_free(char *s);

/**
 * Message for the last failing call on this thread, or an empty string.
 */
const char *latflag_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LATFLAG_H */

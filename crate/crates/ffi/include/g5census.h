#ifndef G5CENSUS_H
#define G5CENSUS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum G5Status {
  G5_STATUS_OK = 0,
  G5_STATUS_NULL_POINTER = 1,
  G5_STATUS_INVALID_ARGUMENT = 2,
  G5_STATUS_PARSE = 3,
  G5_STATUS_IO = 4,
  G5_STATUS_CORRUPT_CHECKPOINT = 5,
  G5_STATUS_INVARIANT = 6,
  G5_STATUS_PANIC = 7,
} G5Status;

typedef enum G5Stratum {
  G5_STRATUM_HYPERELLIPTIC = 0,
  G5_STRATUM_TRIGONAL = 1,
  G5_STRATUM_COMPLETE_INTERSECTION = 2,
} G5Stratum;

/**
 * A list of curve records.
 */
typedef struct G5Census G5Census;

/**
 * One curve record.
 */
typedef struct G5Record G5Record;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *g5_last_error(void);

/**
 * Enumerates one stratum. `genus` is used for the hyperelliptic stratum
 * only; `threads = 0` uses all cores.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum G5Status g5_census_run(enum G5Stratum stratum,
                            uint32_t genus,
                            uint32_t threads,
                            struct G5Census **out);

/**
 * Reads a census file.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` valid for writing.
 */
enum G5Status g5_census_load(const char *path, struct G5Census **out);

/**
 * Writes a census file, one record per line.
 *
 * # Safety
 * `census` must come from this library; `path` must be NUL-terminated.
 */
enum G5Status g5_census_write(const struct G5Census *census, const char *path);

/**
 * Number of records, or 0 for a null handle.
 *
 * # Safety
 * `census` must be null or come from this library.
 */
size_t g5_census_len(const struct G5Census *census);

/**
 * Sum of `1/|Aut|` over the records as a reduced fraction.
 *
 * # Safety
 * `census` must come from this library; `num` and `den` must be writable.
 */
enum G5Status g5_census_mass(const struct G5Census *census, int64_t *num, int64_t *den);

/**
 * Copies record `index` into a new handle.
 *
 * # Safety
 * `census` must come from this library and `out` be writable.
 */
enum G5Status g5_census_get(const struct G5Census *census, size_t index, struct G5Record **out);

/**
 * # Safety
 * `census` must be null or come from this library, and not be used again.
 */
void g5_census_free(struct G5Census *census);

/**
 * Parses one census line.
 *
 * # Safety
 * `line` must be NUL-terminated and `out` writable.
 */
enum G5Status g5_record_parse(const char *line, struct G5Record **out);

/**
 * Recomputes the zeta data from the model and checks it.
 *
 * # Safety
 * `record` must come from this library.
 */
enum G5Status g5_record_verify(const struct G5Record *record);

/**
 * Writes the record's line into `buf` and returns its full length; call
 * with `cap = 0` to size the buffer.
 *
 * # Safety
 * `record` must come from this library; `buf` must hold `cap` bytes.
 */
size_t g5_record_line(const struct G5Record *record, char *buf, size_t cap);

/**
 * # Safety
 * `record` must come from this library; `out` must be writable.
 */
enum G5Status g5_record_stratum(const struct G5Record *record, enum G5Stratum *out);

/**
 * Order of the automorphism group, or 0 for a null handle.
 *
 * # Safety
 * `record` must be null or come from this library.
 */
uint64_t g5_record_aut(const struct G5Record *record);

/**
 * Copies `N_1..N_g` into `out` (at most `cap` values) and returns `g`.
 *
 * # Safety
 * `record` must come from this library; `out` must hold `cap` values.
 */
size_t g5_record_counts(const struct G5Record *record, uint64_t *out, size_t cap);

/**
 * Copies the L-polynomial coefficients `c_0..c_{2g}` and returns `2g + 1`.
 *
 * # Safety
 * `record` must come from this library; `out` must hold `cap` values.
 */
size_t g5_record_lpoly(const struct G5Record *record, int64_t *out, size_t cap);

/**
 * # Safety
 * `record` must be null or come from this library, and not be used again.
 */
void g5_record_free(struct G5Record *record);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* G5CENSUS_H */

#ifndef CONELAB_H
#define CONELAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  CONELAB_STATUS_OK = 0,
  CONELAB_STATUS_NULL_POINTER = 1,
  CONELAB_STATUS_INVALID_ARGUMENT = 2,
  CONELAB_STATUS_DIMENSION_MISMATCH = 3,
  CONELAB_STATUS_UNKNOWN_ENTRY = 4,
  CONELAB_STATUS_PARSE = 5,
  CONELAB_STATUS_INTERNAL = 6,
} ConelabStatus;

typedef enum {
  CONELAB_VERDICT_HOLDS = 0,
  CONELAB_VERDICT_VIOLATED = 1,
  CONELAB_VERDICT_NOT_APPLICABLE = 2,
} ConelabVerdict;

/**
 * A polyhedral cone with exact rational generators.
 */
typedef struct ConelabCone ConelabCone;

/**
 * A finitely generated abelian group in Smith form.
 */
typedef struct ConelabGroup ConelabGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *conelab_version(void);

/**
 * Message of the last failed call on this thread, or NULL. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *conelab_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void conelab_string_free(char *s);

/**
 * Builds a cone in dimension `dim` from `count` integer generators stored
 * row-major in `coords` (`count * dim` values).
 *
 * # Safety
 * `coords` must point to `count * dim` readable values (or may be null when
 * that product is 0) and `out` must be valid for one pointer write.
 */
ConelabStatus conelab_cone_new(size_t dim, const int64_t *coords, size_t count, ConelabCone **out);

/**
 * Parses a cone file (`dim = …`, `generators = […]`) from `text`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` valid for one pointer write.
 */
ConelabStatus conelab_cone_parse(const char *text, ConelabCone **out);

/**
 * # Safety
 * `cone` must be null or a handle from this library that is not yet freed.
 */
void conelab_cone_free(ConelabCone *cone);

/**
 * # Safety
 * `cone` must be a live handle and `out` valid for one write.
 */
ConelabStatus conelab_cone_dim(const ConelabCone *cone, size_t *out);

/**
 * Membership of the integer point `point[0..len]`.
 *
 * # Safety
 * `cone` must be a live handle, `point` must hold `len` values and `out`
 * must be valid for one write.
 */
ConelabStatus conelab_cone_contains(const ConelabCone *cone,
                                    const int64_t *point,
                                    size_t len,
                                    bool *out);

/**
 * # Safety
 * `cone` must be a live handle and `out` valid for one write.
 */
ConelabStatus conelab_cone_is_strongly_convex(const ConelabCone *cone, bool *out);

/**
 * Facet normals and span equations as text, e.g.
 * `normals = [[0, 1], [1, -1]]` and `equations = []` on two lines.
 *
 * # Safety
 * `cone` must be a live handle and `out` valid for one pointer write.
 */
ConelabStatus conelab_cone_facets(const ConelabCone *cone, char **out);

/**
 * Cokernel of a `rows x cols` integer relation matrix stored row-major;
 * `cols` is the number of generators.
 *
 * # Safety
 * `entries` must hold `rows * cols` values and `out` must be valid for one
 * pointer write.
 */
ConelabStatus conelab_group_from_relations(size_t rows,
                                           size_t cols,
                                           const int64_t *entries,
                                           ConelabGroup **out);

/**
 * # Safety
 * `group` must be null or a handle from this library that is not yet freed.
 */
void conelab_group_free(ConelabGroup *group);

/**
 * # Safety
 * `group` must be a live handle and `out` valid for one write.
 */
ConelabStatus conelab_group_free_rank(const ConelabGroup *group, size_t *out);

/**
 * Torsion orders as text, e.g. `[2, 4]`.
 *
 * # Safety
 * `group` must be a live handle and `out` valid for one pointer write.
 */
ConelabStatus conelab_group_torsion(const ConelabGroup *group, char **out);

/**
 * Summary such as `Z + Z/4`.
 *
 * # Safety
 * `group` must be a live handle and `out` valid for one pointer write.
 */
ConelabStatus conelab_group_summary(const ConelabGroup *group, char **out);

/**
 * Runs the named check (`t1`, `t3`, `line`, …) with default options on a
 * catalog entry. The active catalog is the directory in `CONELAB_DATA` or
 * the built-in one. `report` may be null; otherwise it receives the text
 * report.
 *
 * # Safety
 * `entry` and `check` must be NUL-terminated strings, `verdict` must be
 * valid for one write, and `report` must be null or valid for one pointer
 * write.
 */
ConelabStatus conelab_check_entry(const char *entry,
                                  const char *check,
                                  ConelabVerdict *verdict,
                                  char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONELAB_H */

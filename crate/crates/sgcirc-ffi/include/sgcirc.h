#ifndef SGCIRC_H
#define SGCIRC_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every entry point.
 */
typedef enum SgStatus {
  /**
   * Operation succeeded.
   */
  SG_STATUS_OK = 0,
  /**
   * The verifier rejected the coloring (sg_verify only).
   */
  SG_STATUS_INVALID = 1,
  /**
   * A pointer argument was null.
   */
  SG_STATUS_NULL_ARGUMENT = -1,
  /**
   * A string argument was not valid UTF-8.
   */
  SG_STATUS_BAD_UTF8 = -2,
  /**
   * The graph or coloring text failed to parse.
   */
  SG_STATUS_PARSE_ERROR = -3,
  /**
   * The operation itself failed (domain mismatch, not 2-degenerate, ...).
   */
  SG_STATUS_OPERATION_ERROR = -4,
  /**
   * An internal invariant was violated.
   */
  SG_STATUS_INTERNAL_ERROR = -5,
} SgStatus;

/**
 * Opaque signed graph handle.
 */
typedef struct SgGraph SgGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a graph from the text format (`p sg n m` header, `e u v +|-`
 * lines). On success stores a new handle in `out`; free it with
 * [`sg_graph_free`].
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum SgStatus sg_graph_parse(const char *text, struct SgGraph **out);

/**
 * Frees a graph handle. Null is ignored.
 *
 * # Safety
 * `g` must come from [`sg_graph_parse`] and not be freed twice.
 */
void sg_graph_free(struct SgGraph *g);

/**
 * Number of vertices, or -1 on a null handle.
 *
 * # Safety
 * `g` must be a live handle or null.
 */
int sg_graph_order(const struct SgGraph *g);

/**
 * Computes the exact circular chromatic number and stores a JSON result
 * (value, grid representative, verified witness, tightness report) in
 * `out_json`. Free the string with [`sg_string_free`].
 *
 * # Safety
 * `g` must be a live handle, `out_json` a valid pointer.
 */
enum SgStatus sg_chi_c_json(const struct SgGraph *g, int jobs, char **out_json);

/**
 * Verifies a coloring JSON (`{"r": "p/q", "f": [...]}`) against the
 * graph. Returns `Ok` when valid, `Invalid` when some edge constraint
 * fails, and a negative status on malformed input.
 *
 * # Safety
 * `g` must be a live handle and `coloring_json` a valid string.
 */
enum SgStatus sg_verify(const struct SgGraph *g, const char *coloring_json);

/**
 * Builds a certified coloring of radius below 4 for a 2-degenerate graph
 * and stores a certificate JSON (`switch_set` plus coloring) in
 * `out_json`. Free the string with [`sg_string_free`].
 *
 * # Safety
 * `g` must be a live handle, `out_json` a valid pointer.
 */
enum SgStatus sg_color_2degenerate_json(const struct SgGraph *g, char **out_json);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void sg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SGCIRC_H */

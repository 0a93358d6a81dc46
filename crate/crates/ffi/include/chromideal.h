#ifndef CHROMIDEAL_H
#define CHROMIDEAL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes.
 */
typedef enum CiStatus {
  CI_STATUS_OK = 0,
  CI_STATUS_NULL_POINTER = 1,
  CI_STATUS_INVALID_ARGUMENT = 2,
  CI_STATUS_VERTEX_OUT_OF_RANGE = 3,
  CI_STATUS_TOO_MANY_VERTICES = 4,
  CI_STATUS_NO_EDGES = 5,
  CI_STATUS_ISOLATED_VERTEX = 6,
  CI_STATUS_NOT_CRITICAL = 7,
  CI_STATUS_OVERFLOW = 8,
  CI_STATUS_INTERNAL = 9,
  CI_STATUS_PANIC = 10,
} CiStatus;

/**
 * Builtin graph families for `ci_graph_family`.
 */
typedef enum CiFamily {
  CI_FAMILY_CYCLE = 0,
  CI_FAMILY_COMPLETE = 1,
  CI_FAMILY_ANTIHOLE = 2,
  CI_FAMILY_PATH = 3,
  /**
   * Ignores `n`.
   */
  CI_FAMILY_PETERSEN = 4,
  /**
   * Mycielski graph of the cycle on `n` vertices.
   */
  CI_FAMILY_MYCIELSKI_CYCLE = 5,
} CiFamily;

/**
 * Opaque graph handle.
 */
typedef struct CiGraph CiGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread (empty after a
 * success). Valid until the next call into the library on this thread.
 */
const char *ci_last_error_message(void);

/**
 * Graph on `n` vertices; `edges` holds `edge_count` pairs as `2 * edge_count`
 * 0-based endpoints.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values and `out` must be
 * writable.
 */
enum CiStatus ci_graph_new(size_t n, const size_t *edges, size_t edge_count, struct CiGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum CiStatus ci_graph_family(enum CiFamily kind, size_t n, struct CiGraph **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `g` must come from this library and not have been freed.
 */
void ci_graph_free(struct CiGraph *g);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum CiStatus ci_graph_vertex_count(const struct CiGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum CiStatus ci_graph_edge_count(const struct CiGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum CiStatus ci_chromatic_number(const struct CiGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum CiStatus ci_is_critical(const struct CiGraph *g, bool *out);

/**
 * `χ_f` as the reduced fraction `num / den`.
 *
 * # Safety
 * `g` must be a live handle; `num` and `den` must be writable.
 */
enum CiStatus ci_fractional_chromatic(const struct CiGraph *g, int64_t *num, int64_t *den);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum CiStatus ci_b_fold_chromatic(const struct CiGraph *g, size_t b, size_t *out);

/**
 * Expansion at the `w_len` vertices in `w`; the result is a new handle.
 *
 * # Safety
 * `g` must be a live handle, `w` must point to `w_len` readable values and
 * `out` must be writable.
 */
enum CiStatus ci_graph_expand(const struct CiGraph *g,
                              const size_t *w,
                              size_t w_len,
                              struct CiGraph **out);

/**
 * `s`-th expansion; shadow `j` (1-based) of vertex `i` is vertex `i*s + j - 1`.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum CiStatus ci_graph_power_expansion(const struct CiGraph *g, size_t s, struct CiGraph **out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum CiStatus ci_graph_mycielski(const struct CiGraph *g, struct CiGraph **out);

/**
 * Whether every component of `J(G)^s` corresponds to a critically
 * `(s+1)`-chromatic induced subgraph of the `s`-th expansion.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum CiStatus ci_verify_correspondence(const struct CiGraph *g, size_t s, bool converse, bool *out);

/**
 * Decomposition of `J(G)^s` as a JSON object with keys `components`
 * (lists such as `["x1^2","x3^1"]`) and `associated_primes` (0-based
 * vertex lists). Release the string with `ci_string_free`.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum CiStatus ci_decompose_json(const struct CiGraph *g, size_t s, char **out);

/**
 * `χ_f` formatted as `"p/q"`. Release with `ci_string_free`.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum CiStatus ci_fractional_chromatic_string(const struct CiGraph *g, char **out);

/**
 * Releases a string returned by the library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void ci_string_free(char *s);

/**
 * Library version as a static NUL-terminated string.
 */
const char *ci_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHROMIDEAL_H */

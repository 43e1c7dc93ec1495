#ifndef CONVDOM_H
#define CONVDOM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define CONVDOM_OK 0

#define CONVDOM_ERR_PARSE 1

#define CONVDOM_ERR_WRONG_CLASS 2

#define CONVDOM_ERR_RESOURCE 3

#define CONVDOM_ERR_OTHER 4

/**
 * A required pointer argument was null or a string was not UTF-8.
 */
#define CONVDOM_ERR_ARGUMENT 5

#define CONVDOM_ERR_PANIC 6

/**
 * Opaque graph handle.
 */
typedef struct ConvdomGraph ConvdomGraph;

/**
 * Opaque solver result handle.
 */
typedef struct ConvdomResult ConvdomResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *convdom_last_error_message(void);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`2 * edge_count` entries).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (it may be null
 * when `edge_count` is 0) and `out` must be writable.
 */
int32_t convdom_graph_new(size_t n,
                          const size_t *edges,
                          size_t edge_count,
                          struct ConvdomGraph **out);

/**
 * Parses the canonical edge-list text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` must be writable.
 */
int32_t convdom_graph_parse(const char *text, struct ConvdomGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library not yet freed.
 */
void convdom_graph_free(struct ConvdomGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle or null (then 0 is returned).
 */
size_t convdom_graph_vertex_count(const struct ConvdomGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle or null (then 0 is returned).
 */
size_t convdom_graph_edge_count(const struct ConvdomGraph *g);

/**
 * Canonical edge-list text; release with `convdom_string_free`. Null on a
 * null handle.
 *
 * # Safety
 * `g` must be a live graph handle or null.
 */
char *convdom_graph_to_edge_list(const struct ConvdomGraph *g);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void convdom_string_free(char *s);

/**
 * Writes whether the graph is chordal.
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
int32_t convdom_is_chordal(const struct ConvdomGraph *g, bool *out);

/**
 * Writes whether the graph is a chordal dominating pair graph.
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
int32_t convdom_is_chordal_dp_graph(const struct ConvdomGraph *g, bool *out);

/**
 * First dominating pair in lexicographic order. `found` is set to false
 * when the graph has none.
 *
 * # Safety
 * `g` must be a live graph handle; `x`, `y` and `found` must be writable.
 */
int32_t convdom_find_dominating_pair(const struct ConvdomGraph *g,
                                     size_t *x,
                                     size_t *y,
                                     bool *found);

/**
 * Convex domination number by hulls of at most four seeds. With `trust`
 * false the input must pass the chordal dominating pair test. `jobs` of 0
 * means 1.
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
int32_t convdom_gamma_con(const struct ConvdomGraph *g,
                          bool trust,
                          size_t jobs,
                          struct ConvdomResult **out);

/**
 * Isometric domination number by the staged pair algorithm. A `path_cap`
 * of 0 selects the default.
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
int32_t convdom_gamma_iso(const struct ConvdomGraph *g,
                          size_t jobs,
                          uint64_t path_cap,
                          struct ConvdomResult **out);

/**
 * Exhaustive convex domination number; `bound` of 0 selects the default.
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
int32_t convdom_gamma_con_bruteforce(const struct ConvdomGraph *g,
                                     size_t bound,
                                     struct ConvdomResult **out);

/**
 * Exhaustive isometric domination number; `bound` of 0 selects the default.
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
int32_t convdom_gamma_iso_bruteforce(const struct ConvdomGraph *g,
                                     size_t bound,
                                     struct ConvdomResult **out);

/**
 * # Safety
 * `r` must be null or a handle from this library not yet freed.
 */
void convdom_result_free(struct ConvdomResult *r);

/**
 * Optimum value, or 0 for a null handle.
 *
 * # Safety
 * `r` must be a live result handle or null.
 */
size_t convdom_result_value(const struct ConvdomResult *r);

/**
 * Copies up to `cap` witness vertices (ascending) into `buf` and returns the
 * witness size, so a call with `cap` 0 reports the size needed.
 *
 * # Safety
 * `r` must be a live result handle or null; `buf` must hold `cap` values.
 */
size_t convdom_result_witness(const struct ConvdomResult *r, size_t *buf, size_t cap);

/**
 * Full result as a JSON object; release with `convdom_string_free`.
 *
 * # Safety
 * `r` must be a live result handle or null.
 */
char *convdom_result_to_json(const struct ConvdomResult *r);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONVDOM_H */

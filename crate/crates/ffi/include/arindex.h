#ifndef ARINDEX_H
#define ARINDEX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ArxStatus {
  ARX_STATUS_OK = 0,
  ARX_STATUS_INVALID_INPUT = 1,
  ARX_STATUS_RANGE = 2,
  ARX_STATUS_PARSE = 3,
  ARX_STATUS_IO = 4,
  ARX_STATUS_UNSUPPORTED_SIZE = 5,
  ARX_STATUS_INTERNAL = 6,
  ARX_STATUS_NULL_POINTER = 7,
  /**
   * The search ran out of budget; outputs hold the best bounds known.
   */
  ARX_STATUS_BUDGET_EXHAUSTED = 8,
  /**
   * An output buffer is shorter than the graph's edge count.
   */
  ARX_STATUS_BUFFER_TOO_SMALL = 9,
  ARX_STATUS_PANIC = 10,
} ArxStatus;

/**
 * Outcome of a fixed-`k` search.
 */
typedef enum ArxSearch {
  ARX_SEARCH_FOUND = 0,
  ARX_SEARCH_REFUTED = 1,
  ARX_SEARCH_TIMED_OUT = 2,
} ArxSearch;

/**
 * Opaque graph handle.
 */
typedef struct ArxGraph ArxGraph;

/**
 * AR-index bounds; `lower == upper` when `exact`.
 */
typedef struct ArxAri {
  bool exact;
  uint64_t lower;
  uint64_t upper;
} ArxAri;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Last error message on this thread, or null. Valid until the next call
 * into this library from the same thread.
 */
const char *arx_last_error(void);

/**
 * Builds a family graph from a spec such as `"complete 5"` or `"bistar 3 3"`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum ArxStatus arx_graph_from_family(const char *spec, struct ArxGraph **out);

/**
 * Builds a graph from `edge_count` endpoint pairs stored flat in `endpoints`.
 *
 * # Safety
 * `endpoints` must hold `2 * edge_count` values; `out` must be writable.
 */
enum ArxStatus arx_graph_from_edges(size_t vertex_count,
                                    const size_t *endpoints,
                                    size_t edge_count,
                                    struct ArxGraph **out);

/**
 * Releases a graph. Null is ignored.
 *
 * # Safety
 * `g` must be null or a handle not yet freed.
 */
void arx_graph_free(struct ArxGraph *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum ArxStatus arx_graph_vertex_count(const struct ArxGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum ArxStatus arx_graph_edge_count(const struct ArxGraph *g, size_t *out);

/**
 * Endpoints `u < v` of edge `index` in canonical order.
 *
 * # Safety
 * `g` must be a live handle; `u` and `v` must be writable.
 */
enum ArxStatus arx_graph_edge(const struct ArxGraph *g, size_t index, size_t *u, size_t *v);

/**
 * Whether `elements` have pairwise distinct subset sums.
 *
 * # Safety
 * `elements` must hold `len` values; `out` must be writable.
 */
enum ArxStatus arx_is_dss(const uint64_t *elements, size_t len, bool *out);

/**
 * Computes `ES(n)`. On `BudgetExhausted`, `lower` and `upper` bracket it.
 * `witness` may be null; otherwise it receives `n` elements with maximum `upper`.
 *
 * # Safety
 * `lower`, `upper` must be writable; `witness` null or valid for `n` writes.
 */
enum ArxStatus arx_es(size_t n,
                      uint64_t budget_ms,
                      uint64_t *lower,
                      uint64_t *upper,
                      uint64_t *witness);

/**
 * Checks an edge labeling; `ok` is false on injectivity or subset-sum failure.
 *
 * # Safety
 * `labels` must hold `len` values; `ok` must be writable.
 */
enum ArxStatus arx_verify(const struct ArxGraph *g, const uint64_t *labels, size_t len, bool *ok);

/**
 * Searches for an AR-labeling with labels in `1..=k`.
 * `labels` may be null; otherwise it must hold at least the edge count.
 *
 * # Safety
 * `g` must be a live handle; `result` writable; `labels` null or valid for `labels_len` writes.
 */
enum ArxStatus arx_find_labeling(const struct ArxGraph *g,
                                 uint64_t k,
                                 uint64_t budget_ms,
                                 uint32_t threads,
                                 enum ArxSearch *result,
                                 uint64_t *labels,
                                 size_t labels_len);

/**
 * Computes the AR-index. Returns `BudgetExhausted` with bounds in `out` when
 * the budget runs out. `labels` may be null; otherwise it receives the
 * witness when exact.
 *
 * # Safety
 * `g` must be a live handle; `out` writable; `labels` null or valid for `labels_len` writes.
 */
enum ArxStatus arx_ari(const struct ArxGraph *g,
                       uint64_t budget_ms,
                       uint32_t threads,
                       struct ArxAri *out,
                       uint64_t *labels,
                       size_t labels_len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ARINDEX_H */

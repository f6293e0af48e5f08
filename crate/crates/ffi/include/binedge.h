#ifndef BINEDGE_H
#define BINEDGE_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result codes shared by every exported function.
 */
typedef enum BeiStatus {
  BEI_STATUS_OK = 0,
  BEI_STATUS_NULL_POINTER = 1,
  BEI_STATUS_INVALID_INPUT = 2,
  BEI_STATUS_PARSE = 3,
  BEI_STATUS_LIMIT_EXCEEDED = 4,
  BEI_STATUS_HYPOTHESIS_FAILED = 5,
  BEI_STATUS_NOT_AN_EDGE = 6,
  BEI_STATUS_INTERNAL = 7,
  BEI_STATUS_PANIC = 8,
} BeiStatus;

/**
 * Opaque graph handle.
 */
typedef struct BeiGraph BeiGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *bei_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and must not be freed twice.
 */
void bei_string_free(char *s);

/**
 * Builds a graph on vertices `1..=n` from `edge_count` pairs stored flat in `edges`.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` values (or may be null when
 * `edge_count` is 0); `out` must be writable.
 */
enum BeiStatus bei_graph_new(size_t n,
                             const size_t *edges,
                             size_t edge_count,
                             struct BeiGraph **out);

/**
 * Parses `{"n": 4, "edges": [[1, 2], ...]}`.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum BeiStatus bei_graph_from_json(const char *json, struct BeiGraph **out);

/**
 * # Safety
 * `g` must come from `bei_graph_new` or `bei_graph_from_json` and must not be freed twice.
 */
void bei_graph_free(struct BeiGraph *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum BeiStatus bei_graph_vertex_count(const struct BeiGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum BeiStatus bei_graph_is_path(const struct BeiGraph *g, bool *out);

/**
 * Searches for a labeling under which the graph is closed. On success
 * `found` is set, and when true `sigma[0..n]` holds the new label of each vertex.
 *
 * # Safety
 * `g` must be a live handle; `sigma` must hold `n` values; `found` must be writable.
 */
enum BeiStatus bei_graph_closed_labeling(const struct BeiGraph *g, size_t *sigma, bool *found);

/**
 * Reduced Gröbner basis of the binomial edge ideal, one element per line.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum BeiStatus bei_groebner_basis(const struct BeiGraph *g, char **out);

/**
 * F-pure threshold of `S / In(J_G)`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum BeiStatus bei_fpt(const struct BeiGraph *g, size_t *out);

/**
 * Castelnuovo-Mumford regularity of `S / In(J_G)` over `F_p`, or over Q when `p` is 0.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum BeiStatus bei_regularity(const struct BeiGraph *g, uint64_t p, size_t *out);

/**
 * Fedder certificate for the current labeling as JSON. Unless `force` is set,
 * disconnected or non-closed labelings fail with `HypothesisFailed`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum BeiStatus bei_fedder_json(const struct BeiGraph *g, uint64_t p, bool force, char **out);

/**
 * Name of the field selected by `p` ("q" for 0), for diagnostics.
 *
 * # Safety
 * `out` must be writable.
 */
enum BeiStatus bei_field_name(uint64_t p, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BINEDGE_H */

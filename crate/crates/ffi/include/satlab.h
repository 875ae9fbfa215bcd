#ifndef SATLAB_H
#define SATLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SatlabMode {
  SATLAB_MODE_MIN = 0,
  SATLAB_MODE_MAX = 1,
} SatlabMode;

typedef enum SatlabMotif {
  SATLAB_MOTIF_MATCHING = 0,
  SATLAB_MOTIF_CLIQUE = 1,
  SATLAB_MOTIF_INDEPSET = 2,
} SatlabMotif;

// Status codes. Values 1 to 5 agree with the command-line exit codes.
typedef enum SatlabStatus {
  SATLAB_STATUS_OK = 0,
  SATLAB_STATUS_INVALID_ARGUMENT = 1,
  SATLAB_STATUS_PARSE_ERROR = 2,
  SATLAB_STATUS_OVERFLOW = 4,
  SATLAB_STATUS_BUDGET_EXCEEDED = 5,
  SATLAB_STATUS_DOMAIN_ERROR = 6,
  SATLAB_STATUS_NULL_POINTER = 7,
  SATLAB_STATUS_INTERNAL = 8,
} SatlabStatus;

// Opaque graph handle.
typedef struct SatlabGraph SatlabGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. The pointer is
// valid until the next failing call on the same thread.
const char *satlab_last_error(void);

// Parses one graph6 line (a `>>graph6<<` header and surrounding whitespace
// are accepted).
//
// # Safety
// `text` must be a valid NUL-terminated string and `out` a valid pointer.
enum SatlabStatus satlab_graph_from_graph6(const char *text, struct SatlabGraph **out);

// The split graph: vertices `0..q` form a clique joined to `n - q`
// independent vertices.
//
// # Safety
// `out` must be a valid pointer.
enum SatlabStatus satlab_graph_split(size_t n, size_t q, struct SatlabGraph **out);

// # Safety
// `out` must be a valid pointer.
enum SatlabStatus satlab_graph_empty(size_t n, struct SatlabGraph **out);

// Adds the edge `uv`. Adding an existing edge is a no-op.
//
// # Safety
// `g` must be a handle from this library.
enum SatlabStatus satlab_graph_add_edge(struct SatlabGraph *g, size_t u, size_t v);

// Releases a handle. NULL is ignored.
//
// # Safety
// `g` must be NULL or a handle from this library that has not been freed.
void satlab_graph_free(struct SatlabGraph *g);

// Vertex count, or 0 for NULL.
//
// # Safety
// `g` must be NULL or a live handle.
size_t satlab_graph_vertex_count(const struct SatlabGraph *g);

// Edge count, or 0 for NULL.
//
// # Safety
// `g` must be NULL or a live handle.
size_t satlab_graph_edge_count(const struct SatlabGraph *g);

// # Safety
// `g` must be a live handle and `out` a valid pointer. Free the result with
// [`satlab_string_free`].
enum SatlabStatus satlab_graph_to_graph6(const struct SatlabGraph *g, char **out);

// Canonical certificate as a graph6 string: equal strings if and only if
// the graphs are isomorphic.
//
// # Safety
// `g` must be a live handle and `out` a valid pointer. Free the result with
// [`satlab_string_free`].
enum SatlabStatus satlab_graph_certificate(const struct SatlabGraph *g, char **out);

// # Safety
// `a` and `b` must be live handles and `out` a valid pointer.
enum SatlabStatus satlab_is_isomorphic(const struct SatlabGraph *a,
                                       const struct SatlabGraph *b,
                                       bool *out);

// Exact number of copies of the motif, split into high and low 64-bit
// halves of a 128-bit value.
//
// # Safety
// `g` must be a live handle; `hi` and `lo` valid pointers.
enum SatlabStatus satlab_count(const struct SatlabGraph *g,
                               enum SatlabMotif kind,
                               size_t size,
                               uint64_t *hi,
                               uint64_t *lo);

// Exact number of copies of the motif as a decimal string.
//
// # Safety
// `g` must be a live handle and `out` a valid pointer. Free the result with
// [`satlab_string_free`].
enum SatlabStatus satlab_count_decimal(const struct SatlabGraph *g,
                                       enum SatlabMotif kind,
                                       size_t size,
                                       char **out);

// Whether the graph is `K_s`-saturated.
//
// # Safety
// `g` must be a live handle and `out` a valid pointer.
enum SatlabStatus satlab_is_saturated(const struct SatlabGraph *g, size_t s, bool *out);

// Exhaustive extremal search for `n <= 8`, returned as JSON. `shards` of 0
// uses the available parallelism.
//
// # Safety
// `out` must be a valid pointer. Free the result with
// [`satlab_string_free`].
enum SatlabStatus satlab_extremal_search_json(size_t n,
                                              size_t s,
                                              enum SatlabMotif kind,
                                              size_t size,
                                              enum SatlabMode mode,
                                              size_t shards,
                                              char **out);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must be NULL or a string from this library that has not been freed.
void satlab_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SATLAB_H */

#ifndef SEPDEC_H
#define SEPDEC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Values accepted by the `algo` parameters.
 */
enum SepdecAlgo
#ifdef __cplusplus
  : uint32_t
#endif // __cplusplus
 {
  SEPDEC_ALGO_FOREST_JOIN = 0,
  SEPDEC_ALGO_FOREST_JOIN_DELTA = 1,
  SEPDEC_ALGO_MAX_WEIGHT = 2,
  SEPDEC_ALGO_MIN_WEIGHT = 3,
  SEPDEC_ALGO_NAIVE = 4,
};
#ifndef __cplusplus
typedef uint32_t SepdecAlgo;
#endif // __cplusplus

/*
 Values accepted by [`sepdec_decomposition_render`].
 */
enum SepdecFormat
#ifdef __cplusplus
  : uint32_t
#endif // __cplusplus
 {
  SEPDEC_FORMAT_DOT = 0,
  SEPDEC_FORMAT_JSON = 1,
  SEPDEC_FORMAT_TEXT = 2,
};
#ifndef __cplusplus
typedef uint32_t SepdecFormat;
#endif // __cplusplus

/*
 Result of a fallible call. The first four values match the exit codes of
 the `sepdec` binary.
 */
typedef enum SepdecStatus {
  SEPDEC_STATUS_OK = 0,
  SEPDEC_STATUS_PARSE_ERROR = 1,
  SEPDEC_STATUS_DOMAIN_ERROR = 2,
  /*
   The result was produced but disagrees with the reference computation.
   */
  SEPDEC_STATUS_VERIFY_MISMATCH = 3,
  SEPDEC_STATUS_INVALID_ARGUMENT = 4,
  SEPDEC_STATUS_NULL_POINTER = 5,
  SEPDEC_STATUS_PANIC = 6,
} SepdecStatus;

typedef struct SepdecDecomposition SepdecDecomposition;

typedef struct SepdecGraph SepdecGraph;

typedef struct SepdecHypergraph SepdecHypergraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Library version as a static string.
 */
const char *sepdec_version(void);

/*
 Message of the last failed call on this thread, or null. Valid until the
 next failing call on the same thread.
 */
const char *sepdec_last_error(void);

/*
 Releases a string returned by this library.
 */
void sepdec_string_free(char *s);

/*
 An empty graph.
 */
struct SepdecGraph *sepdec_graph_new(void);

/*
 Parses an edge list: one edge `u v` or isolated vertex `v` per line,
 `#` comments.
 */
enum SepdecStatus sepdec_graph_parse(const char *text, struct SepdecGraph **out);

/*
 Adds a vertex unless present and writes its index to `index` (may be null).
 */
enum SepdecStatus sepdec_graph_add_vertex(struct SepdecGraph *g,
                                          const char *name,
                                          uintptr_t *index);

/*
 Adds the edge `uv`, creating missing endpoints.
 */
enum SepdecStatus sepdec_graph_add_edge(struct SepdecGraph *g, const char *u, const char *v);

/*
 Number of vertices; 0 for a null handle.
 */
uintptr_t sepdec_graph_vertex_count(const struct SepdecGraph *g);

/*
 Number of edges; 0 for a null handle.
 */
uintptr_t sepdec_graph_edge_count(const struct SepdecGraph *g);

enum SepdecStatus sepdec_graph_is_chordal(const struct SepdecGraph *g, bool *out);

void sepdec_graph_free(struct SepdecGraph *g);

/*
 Parses a hypergraph: one hyperedge per line, vertex names separated by
 whitespace.
 */
enum SepdecStatus sepdec_hypergraph_parse(const char *text, struct SepdecHypergraph **out);

uintptr_t sepdec_hypergraph_vertex_count(const struct SepdecHypergraph *h);

uintptr_t sepdec_hypergraph_hyperedge_count(const struct SepdecHypergraph *h);

enum SepdecStatus sepdec_hypergraph_is_alpha_acyclic(const struct SepdecHypergraph *h, bool *out);

void sepdec_hypergraph_free(struct SepdecHypergraph *h);

/*
 The atoms of `g`, one node per atom and no edges.
 */
enum SepdecStatus sepdec_atoms(const struct SepdecGraph *g, struct SepdecDecomposition **out);

/*
 An atom tree per connected component. With `verify`, each tree is checked
 and `VerifyMismatch` is returned (with `*out` still set) on failure.
 */
enum SepdecStatus sepdec_atom_tree(const struct SepdecGraph *g,
                                   bool verify,
                                   struct SepdecDecomposition **out);

/*
 The atom graph of each connected component. `algo` is any `SepdecAlgo`
 except `MIN_WEIGHT`. With `hypergraph_convention`, atoms of different
 components are joined by empty separators. With `verify`, the result is
 compared with the naive construction.
 */
enum SepdecStatus sepdec_atom_graph(const struct SepdecGraph *g,
                                    uint32_t algo,
                                    bool hypergraph_convention,
                                    bool verify,
                                    struct SepdecDecomposition **out);

/*
 The union join graph of an alpha-acyclic hypergraph. `algo` is
 `FOREST_JOIN`, `MAX_WEIGHT` or `MIN_WEIGHT`. With `verify`, the result is
 compared with the union of all join trees.
 */
enum SepdecStatus sepdec_union_join(const struct SepdecHypergraph *h,
                                    uint32_t algo,
                                    bool verify,
                                    struct SepdecDecomposition **out);

/*
 Number of vertices of the decomposed input; 0 for a null handle.
 */
uintptr_t sepdec_decomposition_vertex_count(const struct SepdecDecomposition *d);

uintptr_t sepdec_decomposition_node_count(const struct SepdecDecomposition *d);

uintptr_t sepdec_decomposition_edge_count(const struct SepdecDecomposition *d);

uintptr_t sepdec_decomposition_component_count(const struct SepdecDecomposition *d);

/*
 Name of vertex `v`, or null when out of range. Owned by `d`.
 */
const char *sepdec_decomposition_vertex_name(const struct SepdecDecomposition *d, uintptr_t v);

/*
 Copies up to `cap` vertex indices of node `i`, ascending, into `buf` and
 writes the node size to `len`. Call with `cap == 0` to query the size.
 */
enum SepdecStatus sepdec_decomposition_node(const struct SepdecDecomposition *d,
                                            uintptr_t i,
                                            uintptr_t *buf,
                                            uintptr_t cap,
                                            uintptr_t *len);

/*
 Connected component of the input that node `i` belongs to.
 */
enum SepdecStatus sepdec_decomposition_node_component(const struct SepdecDecomposition *d,
                                                      uintptr_t i,
                                                      uintptr_t *out);

/*
 Endpoints of edge `i` as node indices, `a < b`.
 */
enum SepdecStatus sepdec_decomposition_edge(const struct SepdecDecomposition *d,
                                            uintptr_t i,
                                            uintptr_t *a,
                                            uintptr_t *b);

/*
 Renders `d` as a `SepdecFormat`. Release `*out` with `sepdec_string_free`.
 */
enum SepdecStatus sepdec_decomposition_render(const struct SepdecDecomposition *d,
                                              uint32_t format,
                                              char **out);

void sepdec_decomposition_free(struct SepdecDecomposition *d);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEPDEC_H */

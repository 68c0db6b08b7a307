#ifndef BCHROMATIC_H
#define BCHROMATIC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BcStatus {
  BC_STATUS_OK = 0,
  /**
   * Null pointer, bad UTF-8 or an out-of-range argument.
   */
  BC_STATUS_INVALID_ARGUMENT = 1,
  /**
   * Malformed graph text or generator spec.
   */
  BC_STATUS_PARSE = 2,
  /**
   * The graph does not meet the requested strategy's hypothesis.
   */
  BC_STATUS_HYPOTHESIS = 3,
  /**
   * An internal invariant failed.
   */
  BC_STATUS_INTERNAL = 4,
  /**
   * The graph exceeds the exact-search ceiling.
   */
  BC_STATUS_ORACLE_REFUSED = 5,
  /**
   * A Rust panic was caught at the boundary.
   */
  BC_STATUS_PANIC = 6,
} BcStatus;

typedef enum BcStrategy {
  BC_STRATEGY_AUTO = 0,
  BC_STRATEGY_LOWER_BOUND = 1,
  BC_STRATEGY_DIAMETER = 2,
  BC_STRATEGY_CONNECTIVITY = 3,
} BcStrategy;

/**
 * Opaque coloring handle.
 */
typedef struct BcColoring BcColoring;

/**
 * Opaque graph handle.
 */
typedef struct BcGraph BcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread; empty if none. The
 * pointer stays valid until the next failing call on this thread.
 */
const char *bc_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void bc_string_free(char *s);

/**
 * Parses the `n m` header plus `m` lines of `u v` format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BcStatus bc_graph_from_edge_list(const char *text, struct BcGraph **out);

/**
 * Parses DIMACS `p edge` / `e u v` text (1-based vertices).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BcStatus bc_graph_from_dimacs(const char *text, struct BcGraph **out);

/**
 * Builds a graph on `n` vertices from `m` pairs stored flat in `edges`
 * (`edges[2i]`, `edges[2i+1]`, 0-based).
 *
 * # Safety
 * `edges` must point to `2 * m` readable values (or be null when `m` is
 * 0) and `out` must be valid.
 */
enum BcStatus bc_graph_from_edges(size_t n, const size_t *edges, size_t m, struct BcGraph **out);

/**
 * Generator spec as accepted by the CLI: `petersen`, `heawood`,
 * `kdd:<d>`, `cycle:<n>` or `random:<d>,<n>`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BcStatus bc_graph_generate(const char *spec, uint64_t seed, struct BcGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library, freed once.
 */
void bc_graph_free(struct BcGraph *g);

/**
 * Returns 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t bc_graph_vertex_count(const struct BcGraph *g);

/**
 * Returns 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t bc_graph_edge_count(const struct BcGraph *g);

/**
 * Structural report as JSON (same keys as `bchromatic analyze`).
 *
 * # Safety
 * `g` must be a live handle and `out_json` a valid pointer.
 */
enum BcStatus bc_analyze_json(const struct BcGraph *g, char **out_json);

/**
 * Exact b-chromatic number; refuses graphs above `max_vertices`.
 * `out_witness` may be null.
 *
 * # Safety
 * `g` must be a live handle, `out_phi` valid, `out_witness` null or valid.
 */
enum BcStatus bc_exact_phi(const struct BcGraph *g,
                           size_t max_vertices,
                           size_t *out_phi,
                           struct BcColoring **out_witness);

/**
 * Constructs and verifies a b-coloring with the given strategy.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum BcStatus bc_color(const struct BcGraph *g, enum BcStrategy strategy, struct BcColoring **out);

/**
 * # Safety
 * `c` must be null or a handle from this library, freed once.
 */
void bc_coloring_free(struct BcColoring *c);

/**
 * Number of colors used; 0 for a null handle.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
size_t bc_coloring_palette(const struct BcColoring *c);

/**
 * Number of vertices colored; 0 for a null handle.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
size_t bc_coloring_len(const struct BcColoring *c);

/**
 * Copies the colors into `buf`, which must hold `bc_coloring_len(c)`
 * values.
 *
 * # Safety
 * `c` must be a live handle and `buf` writable for `len` values.
 */
enum BcStatus bc_coloring_colors(const struct BcColoring *c, size_t *buf, size_t len);

/**
 * Certificate JSON (`palette`, `assignment`, `dominating`, `strategy`).
 *
 * # Safety
 * `g` and `c` must be live handles and `out_json` a valid pointer.
 */
enum BcStatus bc_coloring_certificate_json(const struct BcGraph *g,
                                           const struct BcColoring *c,
                                           char **out_json);

/**
 * Checks whether `colors` (one 1-based color per vertex) is a b-coloring.
 * `out_color_count` may be null.
 *
 * # Safety
 * `g` must be a live handle, `colors` readable for `len` values and
 * `out_is_b_coloring` valid.
 */
enum BcStatus bc_verify(const struct BcGraph *g,
                        const size_t *colors,
                        size_t len,
                        bool *out_is_b_coloring,
                        size_t *out_color_count);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BCHROMATIC_H */

#ifndef BEI_H
#define BEI_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by all entry points.
 */
typedef enum BeiStatus {
  BEI_STATUS_OK = 0,
  BEI_STATUS_NULL_POINTER = 1,
  BEI_STATUS_INVALID_UTF8 = 2,
  BEI_STATUS_PARSE_ERROR = 3,
  BEI_STATUS_INVALID_ARGUMENT = 4,
  BEI_STATUS_NOT_CHORDAL = 5,
  BEI_STATUS_NOT_GBG = 6,
  BEI_STATUS_RESOURCE_LIMIT = 7,
  /**
   * The verification report was produced and contains a failed check.
   */
  BEI_STATUS_VERIFY_FAILED = 8,
  BEI_STATUS_IO = 9,
  BEI_STATUS_INTERNAL = 10,
} BeiStatus;

/**
 * Opaque graph handle.
 */
typedef struct BeiGraph BeiGraph;

/**
 * Oracle settings. Obtain defaults from `bei_oracle_options_default`.
 */
typedef struct BeiOracleOptions {
  /**
   * 0 for the rationals, otherwise a prime below 2^32.
   */
  uint64_t characteristic;
  /**
   * Largest admissible ring size `2n`.
   */
  size_t max_vars;
  bool prune;
  /**
   * Wall-clock limit in seconds; 0 disables it.
   */
  double time_limit_secs;
  /**
   * Limit on examined subsets; 0 disables it.
   */
  uint64_t max_subsets;
} BeiOracleOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Default oracle settings: rationals, the built-in variable cap, pruning on
 * and no time or subset limit.
 */
struct BeiOracleOptions bei_oracle_options_default(void);

/**
 * Parses the text graph format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum BeiStatus bei_graph_parse(const char *text, struct BeiGraph **out);

/**
 * Builds a graph on vertices `1..=n` from `edge_count` pairs stored
 * consecutively in `edges`.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` values (it may be null when
 * `edge_count` is 0) and `out` must be writable.
 */
enum BeiStatus bei_graph_from_edges(size_t n,
                                    const size_t *edges,
                                    size_t edge_count,
                                    struct BeiGraph **out);

/**
 * Random connected generalized block graph, deterministic in `seed`.
 *
 * # Safety
 * `out` must be writable.
 */
enum BeiStatus bei_generate(uint64_t seed, size_t facets, size_t max_clique, struct BeiGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and must not be used afterwards.
 */
void bei_graph_free(struct BeiGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t bei_graph_vertex_count(const struct BeiGraph *g);

/**
 * Serializes the graph in the text format.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum BeiStatus bei_graph_to_text(const struct BeiGraph *g, char **out);

/**
 * Invariants, bounds and predictions as JSON.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum BeiStatus bei_analyze_json(const struct BeiGraph *g, char **out);

/**
 * Decomposition at glue vertices as JSON. Fails with `NOT_CHORDAL` on
 * graphs that are not chordal.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum BeiStatus bei_decompose_json(const struct BeiGraph *g, char **out);

/**
 * Betti table of `S/in(J_G)` as JSON. `options` may be null for defaults.
 *
 * # Safety
 * `g` must be a live handle, `options` null or valid, `out` writable.
 */
enum BeiStatus bei_oracle_json(const struct BeiGraph *g,
                               const struct BeiOracleOptions *options,
                               char **out);

/**
 * Verification report as JSON. The report is written even when a check
 * fails, in which case the status is `VERIFY_FAILED`.
 *
 * # Safety
 * `g` must be a live handle, `options` null or valid, `out` writable.
 */
enum BeiStatus bei_verify_json(const struct BeiGraph *g,
                               const struct BeiOracleOptions *options,
                               char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and must not be used afterwards.
 */
void bei_string_free(char *s);

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *bei_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BEI_H */

#ifndef BIPINFLUENCE_H
#define BIPINFLUENCE_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Bumped on any incompatible change to this interface.
 */
#define BIP_ABI_VERSION 1

typedef enum BipAnomaly {
  BIP_ANOMALY_BORN = 0,
  BIP_ANOMALY_VANISH = 1,
  BIP_ANOMALY_GROW = 2,
  BIP_ANOMALY_MERGE = 3,
  BIP_ANOMALY_SPLIT = 4,
  BIP_ANOMALY_SHRINK = 5,
  BIP_ANOMALY_UNCHANGED = 6,
} BipAnomaly;

typedef enum BipDirection {
  BIP_DIRECTION_TOP = 0,
  BIP_DIRECTION_BOTTOM = 1,
} BipDirection;

typedef enum BipFormat {
  BIP_FORMAT_TSV = 0,
  BIP_FORMAT_KONECT = 1,
} BipFormat;

typedef enum BipMeasure {
  BIP_MEASURE_HH = 0,
  BIP_MEASURE_DEGREE = 1,
  BIP_MEASURE_BETWEENNESS = 2,
  BIP_MEASURE_CLOSENESS = 3,
  BIP_MEASURE_EIGENVECTOR = 4,
} BipMeasure;

typedef enum BipMode {
  BIP_MODE_A = 0,
  BIP_MODE_B = 1,
} BipMode;

typedef enum BipStatus {
  BIP_STATUS_OK = 0,
  BIP_STATUS_NULL_POINTER = 1,
  BIP_STATUS_INVALID_UTF8 = 2,
  BIP_STATUS_IO = 3,
  BIP_STATUS_PARSE = 4,
  BIP_STATUS_INVALID_ARGUMENT = 5,
  BIP_STATUS_UNKNOWN_NODE = 6,
  BIP_STATUS_EMPTY_GRAPH = 7,
  BIP_STATUS_UNDEFINED = 8,
  BIP_STATUS_OUT_OF_RANGE = 9,
  BIP_STATUS_INTERNAL = 10,
} BipStatus;

/**
 * Outcome of one node-removal experiment.
 */
typedef struct BipAblationReport BipAblationReport;

/**
 * A bipartite graph.
 */
typedef struct BipGraph BipGraph;

/**
 * Scores of one measure. Rows keep the node order of the graph.
 */
typedef struct BipScoreTable BipScoreTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

uint32_t bip_abi_version(void);

/**
 * Message for the last failed call on this thread, or null after a
 * successful call. Valid until the next call on the same thread.
 */
const char *bip_last_error_message(void);

/**
 * Reads an edge list from `path`.
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be writable.
 */
enum BipStatus bip_graph_load(const char *path, enum BipFormat format, struct BipGraph **out);

/**
 * The embedded Southern Women network: 18 women (mode A), 14 events (mode B).
 *
 * # Safety
 * `out` must be writable.
 */
enum BipStatus bip_graph_southern_women(struct BipGraph **out);

/**
 * Builds a graph from `n` edges `(a_labels[i], b_labels[i])`.
 * Duplicate edges are dropped.
 *
 * # Safety
 * Both arrays must hold `n` NUL-terminated strings; `out` must be writable.
 */
enum BipStatus bip_graph_from_edges(const char *const *a_labels,
                                    const char *const *b_labels,
                                    size_t n,
                                    struct BipGraph **out);

/**
 * # Safety
 * `g` must come from a `bip_graph_*` constructor and not be used afterwards.
 */
void bip_graph_free(struct BipGraph *g);

/**
 * Number of nodes in `mode`.
 *
 * # Safety
 * `g` must be a live graph; `out` must be writable.
 */
enum BipStatus bip_graph_node_count(const struct BipGraph *g, enum BipMode mode, size_t *out);

/**
 * # Safety
 * `g` must be a live graph; `out` must be writable.
 */
enum BipStatus bip_graph_edge_count(const struct BipGraph *g, size_t *out);

/**
 * Number of communities in the projection onto `onto`.
 *
 * # Safety
 * `g` must be a live graph; `out` must be writable.
 */
enum BipStatus bip_community_count(const struct BipGraph *g,
                                   enum BipMode onto,
                                   size_t min_size,
                                   size_t *out);

/**
 * Scores the nodes of the mode opposite `onto`. `min_size` only affects
 * the H.H measure.
 *
 * # Safety
 * `g` must be a live graph; `out` must be writable.
 */
enum BipStatus bip_score(const struct BipGraph *g,
                         enum BipMode onto,
                         enum BipMeasure measure,
                         size_t min_size,
                         struct BipScoreTable **out);

/**
 * # Safety
 * `t` must be a live table.
 */
size_t bip_score_table_len(const struct BipScoreTable *t);

/**
 * Row `index` of the table. `label` stays valid until the table is freed.
 * Any of the output pointers may be null.
 *
 * # Safety
 * `t` must be a live table; non-null outputs must be writable.
 */
enum BipStatus bip_score_table_get(const struct BipScoreTable *t,
                                   size_t index,
                                   const char **label,
                                   double *raw,
                                   double *normalized);

/**
 * # Safety
 * `t` must come from `bip_score` and not be used afterwards.
 */
void bip_score_table_free(struct BipScoreTable *t);

/**
 * Removes the `fraction` top- or bottom-scoring nodes of the mode opposite
 * `onto` by `measure` and classifies how the communities changed.
 *
 * # Safety
 * `g` must be a live graph; `out` must be writable.
 */
enum BipStatus bip_ablate(const struct BipGraph *g,
                          enum BipMode onto,
                          enum BipMeasure measure,
                          double fraction,
                          enum BipDirection direction,
                          size_t min_size,
                          struct BipAblationReport **out);

/**
 * Fraction of the original communities that changed.
 *
 * # Safety
 * `r` must be a live report.
 */
double bip_ablation_change_rate(const struct BipAblationReport *r);

/**
 * Number of communities with change type `kind`.
 *
 * # Safety
 * `r` must be a live report.
 */
size_t bip_ablation_count(const struct BipAblationReport *r, enum BipAnomaly kind);

/**
 * # Safety
 * `r` must be a live report.
 */
size_t bip_ablation_before_count(const struct BipAblationReport *r);

/**
 * # Safety
 * `r` must be a live report.
 */
size_t bip_ablation_after_count(const struct BipAblationReport *r);

/**
 * # Safety
 * `r` must be a live report.
 */
size_t bip_ablation_removed_len(const struct BipAblationReport *r);

/**
 * Label of the `index`-th removed node, or null if out of range. Valid
 * until the report is freed.
 *
 * # Safety
 * `r` must be a live report.
 */
const char *bip_ablation_removed(const struct BipAblationReport *r, size_t index);

/**
 * # Safety
 * `r` must come from `bip_ablate` and not be used afterwards.
 */
void bip_ablation_free(struct BipAblationReport *r);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BIPINFLUENCE_H */

#ifndef MLST_H
#define MLST_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MlstStatus {
  MLST_STATUS_OK = 0,
  MLST_STATUS_NULL_POINTER = 1,
  MLST_STATUS_INVALID_ARGUMENT = 2,
  MLST_STATUS_INVALID_GRAPH = 3,
  MLST_STATUS_PARSE = 4,
  MLST_STATUS_IO = 5,
  MLST_STATUS_WIDTH_MISMATCH = 6,
  MLST_STATUS_PARAM_OUT_OF_RANGE = 7,
  MLST_STATUS_TOO_MANY_LABELS = 8,
  MLST_STATUS_INFEASIBLE = 9,
  MLST_STATUS_NOT_REACHED = 10,
  MLST_STATUS_PANIC = 11,
  MLST_STATUS_INTERNAL = 12,
} MlstStatus;

typedef enum MlstTieBreak {
  MLST_TIE_BREAK_LOWEST_INDEX = 0,
  MLST_TIE_BREAK_HIGHEST_INDEX = 1,
  MLST_TIE_BREAK_SEEDED_RANDOM = 2,
} MlstTieBreak;

// Opaque graph handle.
typedef struct MlstGraph MlstGraph;

// Opaque result of one evolutionary run.
typedef struct MlstRunResult MlstRunResult;

// Settings for [`mlst_run_ea`] and [`mlst_run_gsemo`].
typedef struct MlstRunConfig {
  uint64_t budget;
  uint64_t seed;
  // `k` bytes, or NULL for a uniformly random start.
  const uint8_t *init;
  size_t init_len;
  // Stop once a feasible solution has at most `target` labels.
  bool has_target;
  size_t target;
} MlstRunConfig;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL after a
// successful one. Valid until the next `mlst_*` call on the same thread.
const char *mlst_last_error(void);

// Builds a graph from `m` triples `(u, v, label)` stored flat in `edges`
// (`3 * m` values).
//
// # Safety
// `edges` must point to `3 * m` readable values; `out` must be writable.
enum MlstStatus mlst_graph_new(size_t n,
                               size_t k,
                               const size_t *edges,
                               size_t m,
                               struct MlstGraph **out);

// Reads an instance file.
//
// # Safety
// `path` must be a NUL-terminated string; `out` must be writable.
enum MlstStatus mlst_graph_load(const char *path, struct MlstGraph **out);

// Writes `g` in the canonical instance format.
//
// # Safety
// `g` must be a live handle; `path` a NUL-terminated string.
enum MlstStatus mlst_graph_save(const struct MlstGraph *g, const char *path);

// Releases a graph. NULL is ignored.
//
// # Safety
// `g` must be NULL or a handle not yet freed.
void mlst_graph_free(struct MlstGraph *g);

// # Safety
// `g` must be NULL or a live handle.
size_t mlst_graph_node_count(const struct MlstGraph *g);

// # Safety
// `g` must be NULL or a live handle.
size_t mlst_graph_label_count(const struct MlstGraph *g);

// # Safety
// `g` must be NULL or a live handle.
size_t mlst_graph_edge_count(const struct MlstGraph *g);

// # Safety
// `g` must be NULL or a live handle.
size_t mlst_graph_max_label_frequency(const struct MlstGraph *g);

// Optimum recorded by the generator, if the graph came from one.
// Returns `MLST_STATUS_NOT_REACHED` when unknown.
//
// # Safety
// `g` must be a live handle; `out` writable.
enum MlstStatus mlst_graph_known_opt(const struct MlstGraph *g, size_t *out);

// # Safety
// `out` must be writable.
enum MlstStatus mlst_gen_g1(size_t k, struct MlstGraph **out);

// # Safety
// `out` must be writable.
enum MlstStatus mlst_gen_g2(size_t k, struct MlstGraph **out);

// # Safety
// `out` must be writable.
enum MlstStatus mlst_gen_g3(size_t b, struct MlstGraph **out);

// # Safety
// `out` must be writable.
enum MlstStatus mlst_gen_g_prime(size_t a, size_t k, struct MlstGraph **out);

// # Safety
// `out` must be writable.
enum MlstStatus mlst_gen_random(size_t n,
                                size_t m,
                                size_t k,
                                size_t b,
                                uint64_t seed,
                                struct MlstGraph **out);

// Components of the subgraph using only the labels selected in `bits`.
//
// # Safety
// `g` must be a live handle, `bits` must hold `len` bytes, `out` writable.
enum MlstStatus mlst_component_count(const struct MlstGraph *g,
                                     const uint8_t *bits,
                                     size_t len,
                                     size_t *out);

// `(c - 1) * k^2 + |X|`. Fails with `MLST_STATUS_INVALID_ARGUMENT` if the
// value does not fit in 64 bits.
//
// # Safety
// As for [`mlst_component_count`].
enum MlstStatus mlst_scalar_fitness(const struct MlstGraph *g,
                                    const uint8_t *bits,
                                    size_t len,
                                    uint64_t *out);

// Exact optimum by enumeration. `k_limit = 0` uses the default limit (24).
// `witness` receives `k` bytes.
//
// # Safety
// `g` live; `opt` writable; `witness` writable for `witness_len` bytes.
enum MlstStatus mlst_oracle(const struct MlstGraph *g,
                            size_t k_limit,
                            size_t *opt,
                            uint8_t *witness,
                            size_t witness_len);

// Greedy MVCA; `contract` selects the supernode-contraction variant.
//
// # Safety
// `g` live; `out` writable for `len` bytes.
enum MlstStatus mlst_mvca(const struct MlstGraph *g,
                          enum MlstTieBreak tie,
                          uint64_t tie_seed,
                          bool contract,
                          uint8_t *out,
                          size_t len);

// Runs the (1+1) EA.
//
// # Safety
// `g` live; `config` readable (its `init` holding `init_len` bytes when not
// NULL); `out` writable.
enum MlstStatus mlst_run_ea(const struct MlstGraph *g,
                            const struct MlstRunConfig *config,
                            struct MlstRunResult **out);

// Runs GSEMO.
//
// # Safety
// As for [`mlst_run_ea`].
enum MlstStatus mlst_run_gsemo(const struct MlstGraph *g,
                               const struct MlstRunConfig *config,
                               struct MlstRunResult **out);

// Releases a run result. NULL is ignored.
//
// # Safety
// `r` must be NULL or a result not yet freed.
void mlst_run_result_free(struct MlstRunResult *r);

// # Safety
// `r` must be NULL or a live result.
uint64_t mlst_run_result_iterations(const struct MlstRunResult *r);

// Components of the best solution found.
//
// # Safety
// `r` must be NULL or a live result.
size_t mlst_run_result_components(const struct MlstRunResult *r);

// Labels in the best solution found (feasible or not).
//
// # Safety
// `r` must be NULL or a live result.
size_t mlst_run_result_labels_used(const struct MlstRunResult *r);

// Iteration of the first feasible solution; `MLST_STATUS_NOT_REACHED` if
// the run never found one.
//
// # Safety
// `r` live; `out` writable.
enum MlstStatus mlst_run_result_first_feasible(const struct MlstRunResult *r, uint64_t *out);

// Copies the best solution into `out` (`len` must equal `k`).
//
// # Safety
// `r` live; `out` writable for `len` bytes.
enum MlstStatus mlst_run_result_best(const struct MlstRunResult *r, uint8_t *out, size_t len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MLST_H */

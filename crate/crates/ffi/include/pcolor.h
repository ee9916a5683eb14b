#ifndef PCOLOR_H
#define PCOLOR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum PcStatus {
  PC_STATUS_OK = 0,
  PC_STATUS_NULL_POINTER = 1,
  PC_STATUS_INVALID_UTF8 = 2,
  PC_STATUS_PARSE = 3,
  PC_STATUS_ORDER_TOO_LARGE = 4,
  PC_STATUS_INVALID_ARGUMENT = 5,
  PC_STATUS_BUFFER_TOO_SMALL = 6,
  PC_STATUS_INTERNAL = 7,
} PcStatus;

typedef enum PcUniverse {
  PC_UNIVERSE_VERTEX_CRITICAL = 0,
  PC_UNIVERSE_CRITICAL = 1,
} PcUniverse;

// Opaque graph handle.
typedef struct PcGraph PcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after success.
// The pointer stays valid until the next call on this thread.
const char *pc_last_error_message(void);

// # Safety
// `g6` must be a nul-terminated string and `out` writable.
enum PcStatus pc_graph_from_graph6(const char *g6, struct PcGraph **out);

// Edge-list text: optional `n <order>` line, then one `u v` pair per line.
//
// # Safety
// `edges` must be a nul-terminated string and `out` writable.
enum PcStatus pc_graph_from_edge_list(const char *edges, struct PcGraph **out);

// Generates a family member from its id, e.g. `"F1(l=5)"` or `"H7"`.
//
// # Safety
// `spec` must be a nul-terminated string and `out` writable.
enum PcStatus pc_graph_from_family(const char *spec, struct PcGraph **out);

// # Safety
// `g` must come from this library and not be used afterwards. Null is ignored.
void pc_graph_free(struct PcGraph *g);

// # Safety
// `g` must be a live handle or null (which yields 0).
size_t pc_graph_order(const struct PcGraph *g);

// # Safety
// `g` must be a live handle or null (which yields 0).
size_t pc_graph_size(const struct PcGraph *g);

// # Safety
// `g` must be a live handle and `out` writable.
enum PcStatus pc_graph_to_graph6(const struct PcGraph *g, char **out);

// # Safety
// `s` must come from this library and not be used afterwards. Null is ignored.
void pc_string_free(char *s);

// Packing chromatic number. When `colors` is non-null it receives a
// witness colouring and must hold `pc_graph_order(g)` entries.
//
// # Safety
// `g` must be a live handle, `value` writable, `colors` null or `len` long.
enum PcStatus pc_chi_rho(const struct PcGraph *g, uint32_t *value, uint32_t *colors, size_t len);

// Searches for a `k`-packing colouring; `found` reports the outcome.
//
// # Safety
// `g` must be a live handle, `found` writable, `colors` null or `len` long.
enum PcStatus pc_find_coloring(const struct PcGraph *g,
                               uint32_t k,
                               bool *found,
                               uint32_t *colors,
                               size_t len);

// # Safety
// `g` must be a live handle and `out` writable.
enum PcStatus pc_is_k_vertex_critical(const struct PcGraph *g, uint32_t k, bool *out);

// Deletion sweeps; any of the out pointers may be null.
//
// # Safety
// `g` must be a live handle; non-null out pointers must be writable.
enum PcStatus pc_analyze(const struct PcGraph *g,
                         uint32_t *chi,
                         bool *vertex_critical,
                         bool *subgraph_critical);

// Structural recognition of packing chromatic number 3. On acceptance,
// `parts` (if non-null) receives the part index 0..=7 of every vertex.
//
// # Safety
// `g` must be a live handle, `accepted` writable, `parts` null or `len` long.
enum PcStatus pc_recognize_g3(const struct PcGraph *g, bool *accepted, uint8_t *parts, size_t len);

// Space-separated family ids matching `g`; empty when none match.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum PcStatus pc_classify(const struct PcGraph *g, enum PcUniverse universe, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PCOLOR_H */

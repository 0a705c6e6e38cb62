/* graphfp: graph fingerprints from neighborhood-aggregation labelings.
 *
 * C interface over the core library: opaque graph handles, status codes,
 * and thread-local error messages. All strings returned through `char**`
 * out-parameters are heap-allocated and must be released with
 * gfp_string_free().
 */
#ifndef GRAPHFP_H
#define GRAPHFP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gfp_graph gfp_graph;

typedef enum {
  GFP_OK = 0,
  GFP_ERR_ARGUMENT = 1,    /* invalid parameter or precondition */
  GFP_ERR_FORMAT = 2,      /* malformed graph input */
  GFP_ERR_UNSUPPORTED = 3, /* feature not representable (e.g. loops in graph6) */
  GFP_ERR_STORE = 4,       /* index store missing, corrupt, or incompatible */
  GFP_ERR_INTERNAL = 5
} gfp_status;

/* Library and hash-scheme version, e.g. "graphfp 1.0 hash v1". */
const char* gfp_version(void);

/* Message for the most recent failure on the calling thread. */
const char* gfp_last_error(void);

void gfp_string_free(char* s);

/* ---- graphs ---- */

/* format: "graph6", "sparse6", or "edgelist". */
gfp_status gfp_graph_parse(const char* bytes, size_t len, const char* format,
                           gfp_graph** out);
gfp_status gfp_graph_serialize(const gfp_graph* g, const char* format, char** out);

/* Named fixture from the bundled catalog (e.g. "shrikhande", "rook44"). */
gfp_status gfp_fixture(const char* name, gfp_graph** out);
/* Newline-separated catalog names. */
gfp_status gfp_fixture_names(char** out);

void gfp_graph_free(gfp_graph* g);
int gfp_graph_node_count(const gfp_graph* g);
long gfp_graph_edge_count(const gfp_graph* g);

/* ---- fingerprints and comparison ---- */

/* method: "s0".."s9" or "t0".."t9"; mode: "exact" or "hashed".
 * The output line is `family k iters mode hashver digest64hex [widehex]`. */
gfp_status gfp_fingerprint(const gfp_graph* g, const char* method, const char* mode,
                           int wide, int jobs, char** out_line);

/* method: "w", "sK", or "tK". mode NULL defaults to "exact"; hashed-mode
 * equality is wide-digest confirmed. *out_equivalent is 1 or 0. */
gfp_status gfp_compare(const gfp_graph* a, const gfp_graph* b, const char* method,
                       const char* mode, int jobs, int* out_equivalent);

/* ---- fingerprint index ---- */

/* Writes a new store at store_path containing one record per graph.
 * sources may be NULL (records then carry an empty source field). */
gfp_status gfp_index_build(const gfp_graph* const* graphs, const char* const* ids,
                           const char* const* sources, size_t count,
                           const char* method, const char* store_path, int jobs);

/* Candidate ids whose stored fingerprint matches g, newline-separated
 * (empty string when there is no match). */
gfp_status gfp_index_query(const gfp_graph* g, const char* method,
                           const char* store_path, char** out_ids);

/* ---- verification suites ---- */

/* Newline-separated suite names. */
gfp_status gfp_suite_names(char** out);

/* Runs one suite; *out_passed is 1 or 0; *out_report is the text report
 * (either may be NULL if not wanted). pairs = 0 keeps the suite default. */
gfp_status gfp_run_suite(const char* name, uint64_t seed, int jobs, int pairs,
                         int* out_passed, char** out_report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GRAPHFP_H */

/* matchcx: independence and matching complexes of grid-like graphs.
 *
 * Every function returns an mcx_status. Output handles and strings are
 * written through pointer arguments only on success. Strings returned by the
 * library are NUL-terminated, allocated by the library and released with
 * mcx_string_free. The message for the last failure on the calling thread is
 * available from mcx_last_error.
 */
#ifndef MATCHCX_H
#define MATCHCX_H

#include <stddef.h>
#include <stdint.h>

#if defined(MATCHCX_BUILDING_LIBRARY)
#define MCX_API __attribute__((visibility("default")))
#else
#define MCX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mcx_status {
  MCX_OK = 0,
  MCX_E_INVALID = 1,      /* bad argument: unknown family, n < 1, unknown vertex */
  MCX_E_PRECONDITION = 2, /* e.g. split at a non-simplicial vertex */
  MCX_E_SIZE_LIMIT = 3,   /* isomorphism above 64 vertices, SNF above its face limit */
  MCX_E_RESOURCE = 4,     /* face budget exceeded */
  MCX_E_PARSE = 5,
  MCX_E_IO = 6,
  MCX_E_INCONSISTENT = 7, /* an internal cross-check failed */
  MCX_E_NULL = 8,         /* required pointer argument was NULL */
  MCX_E_INTERNAL = 9
} mcx_status;

typedef enum mcx_method {
  MCX_METHOD_GF2 = 0,
  MCX_METHOD_GFP = 1,
  MCX_METHOD_RATIONAL = 2,
  MCX_METHOD_SNF = 3,
  MCX_METHOD_CROSSCHECK = 4
} mcx_method;

typedef struct mcx_graph mcx_graph;
typedef struct mcx_complex mcx_complex;
typedef struct mcx_betti mcx_betti;
typedef struct mcx_wedge mcx_wedge;
typedef struct mcx_trace mcx_trace;

MCX_API const char* mcx_version(void);
MCX_API const char* mcx_last_error(void);
MCX_API const char* mcx_status_name(mcx_status s);
MCX_API void mcx_string_free(char* s);

/* Graphs. Family letters are G B A D J O M Q F H (case-insensitive). */
MCX_API mcx_status mcx_graph_family(char family, int n, mcx_graph** out);
MCX_API mcx_status mcx_graph_grid(int m, int n, mcx_graph** out);
MCX_API mcx_status mcx_graph_path(int r, mcx_graph** out);
MCX_API mcx_status mcx_graph_cycle(int r, mcx_graph** out);
MCX_API mcx_status mcx_graph_parse(const char* edge_list, mcx_graph** out);
MCX_API mcx_status mcx_graph_read(const char* path, mcx_graph** out);
MCX_API mcx_status mcx_graph_line(const mcx_graph* g, mcx_graph** out);
MCX_API mcx_status mcx_graph_copy(const mcx_graph* g, mcx_graph** out);
MCX_API mcx_status mcx_graph_order(const mcx_graph* g, size_t* out);
MCX_API mcx_status mcx_graph_size(const mcx_graph* g, size_t* out);
MCX_API mcx_status mcx_graph_edge_list(const mcx_graph* g, char** out);
MCX_API void mcx_graph_free(mcx_graph* g);

/* *found is 1 and *mapping holds `a b` lines (a in g, b in h) when the
 * graphs are isomorphic; otherwise *found is 0 and *mapping is NULL. */
MCX_API mcx_status mcx_graph_isomorphic(const mcx_graph* g, const mcx_graph* h, int* found,
                                        char** mapping);

/* Reductions. */
MCX_API mcx_status mcx_reduce(const mcx_graph* g, mcx_trace** out);
MCX_API mcx_status mcx_fold_reduce(const mcx_graph* g, mcx_trace** out);
MCX_API mcx_status mcx_trace_contractible(const mcx_trace* t, int* out);
MCX_API mcx_status mcx_trace_steps(const mcx_trace* t, size_t* out);
/* MCX_E_PRECONDITION when the trace ends contractible. */
MCX_API mcx_status mcx_trace_terminal(const mcx_trace* t, mcx_graph** out);
MCX_API mcx_status mcx_trace_text(const mcx_trace* t, char** out);
/* Replays `text` on g and checks every witness; *contractible reports the
 * outcome and *terminal (may be NULL) receives the resulting graph. */
MCX_API mcx_status mcx_trace_replay(const mcx_graph* g, const char* text, int* contractible,
                                    mcx_graph** terminal);
MCX_API void mcx_trace_free(mcx_trace* t);

/* Complexes. budget = 0 selects the default face budget. */
MCX_API mcx_status mcx_independence_complex(const mcx_graph* g, uint64_t budget, mcx_complex** out);
MCX_API mcx_status mcx_matching_complex(const mcx_graph* g, uint64_t budget, mcx_complex** out);
MCX_API mcx_status mcx_complex_dimension(const mcx_complex* k, int* out);
MCX_API mcx_status mcx_complex_facet_count(const mcx_complex* k, size_t* out);
MCX_API mcx_status mcx_complex_facets(const mcx_complex* k, const char* name, char** out);
/* Face counts as a JSON array indexed by dimension. */
MCX_API mcx_status mcx_complex_face_counts(const mcx_complex* k, uint64_t budget, char** out);
MCX_API mcx_status mcx_complex_euler(const mcx_complex* k, uint64_t budget, long long* out);
MCX_API mcx_status mcx_complex_boundary_check(const mcx_complex* k, uint64_t budget, int* ok);
/* Coordinate text of every boundary matrix, 1-based. */
MCX_API mcx_status mcx_complex_boundary_text(const mcx_complex* k, uint64_t budget, char** out);
MCX_API void mcx_complex_free(mcx_complex* k);

/* Homology. prime is used by MCX_METHOD_GFP; jobs <= 1 runs serially. */
MCX_API mcx_status mcx_compute_betti(const mcx_complex* k, mcx_method method, uint32_t prime, uint64_t budget,
                                     unsigned jobs, mcx_betti** out);
MCX_API mcx_status mcx_betti_get(const mcx_betti* b, int dim, uint64_t* out);
/* -1 undetermined, 0 torsion found, 1 torsion-free. */
MCX_API mcx_status mcx_betti_torsion_free(const mcx_betti* b, int* out);
/* {"reduced_betti":{"d":b,...},"torsion_free":bool|null,"torsion":[...],"evidence":"..."} */
MCX_API mcx_status mcx_betti_json(const mcx_betti* b, char** out);
MCX_API mcx_status mcx_betti_parse_json(const char* json, mcx_betti** out);
MCX_API void mcx_betti_free(mcx_betti* b);

/* Symbolic homotopy types. */
MCX_API mcx_status mcx_wedge_family(char family, int n, mcx_wedge** out);
MCX_API mcx_status mcx_wedge_path(int r, mcx_wedge** out);
MCX_API mcx_status mcx_wedge_cycle(int r, mcx_wedge** out);
MCX_API mcx_status mcx_wedge_parse(const char* text, mcx_wedge** out);
MCX_API mcx_status mcx_wedge_text(const mcx_wedge* w, char** out);
MCX_API mcx_status mcx_wedge_json(const mcx_wedge* w, char** out);
/* Decimal sphere count in dimension dim. */
MCX_API mcx_status mcx_wedge_count(const mcx_wedge* w, int dim, char** out);
MCX_API mcx_status mcx_wedge_equal(const mcx_wedge* a, const mcx_wedge* b, int* out);
/* 1 when the Betti numbers equal the sphere counts in every dimension. */
MCX_API mcx_status mcx_wedge_matches_betti(const mcx_wedge* w, const mcx_betti* b, int* out);
MCX_API void mcx_wedge_free(mcx_wedge* w);

/* *has_range is 0 for a predicted contractible complex. */
MCX_API mcx_status mcx_dimension_range(char family, int n, int* has_range, int* low, int* high);

#ifdef __cplusplus
}
#endif

#endif /* MATCHCX_H */

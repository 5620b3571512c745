/* C interface to the pdrecon library: reconstruction of straight-line
 * embedded graphs from directional augmented persistence diagrams.
 *
 * All functions return PDRECON_OK on success and a nonzero status code on
 * failure; pdrecon_last_error() describes the most recent failure on the
 * calling thread.  Objects are opaque handles released with their matching
 * _free function; buffers allocated by the library are released with
 * pdrecon_free().
 */
#ifndef PDRECON_H
#define PDRECON_H

#include <stddef.h>
#include <stdint.h>

/* The shared library is built with hidden visibility; only this interface is
 * exported. */
#ifndef PDRECON_API
#if defined(__GNUC__) || defined(__clang__)
#define PDRECON_API __attribute__((visibility("default")))
#else
#define PDRECON_API
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pdrecon_status {
    PDRECON_OK = 0,
    PDRECON_ERR_INVALID_ARGUMENT = 1,
    PDRECON_ERR_DIMENSION_MISMATCH = 2,
    PDRECON_ERR_INDEX_OUT_OF_RANGE = 3,
    PDRECON_ERR_ZERO_VECTOR = 4,
    PDRECON_ERR_DEGENERATE_DIRECTION = 5,
    PDRECON_ERR_TOO_FEW_POINTS = 6,
    PDRECON_ERR_NEED_TWO_VERTICES = 7,
    PDRECON_ERR_MIN_ANGLE_TOO_SMALL = 8,
    PDRECON_ERR_SINGULAR_INTERSECTION = 9,
    PDRECON_ERR_MATCH_COUNT_MISMATCH = 10,
    PDRECON_ERR_PROJECTION_DEGENERATE = 11,
    PDRECON_ERR_DEGENERATE_CONFIGURATION = 12,
    PDRECON_ERR_IO = 13,
    PDRECON_ERR_UNKNOWN = 14
} pdrecon_status;

typedef struct pdrecon_graph pdrecon_graph;
typedef struct pdrecon_oracle pdrecon_oracle;
typedef struct pdrecon_diagram pdrecon_diagram;

/* Message for the last failing call on this thread; never NULL. */
PDRECON_API const char* pdrecon_last_error(void);

/* Frees buffers returned through double-pointer out parameters. */
PDRECON_API void pdrecon_free(void* buffer);

/* ---- graphs ---------------------------------------------------------- */

/* coords is row-major, num_vertices x dim; edge_pairs holds 2*num_edges
 * vertex indices. */
PDRECON_API pdrecon_status pdrecon_graph_create(int dim, const double* coords, int num_vertices,
                                    const int32_t* edge_pairs, int num_edges,
                                    pdrecon_graph** out);
PDRECON_API void pdrecon_graph_free(pdrecon_graph* graph);

PDRECON_API pdrecon_status pdrecon_graph_load_json(const char* path, pdrecon_graph** out);
PDRECON_API pdrecon_status pdrecon_graph_save_json(const pdrecon_graph* graph, const char* path);

PDRECON_API int pdrecon_graph_dim(const pdrecon_graph* graph);
PDRECON_API int pdrecon_graph_num_vertices(const pdrecon_graph* graph);
PDRECON_API int pdrecon_graph_num_edges(const pdrecon_graph* graph);
/* coords must hold num_vertices*dim doubles. */
PDRECON_API pdrecon_status pdrecon_graph_vertices(const pdrecon_graph* graph, double* coords);
/* pairs must hold 2*num_edges entries. */
PDRECON_API pdrecon_status pdrecon_graph_edges(const pdrecon_graph* graph, int32_t* pairs);

/* ok = 1 when the graph is in general position (distinct coordinates per
 * axis, no collinear triple in the first-two-axes projection, and, with
 * check_crossings, no crossing edge interiors for d = 2). */
PDRECON_API pdrecon_status pdrecon_graph_general_position(const pdrecon_graph* graph, int check_crossings,
                                              int* ok);
/* Minimum pairwise line angle of the vertex set, first-two-axes projection. */
PDRECON_API pdrecon_status pdrecon_graph_min_angle(const pdrecon_graph* graph, double* angle);

/* Random graph: alpha-subsampled Delaunay triangulation of uniform points in
 * the unit square (dim 2), or a random tree plus extra edges in the unit cube
 * (dim >= 3).  min_half_angle > 0 rejects instances whose bow-tie half-angle
 * falls below it. */
PDRECON_API pdrecon_status pdrecon_generate(int n, double alpha, uint64_t seed, int dim,
                                double min_half_angle, pdrecon_graph** out);

/* ---- oracle and diagrams --------------------------------------------- */

/* The oracle copies the graph; reconstruction entry points only accept the
 * oracle, never the graph.  enable_cache memoizes repeated directions for
 * timing harnesses; every query still counts. */
PDRECON_API pdrecon_status pdrecon_oracle_create(const pdrecon_graph* graph, int enable_cache,
                                     pdrecon_oracle** out);
PDRECON_API void pdrecon_oracle_free(pdrecon_oracle* oracle);

PDRECON_API uint64_t pdrecon_oracle_query_count(const pdrecon_oracle* oracle);
/* Cumulative nanoseconds spent computing diagrams (for timing subtraction). */
PDRECON_API uint64_t pdrecon_oracle_diagram_nanos(const pdrecon_oracle* oracle);

/* dir has `dim` components and must be unit length.  restrict_dim is -1 for
 * the full diagram or 0/1 for one homology dimension; a restricted query
 * still counts as one query. */
PDRECON_API pdrecon_status pdrecon_oracle_query(const pdrecon_oracle* oracle, const double* dir, int dim,
                                    int restrict_dim, pdrecon_diagram** out);

/* Reference diagram from the naive sublevel sweep, for cross-checks. */
PDRECON_API pdrecon_status pdrecon_diagram_brute(const pdrecon_graph* graph, const double* dir, int dim,
                                     pdrecon_diagram** out);

PDRECON_API void pdrecon_diagram_free(pdrecon_diagram* diagram);
PDRECON_API int pdrecon_diagram_size(const pdrecon_diagram* diagram);
/* death is HUGE_VAL for essential classes.  Simplices are encoded as two
 * vertex indices; b = -1 marks a vertex simplex, a = -1 marks no simplex. */
PDRECON_API pdrecon_status pdrecon_diagram_point(const pdrecon_diagram* diagram, int index, int* homdim,
                                     double* birth, double* death, int32_t* birth_a,
                                     int32_t* birth_b, int32_t* death_a, int32_t* death_b);
/* CSV with header dim,birth,death,birth_simplex,death_simplex. */
PDRECON_API pdrecon_status pdrecon_diagram_write_csv(const pdrecon_diagram* diagram, const char* path);

/* ---- reconstruction --------------------------------------------------- */

/* Vertex recovery: 3 diagrams for dim 2, dim+1 in general (one fewer for a
 * single vertex).  *coords receives a library-allocated array of
 * (*num_vertices) * (*dim) doubles, vertices sorted lexicographically. */
PDRECON_API pdrecon_status pdrecon_reconstruct_vertices(const pdrecon_oracle* oracle, double** coords,
                                            int* num_vertices, int* dim, uint64_t* queries);

/* Edge recovery over a known vertex list: n^2 - n diagrams.  *pairs receives
 * 2*(*num_edges) indices into the given vertex order. */
PDRECON_API pdrecon_status pdrecon_reconstruct_edges(const pdrecon_oracle* oracle, const double* coords,
                                         int num_vertices, int dim, double min_half_angle,
                                         int32_t** pairs, int* num_edges, uint64_t* queries);

/* Vertex phase then edge phase; n^2 - n + 3 diagrams for plane graphs,
 * n^2 - n + dim + 1 in general. */
PDRECON_API pdrecon_status pdrecon_reconstruct_full(const pdrecon_oracle* oracle, double min_half_angle,
                                        pdrecon_graph** out, uint64_t* queries);

/* ---- experiments ------------------------------------------------------ */

/* Generate-free round trip over a known graph: reconstructs through a fresh
 * oracle and compares.  exact = 1 when vertices match within 1e-9, edge sets
 * are equal and the query budget is exact.  On mismatch *message (optional)
 * receives a description; free with pdrecon_free. */
PDRECON_API pdrecon_status pdrecon_roundtrip(const pdrecon_graph* truth, double min_half_angle, int* exact,
                                 uint64_t* total_queries, char** message);

/* Timed reconstruction benchmark; writes per-run records to csv_path and, if
 * summary (optional) is non-NULL, a JSON summary of the scaling fits. */
PDRECON_API pdrecon_status pdrecon_bench_csv(const int* ns, int num_ns, const double* alphas, int num_alphas,
                                 int graphs_per_config, int repeats, uint64_t seed,
                                 const char* csv_path, char** summary);

/* Minimum-angle study; writes per-trial records to csv_path and per-n
 * summaries (empirical fraction below 1e-6 and the model probability) to
 * summary_csv_path when non-NULL. */
PDRECON_API pdrecon_status pdrecon_minangle_csv(const int* ns, int num_ns, int trials, uint64_t seed,
                                    const char* csv_path, const char* summary_csv_path,
                                    char** summary);

/* Model probability that n uniform points contain an angle below 1e-6. */
PDRECON_API pdrecon_status pdrecon_minangle_model(int n, double* probability);

/* Compares the diagram pipeline against the naive sublevel sweep on
 * `directions` random directions; *mismatches receives the disagreement
 * count. */
PDRECON_API pdrecon_status pdrecon_verify(const pdrecon_graph* graph, int directions, uint64_t seed,
                              int* mismatches);

#ifdef __cplusplus
}
#endif

#endif /* PDRECON_H */

#ifndef GRIDMAGIC_H
#define GRIDMAGIC_H

/* C API for the gridmagic library: exact counting of magic labellings of
 * grid and torus graphs, Ehrhart polynomials and h-vectors of their perfect
 * matching polytopes, Gorenstein checks, transfer-matrix and minimal
 * recurrences with backward (reciprocity) evaluation, Kasteleyn's closed
 * form, and decomposition of labellings into stacked perfect matchings.
 *
 * Conventions:
 *  - every function returns a gm_status; on failure gm_last_error() holds a
 *    thread-local message;
 *  - `char **out` parameters receive a malloc'd NUL-terminated string
 *    (decimal integer or JSON document) to release with gm_string_free;
 *  - counts of arbitrary size are decimal strings, exact by construction.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gm_status {
    GM_OK = 0,
    GM_EINVAL = 1,   /* malformed arguments (usage error) */
    GM_EDOMAIN = 2,  /* outside the mathematical domain or over a cap */
    GM_EINTERNAL = 3 /* an internal cross-check failed */
} gm_status;

const char *gm_last_error(void);
void gm_string_free(char *s);

/* Tunables (process-wide): thread count (0 = hardware), transfer-matrix
 * state cap, enumeration cap, Kasteleyn precision ceiling in bits. */
void gm_set_threads(int threads);
void gm_set_state_cap(uint64_t cap);
void gm_set_enumerate_cap(uint64_t cap);
void gm_set_precision_ceiling(int bits);

typedef struct gm_graph gm_graph;
typedef struct gm_labelling gm_labelling;

gm_status gm_graph_grid(int rows, int cols, gm_graph **out);
gm_status gm_graph_torus(int rows, int cols, gm_graph **out);
void gm_graph_free(gm_graph *g);
int gm_graph_rows(const gm_graph *g);
int gm_graph_cols(const gm_graph *g);
int gm_graph_vertex_count(const gm_graph *g);
int gm_graph_edge_count(const gm_graph *g);
int gm_graph_is_bipartite(const gm_graph *g);
/* {rows, cols, topology, edges:[{index,u:[r,c],v:[r,c],kind,slot}]} */
gm_status gm_graph_to_json(const gm_graph *g, char **out);
gm_status gm_graph_bipartition_json(const gm_graph *g, char **out);
gm_status gm_graph_h_description_json(const gm_graph *g, char **out);

/* Labellings: {graph:{rows,cols,topology}, sum, labels:[int,...]} with
 * labels in canonical edge order; wrong-length vectors are rejected. */
gm_status gm_labelling_create(const gm_graph *g, long long sum, const long long *labels,
                              int n_labels, gm_labelling **out);
gm_status gm_labelling_from_json(const char *json_text, gm_labelling **out);
gm_status gm_labelling_to_json(const gm_labelling *l, char **out);
void gm_labelling_free(gm_labelling *l);
gm_status gm_labelling_validate_json(const gm_labelling *l, char **out);
/* Interior-point constructions: "2xn-t3", "3xn-t5", "4x4-t4",
 * "even-even-t4", "even-even-t5", "even-odd-t5", "even-odd-t5-flipped". */
gm_status gm_witness(const char *case_id, int rows, int cols, gm_labelling **out);
/* 1 iff the top/middle/bottom row difference identity holds (3xn grids). */
gm_status gm_check_difflemma(const gm_labelling *l, int *holds);

/* mode: "all" or "interior". */
gm_status gm_count_grid(int rows, int cols, long long sum, const char *mode, char **out);
gm_status gm_count(const gm_graph *g, long long sum, const char *mode, char **out);
gm_status gm_enumerate_json(const gm_graph *g, long long sum, const char *mode,
                            uint64_t limit, char **out);

gm_status gm_dimension(const gm_graph *g, long long *out);
gm_status gm_ehrhart_json(int rows, int cols, const char *topology, char **out);
/* mode: "hvector" or "functional" (t_max bounds the functional window). */
gm_status gm_gorenstein_json(int rows, int cols, const char *topology, const char *mode,
                             long long t_max, char **out);

gm_status gm_kasteleyn(int m, int n, char **out);

/* Recurrence JSON: {order, coeffs, seed_index, seed, formula}. */
gm_status gm_transfer_recurrence_json(int m, long long t, char **out);
gm_status gm_minimal_recurrence_json(int m, long long t, long long terms, char **out);
/* seq_json: JSON array of integers or decimal strings. */
gm_status gm_berlekamp_massey_json(const char *seq_json, char **out);
gm_status gm_extend_json(const char *recurrence_json, const char *direction, long long count,
                         char **out);
gm_status gm_reciprocity_json(int m, long long n_max, char **out);
gm_status gm_power_json(int m, long long t, long long n_max, char **out);

gm_status gm_decompose_json(const gm_labelling *l, char **out);
/* One H/V cell diagram per layer, grids only. */
gm_status gm_decompose_render(const gm_labelling *l, char **out);

typedef void (*gm_selftest_cb)(int id, const char *name, int pass, double seconds,
                               const char *detail, void *user);
/* Runs the full acceptance suite (criterion = 0) or one criterion (1..15);
 * sets *all_passed. The callback, if non-NULL, fires once per criterion. */
gm_status gm_selftest(int criterion, gm_selftest_cb cb, void *user, int *all_passed);

#ifdef __cplusplus
}
#endif

#endif /* GRIDMAGIC_H */

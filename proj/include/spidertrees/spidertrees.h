/* spidertrees: independent-set stars, proof-map verification, and EKR
 * ground truth on spider trees, behind a C interface.
 *
 * Conventions
 *   - Every function returns an st_status; results travel through out
 *     parameters. ST_OK means the out parameters are valid.
 *   - On failure, st_last_error_message() describes the error for the
 *     calling thread until its next spidertrees call.
 *   - Objects are opaque; each *_free releases one. Strings returned via
 *     char** out parameters are released with st_string_free. NULL is a
 *     valid argument to any free function.
 *   - All operations are pure; distinct handles may be used from distinct
 *     threads without locking.
 */

#ifndef SPIDERTREES_H
#define SPIDERTREES_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum st_status {
    ST_OK = 0,
    ST_ERROR_INVALID_ARGUMENT = 1,
    ST_ERROR_IO = 2,
    ST_ERROR_OVERFLOW = 3,
    ST_ERROR_BUDGET_EXCEEDED = 4,
    ST_ERROR_IMPOSSIBLE_CASE = 5,
    ST_ERROR_INTERNAL = 6
} st_status;

typedef enum st_format { ST_FORMAT_TSV = 0, ST_FORMAT_JSON = 1 } st_format;

const char* st_last_error_message(void);
void st_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Spiders: head vertex 0, legs numbered 1..k, leg i holding vertices
 * (i,1)..(i,l_i) outward from the head.                               */

typedef struct st_spider st_spider;

/* descriptor: comma-separated positive leg lengths, e.g. "3,1,2,4" */
st_status st_spider_from_descriptor(const char* descriptor, st_spider** out);
st_status st_spider_from_legs(const uint32_t* legs, size_t leg_count, st_spider** out);
void st_spider_free(st_spider* s);

st_status st_spider_descriptor(const st_spider* s, char** out);
st_status st_spider_leg_count(const st_spider* s, uint32_t* out);
/* legs are 1-based */
st_status st_spider_leg_length(const st_spider* s, uint32_t leg, uint32_t* out);
st_status st_spider_vertex_count(const st_spider* s, uint32_t* out);

/* (0,0) is the head; (i,h) with i,h >= 1 is the height-h vertex of leg i */
st_status st_spider_vertex_id(const st_spider* s, uint32_t leg, uint32_t height, uint32_t* out);
st_status st_spider_coordinate_of(const st_spider* s, uint32_t vertex, uint32_t* leg,
                                  uint32_t* height);

/* legs permuted into spider order: odd lengths ascending, then even
 * lengths descending, ties keeping input order */
st_status st_spider_ordered(const st_spider* s, st_spider** out);
st_status st_spider_in_spider_order(const st_spider* s, int* out);
/* spider order of a descriptor, without building the graph */
st_status st_spider_order_descriptor(const char* descriptor, char** out);

/* the underlying tree (caller frees) */
typedef struct st_tree st_tree;
st_status st_spider_tree(const st_spider* s, st_tree** out);

/* ------------------------------------------------------------------ */
/* Trees over vertices 0..n-1.                                         */

/* file format: first line "n <count>", then one "u v" edge per line */
st_status st_tree_from_file(const char* path, st_tree** out);
/* endpoints holds 2*edge_count vertex ids: u0,v0,u1,v1,... */
st_status st_tree_from_edges(uint32_t n, const uint32_t* endpoints, size_t edge_count,
                             st_tree** out);
void st_tree_free(st_tree* t);

st_status st_tree_vertex_count(const st_tree* t, uint32_t* out);
/* maximum independent set size */
st_status st_tree_alpha(const st_tree* t, uint32_t* out);
/* minimum size of an inclusion-maximal independent set */
st_status st_tree_mu(const st_tree* t, uint32_t* out);
st_status st_tree_is_independent(const st_tree* t, const uint32_t* vertices, size_t count,
                                 int* out);

/* ------------------------------------------------------------------ */
/* Star tables: per-vertex counts of size-t independent sets.          */

typedef struct st_star_table st_star_table;

st_status st_star_table_compute(const st_tree* t, uint32_t set_size, st_star_table** out);
void st_star_table_free(st_star_table* table);

st_status st_star_table_t(const st_star_table* table, uint32_t* out);
st_status st_star_table_total(const st_star_table* table, uint64_t* out);
st_status st_star_table_count(const st_star_table* table, uint32_t vertex, uint64_t* out);
/* spider may be NULL: coordinates render as "-" */
st_status st_star_table_render(const st_star_table* table, const st_spider* spider,
                               st_format format, char** out);

/* ------------------------------------------------------------------ */
/* Verification of the three star-inequality maps. Each report covers
 * one (theorem, i, j, t) instance; a report is verified when the map
 * hit no postcondition failures or collisions on its whole domain star. */

typedef struct st_report_list st_report_list;

/* theorem: 0 = all three, otherwise 1, 2 or 3. Runs every t in
 * [t_lo, t_hi]. For theorem 3 the legs are normalized into spider order
 * first (reports show the normalized descriptor). */
st_status st_verify_theorems(const st_spider* s, int theorem, uint32_t t_lo, uint32_t t_hi,
                             st_report_list** out);
void st_report_list_free(st_report_list* list);

st_status st_report_list_size(const st_report_list* list, size_t* out);
st_status st_report_list_verified(const st_report_list* list, size_t index, int* out);
/* "PASS theorem=1 spider=3,2 t=2 i=1 j=1 domain=3 image=3 violations=0" */
st_status st_report_list_line(const st_report_list* list, size_t index, char** out);
/* JSON array of all reports in the list */
st_status st_report_list_json(const st_report_list* list, char** out);

/* ------------------------------------------------------------------ */
/* EKR ground truth.                                                   */

typedef struct st_ekr_verdict st_ekr_verdict;

/* Exact comparison of the largest intersecting subfamily of the size-t
 * independent sets against the largest star. budget_family caps the
 * family size, budget_nodes the search tree; pass 0 for the defaults
 * (5000 sets, 10^7 nodes). Exceeding a budget fails with
 * ST_ERROR_BUDGET_EXCEEDED rather than approximating. */
st_status st_ekr_check(const st_tree* t, uint32_t set_size, uint64_t budget_family,
                       uint64_t budget_nodes, st_ekr_verdict** out);
void st_ekr_verdict_free(st_ekr_verdict* v);

st_status st_ekr_verdict_is_t_ekr(const st_ekr_verdict* v, int* out);
st_status st_ekr_verdict_in_range(const st_ekr_verdict* v, int* out);
/* instance_label / tree_source identify the input, e.g. "spider=2,1" */
st_status st_ekr_verdict_line(const st_ekr_verdict* v, const char* instance_label, char** out);
st_status st_ekr_verdict_json(const st_ekr_verdict* v, const char* tree_source, char** out);

/* Verdicts for every t in 1..floor(mu/2) (the conjectured-safe range).
 * Budget failures are recorded per entry, not returned as errors.      */

typedef struct st_scan_list st_scan_list;

st_status st_ekr_range_scan(const st_tree* t, uint64_t budget_family, uint64_t budget_nodes,
                            st_scan_list** out);

/* Same stream shape over an explicit inclusive t range (t_lo >= 1). */
st_status st_ekr_over_range(const st_tree* t, uint32_t t_lo, uint32_t t_hi,
                            uint64_t budget_family, uint64_t budget_nodes, st_scan_list** out);

void st_scan_list_free(st_scan_list* list);

st_status st_scan_list_size(const st_scan_list* list, size_t* out);

typedef enum st_scan_status {
    ST_SCAN_OK = 0,         /* is_t_ekr holds */
    ST_SCAN_REPORTABLE = 1, /* in-range verdict with is_t_ekr false */
    ST_SCAN_NOT_EKR = 2,    /* out-of-range verdict with is_t_ekr false */
    ST_SCAN_BUDGET = 3      /* search budget exceeded at this t */
} st_scan_status;

st_status st_scan_list_status(const st_scan_list* list, size_t index, int* out);
st_status st_scan_list_line(const st_scan_list* list, size_t index, const char* instance_label,
                            char** out);
st_status st_scan_list_json(const st_scan_list* list, size_t index, const char* tree_source,
                            char** out);

/* ------------------------------------------------------------------ */
/* Star-maximizing centers.                                            */

/* argmax receives a malloc'd id array (free with st_ids_free); any_leaf
 * is 1 when some argmax vertex has degree <= 1. Empty when no size-t
 * independent set exists. */
st_status st_best_center(const st_tree* t, uint32_t set_size, uint64_t* max_star,
                         uint32_t** argmax, size_t* argmax_count, int* any_leaf);
void st_ids_free(uint32_t* ids);

/* ------------------------------------------------------------------ */
/* Catalog: every spider with 2..max_n vertices, one per leg multiset,
 * in deterministic order (by order n, then reverse-lexicographic
 * descending leg lists).                                              */

typedef struct st_catalog st_catalog;

st_status st_catalog_create(uint32_t max_n, st_catalog** out);
void st_catalog_free(st_catalog* c);
st_status st_catalog_size(const st_catalog* c, size_t* out);
st_status st_catalog_descriptor(const st_catalog* c, size_t index, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SPIDERTREES_H */

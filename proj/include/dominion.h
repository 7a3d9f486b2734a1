/* C interface to the dominion library: exact domination number (gamma),
 * minimum-dominating-set counting (zeta), gamma-set classification, closed
 * formulas for standard families, and the formula verification harness.
 *
 * Conventions:
 *   - Vertices are 0-based; capacity is 128 vertices.
 *   - Functions return DOM_OK or an error status; dom_last_error() describes
 *     the most recent failure on the calling thread.
 *   - zeta values are returned as decimal strings (they may need 128 bits).
 *   - Objects returned through out-parameters are owned by the caller and
 *     released with their matching *_free function.
 */
#ifndef DOMINION_H
#define DOMINION_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DOM_API __declspec(dllexport)
#else
#define DOM_API __attribute__((visibility("default")))
#endif

typedef enum dom_status {
    DOM_OK = 0,
    DOM_ERR_INVALID_ARGUMENT = 1,
    DOM_ERR_PARSE = 2,
    DOM_ERR_CAPACITY = 3,
    DOM_ERR_OVERFLOW = 4,
    DOM_ERR_NOT_DOMINATING = 5,
    DOM_ERR_HYPOTHESIS = 6,
    DOM_ERR_TIMEOUT = 7
} dom_status;

typedef struct dom_graph dom_graph;
typedef struct dom_report dom_report;
typedef struct dom_records dom_records;

/* Message for the most recent error on this thread; empty string if none. */
DOM_API const char* dom_last_error(void);

/* Frees strings returned through char** out-parameters. */
DOM_API void dom_string_free(char* s);

/* ---- graph construction -------------------------------------------- */

DOM_API dom_status dom_graph_new(int n, dom_graph** out);
DOM_API dom_status dom_graph_add_edge(dom_graph* g, int u, int v);
DOM_API void dom_graph_free(dom_graph* g);

DOM_API dom_status dom_graph_path(int n, dom_graph** out);
DOM_API dom_status dom_graph_cycle(int n, dom_graph** out);
DOM_API dom_status dom_graph_complete(int n, dom_graph** out);
DOM_API dom_status dom_graph_star(int leaves, dom_graph** out);
DOM_API dom_status dom_graph_sun(int n, dom_graph** out); /* 2n vertices */
DOM_API dom_status dom_graph_kpartite(const int* parts, size_t k, dom_graph** out);
DOM_API dom_status dom_graph_join(const dom_graph* a, const dom_graph* b, dom_graph** out);

/* Family grammar: path:N | cycle:N | complete:N | star:N | sun:N |
 * kpartite:M1,M2,... | join:<spec>+<spec> */
DOM_API dom_status dom_graph_family(const char* spec, dom_graph** out);

/* "n <count>" header followed by "u v" lines. */
DOM_API dom_status dom_graph_parse_edge_list(const char* text, dom_graph** out);
DOM_API dom_status dom_graph_emit_edge_list(const dom_graph* g, char** out);

/* Standard graph6 ASCII encoding (n <= 128). */
DOM_API dom_status dom_graph_parse_graph6(const char* text, dom_graph** out);
DOM_API dom_status dom_graph_emit_graph6(const dom_graph* g, char** out);

DOM_API int dom_graph_vertex_count(const dom_graph* g);
DOM_API unsigned long long dom_graph_edge_count(const dom_graph* g);
DOM_API int dom_graph_adjacent(const dom_graph* g, int u, int v);
DOM_API int dom_graph_connected(const dom_graph* g);

/* ---- exact computation ---------------------------------------------- */

typedef struct dom_compute_opts {
    int materialize;        /* nonzero: keep the gamma-sets on the report */
    int max_n;              /* search size guard; 0 disables, default 40 */
    long long budget_ms;    /* per-call time budget; 0 = unlimited, < 0 = expired */
} dom_compute_opts;

DOM_API dom_compute_opts dom_compute_opts_default(void);

/* Branch-and-bound engine. */
DOM_API dom_status dom_graph_dominion(const dom_graph* g, const dom_compute_opts* opts,
                                      dom_report** out);

/* Independent exhaustive reference (n <= 24), for cross-checking. */
DOM_API dom_status dom_graph_dominion_oracle(const dom_graph* g, int materialize,
                                             dom_report** out);

DOM_API void dom_report_free(dom_report* r);
DOM_API int dom_report_gamma(const dom_report* r);
DOM_API dom_status dom_report_zeta(const dom_report* r, char* buf, size_t buflen);
/* Number of materialized sets; 0 when materialization was not requested. */
DOM_API size_t dom_report_set_count(const dom_report* r);
/* Copies the i-th set (ascending vertex indices) into out; *out_len gets the
 * set size. Fails with DOM_ERR_INVALID_ARGUMENT if cap is too small. */
DOM_API dom_status dom_report_set(const dom_report* r, size_t i, int* out, size_t cap,
                                  size_t* out_len);

/* ---- gamma-set classification --------------------------------------- */

typedef struct dom_class_flags {
    int perfect;
    int connected;
    int total;
    int independent;
    int clique;
} dom_class_flags;

DOM_API dom_status dom_classify(const dom_graph* g, const int* vertices, size_t len,
                                dom_class_flags* out);

typedef struct dom_census {
    unsigned long long total_gamma_sets;
    unsigned long long perfect_count;
    unsigned long long connected_count;
    unsigned long long total_count;
    unsigned long long independent_count;
    unsigned long long clique_count;
    unsigned long long none_count;
} dom_census;

DOM_API dom_status dom_graph_census(const dom_graph* g, const dom_compute_opts* opts,
                                    dom_census* out);

/* ---- closed formulas ------------------------------------------------- */

#define DOM_PROVEN 0
#define DOM_CONJECTURED 1

typedef struct dom_family_value {
    int gamma;
    char zeta[48];   /* decimal */
    int status;      /* DOM_PROVEN or DOM_CONJECTURED */
    char source[64]; /* name of the result the value comes from */
} dom_family_value;

DOM_API dom_status dom_path_dominion(int n, dom_family_value* out);
DOM_API dom_status dom_cycle_dominion(int n, dom_family_value* out);
DOM_API dom_status dom_sun_dominion(int n, dom_family_value* out);
DOM_API dom_status dom_multipartite_dominion(const int* parts, size_t k, dom_family_value* out);
DOM_API dom_status dom_join_gamma(int gamma1, int gamma2, int* out);
DOM_API dom_status dom_join_dominion(const dom_graph* g1, const dom_report* r1,
                                     const dom_graph* g2, const dom_report* r2,
                                     dom_family_value* out);
DOM_API dom_status dom_iterated_join_dominion(int gamma, unsigned long long zeta, int r,
                                              unsigned long long* out);
/* low/high of the universal bound 1 <= zeta <= C(n, gamma), as decimals. */
DOM_API dom_status dom_dominion_bounds(int n, int gamma, char* low, size_t low_len,
                                       char* high, size_t high_len);
DOM_API dom_status dom_join_lower_bound(int n1, int n2, unsigned long long* out);

/* ---- verification harness -------------------------------------------- */

typedef struct dom_verify_opts {
    int use_oracle;      /* nonzero: exhaustive reference as primary engine */
    long long budget_ms; /* per instance; 0 = unlimited, < 0 = expired */
    int threads;         /* 0 = machine parallelism */
    int search_max_n;    /* branch-and-bound guard, default 40 */
} dom_verify_opts;

DOM_API dom_verify_opts dom_verify_opts_default(void);

typedef enum dom_outcome {
    DOM_OUTCOME_OK = 0,
    DOM_OUTCOME_MISMATCH = 1,
    DOM_OUTCOME_SKIPPED = 2,
    DOM_OUTCOME_TIMEOUT = 3,
    DOM_OUTCOME_ENGINE_DISAGREEMENT = 4
} dom_outcome;

/* Sweeps: one record per instance in deterministic parameter order. */
DOM_API dom_status dom_verify_paths(int lo, int hi, const dom_verify_opts* opts,
                                    dom_records** out);
DOM_API dom_status dom_verify_cycles(int lo, int hi, const dom_verify_opts* opts,
                                     dom_records** out);
DOM_API dom_status dom_verify_suns(int lo, int hi, const dom_verify_opts* opts,
                                   dom_records** out);
DOM_API dom_status dom_verify_multipartite(int max_total, const dom_verify_opts* opts,
                                           dom_records** out);
DOM_API dom_status dom_verify_joins(const dom_verify_opts* opts, dom_records** out);
DOM_API dom_status dom_verify_families(int max_n, const dom_verify_opts* opts,
                                       dom_records** out);
DOM_API dom_status dom_verify_cycle_conjecture(int max_n, const dom_verify_opts* opts,
                                               dom_records** out);

DOM_API void dom_records_free(dom_records* recs);
DOM_API size_t dom_records_count(const dom_records* recs);
/* Returned string pointers stay valid for the life of the records object.
 * String accessors return NULL when the index is out of range. */
DOM_API const char* dom_record_family(const dom_records* recs, size_t i);
DOM_API int dom_record_n(const dom_records* recs, size_t i);
DOM_API int dom_record_formula_gamma(const dom_records* recs, size_t i);
DOM_API int dom_record_engine_gamma(const dom_records* recs, size_t i);
DOM_API dom_status dom_record_formula_zeta(const dom_records* recs, size_t i, char* buf,
                                           size_t buflen);
DOM_API dom_status dom_record_engine_zeta(const dom_records* recs, size_t i, char* buf,
                                          size_t buflen);
DOM_API int dom_record_status(const dom_records* recs, size_t i); /* DOM_PROVEN/... */
DOM_API int dom_record_outcome(const dom_records* recs, size_t i); /* dom_outcome */
DOM_API int dom_record_match(const dom_records* recs, size_t i);
DOM_API long long dom_record_elapsed_ms(const dom_records* recs, size_t i);
DOM_API const char* dom_record_note(const dom_records* recs, size_t i);

/* 0 = all proven formulas match; 1 = proven mismatch or engine disagreement;
 * 5 = only conjectured mismatches. */
DOM_API int dom_records_exit_class(const dom_records* recs);
/* One-line conjecture consistency statement; free with dom_string_free. */
DOM_API dom_status dom_records_summary(const dom_records* recs, char** out);

#ifdef __cplusplus
}
#endif

#endif /* DOMINION_H */

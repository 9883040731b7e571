/* domlab -- a laboratory for the domination number of Erdos-Renyi
 * random graphs.
 *
 * C interface to the core library: opaque handles plus status codes.
 * Every function that can fail returns a domlab_status; on failure a
 * thread-local diagnostic is available through domlab_last_error().
 * Strings returned through char** are heap-allocated and must be
 * released with domlab_string_free().
 */
#ifndef DOMLAB_H
#define DOMLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum domlab_status {
  DOMLAB_OK = 0,
  DOMLAB_ERR_DOMAIN = 1, /* precondition violated, parse error, regime error */
  DOMLAB_ERR_USAGE = 2   /* null handle, bad buffer, bad enum value */
} domlab_status;

const char* domlab_version(void);

/* Message for the most recent failing call on this thread. */
const char* domlab_last_error(void);

void domlab_string_free(char* s);

/* ---------------------------------------------------------------- */
/* Graphs                                                           */
/* ---------------------------------------------------------------- */

typedef struct domlab_graph domlab_graph;

/* G(n,p): each of the C(n,2) vertex pairs is an edge independently
 * with probability p, driven deterministically by seed. */
domlab_status domlab_graph_sample(uint32_t n, double p, uint64_t seed,
                                  domlab_graph** out);

/* Independently delete each edge of g with probability p_del. */
domlab_status domlab_graph_delete_edges(const domlab_graph* g, double p_del,
                                        uint64_t seed, domlab_graph** out);

/* Edge-list text format: header "n m", then m lines "u v" with
 * 0 <= u < v < n. Canonical output sorts edges lexicographically. */
domlab_status domlab_graph_from_edge_list(const char* text, size_t len,
                                          domlab_graph** out);
domlab_status domlab_graph_to_edge_list(const domlab_graph* g,
                                        char** out_text);

uint32_t domlab_graph_vertex_count(const domlab_graph* g);
uint64_t domlab_graph_edge_count(const domlab_graph* g);
int domlab_graph_has_edge(const domlab_graph* g, uint32_t u, uint32_t v);

/* True iff the union of closed neighborhoods of `set` covers all
 * vertices. `set` is an array of distinct vertex ids. */
domlab_status domlab_graph_is_dominating(const domlab_graph* g,
                                         const uint32_t* set, size_t set_len,
                                         int* out);

/* Vertices outside `set` with exactly one neighbor inside it. The
 * output buffer must hold at least vertex_count entries. */
domlab_status domlab_graph_crucial_set(const domlab_graph* g,
                                       const uint32_t* set, size_t set_len,
                                       uint32_t* out_buf, size_t buf_cap,
                                       size_t* out_len);

void domlab_graph_free(domlab_graph* g);

/* ---------------------------------------------------------------- */
/* Dominating-set solvers                                           */
/* ---------------------------------------------------------------- */

typedef struct domlab_solve_result domlab_solve_result;

typedef enum domlab_solve_status {
  DOMLAB_SOLVE_EXACT = 0,
  DOMLAB_SOLVE_UPPER_BOUND_ONLY = 1,
  DOMLAB_SOLVE_TIMEOUT = 2
} domlab_solve_status;

/* Branch-and-bound over the set-cover view of domination.
 * budget_seconds: wall-clock budget, INFINITY for no limit.
 * size_cap < 0: none. size_cap = k >= 0 turns the call into a decision
 * procedure for D(G) <= k: a result size <= k means yes (with
 * witness), a result size of k+1 with status EXACT certifies no. */
domlab_status domlab_solve_exact(const domlab_graph* g, double budget_seconds,
                                 int64_t size_cap, domlab_solve_result** out);

/* Subset enumeration in increasing cardinality; n <= 25 only. */
domlab_status domlab_solve_brute_force(const domlab_graph* g,
                                       domlab_solve_result** out);

domlab_solve_status domlab_solve_result_status(const domlab_solve_result* r);
uint32_t domlab_solve_result_size(const domlab_solve_result* r);
uint64_t domlab_solve_result_nodes(const domlab_solve_result* r);
double domlab_solve_result_millis(const domlab_solve_result* r);
domlab_status domlab_solve_result_witness(const domlab_solve_result* r,
                                          uint32_t* out_buf, size_t buf_cap,
                                          size_t* out_len);
/* JSON document {status, size, witness, nodes_explored}; deterministic
 * (wall-clock time is exposed only through the millis accessor). */
domlab_status domlab_solve_result_to_json(const domlab_solve_result* r,
                                          char** out_json);
void domlab_solve_result_free(domlab_solve_result* r);

/* Greedy cover: repeatedly add the vertex covering the most currently
 * uncovered vertices, ties to the lowest index. */
domlab_status domlab_greedy_dominating_set(const domlab_graph* g,
                                           uint32_t* out_buf, size_t buf_cap,
                                           size_t* out_len);

/* {0,...,r-1} plus every vertex they fail to dominate. */
domlab_status domlab_alteration_dominating_set(const domlab_graph* g,
                                               uint32_t r, uint32_t* out_buf,
                                               size_t buf_cap,
                                               size_t* out_len);

/* ---------------------------------------------------------------- */
/* Closed-form analytics (log space)                                */
/* ---------------------------------------------------------------- */

/* ln E(X_r) where X_r counts dominating sets of size r in G(n,p):
 * E(X_r) = C(n,r) (1-(1-p)^r)^(n-r). Returns -HUGE_VAL for E = 0. */
domlab_status domlab_log_expected_dominating_sets(uint32_t n, double p,
                                                  uint32_t r, double* out);

/* Critical size: min{ r : E(X_r) >= 1/d } - 1, d = n p > 1 required. */
domlab_status domlab_critical_r_hat(uint32_t n, double p, uint32_t* out);

/* Dense closed form log_q(n ln q / ln^2 n); requires e <= q <= n. */
domlab_status domlab_dense_r_hat(uint32_t n, double p, double* out);

/* ln E(X_{r+alpha}) - ln E(X_r), plus the asymptotic comparator
 * alpha * ln^2 d. */
domlab_status domlab_log_expectation_ratio(uint32_t n, double p, uint32_t r,
                                           int64_t alpha, double* out_exact,
                                           double* out_asymptotic);

/* ln f(s) = ln C(r,s) + ln C(n-r,r-s)
 *           + (n-2r+s) ln(1 - 2(1-p)^r + (1-p)^(2r-s));  r <= n/2. */
domlab_status domlab_log_variance_term(uint32_t n, double p, uint32_t r,
                                       uint32_t s, double* out);

/* Clamped second-moment bound on P(X_r = 0). */
domlab_status domlab_chebyshev_nonexistence_bound(uint32_t n, double p,
                                                  uint32_t r, double* out);

/* exp(-t^2 / (4 (n-b))); upper bound on P(D<=b) P(D>=b+t). */
domlab_status domlab_talagrand_tail_product_bound(uint32_t n, double b,
                                                  double t, double* out);

/* Conditional probability that an outside vertex is crucial for a
 * dominating r-set, p* = r p (1-p)^(r-1) / (1-(1-p)^r), and its mean
 * count mu = (n-r) p*. */
domlab_status domlab_crucial_edge_law(uint32_t n, double p, uint32_t r,
                                      double* out_p_star, double* out_mu);

/* (1-p_del)^crucial_count. */
domlab_status domlab_survival_probability(uint64_t crucial_count,
                                          double p_del, double* out);

/* p'' = x / (n sqrt(p)); rejected unless the result lies in [0,1]. */
domlab_status domlab_deletion_probability(uint32_t n, double p, double x,
                                          double* out);

/* ---------------------------------------------------------------- */
/* Concentration prediction                                         */
/* ---------------------------------------------------------------- */

typedef enum domlab_regime {
  DOMLAB_REGIME_SPARSE_SEARCH = 0,
  DOMLAB_REGIME_DENSE_CLOSED_FORM = 1,
  DOMLAB_REGIME_VERY_DENSE = 2
} domlab_regime;

typedef struct domlab_prediction_view {
  uint32_t r_hat;
  uint32_t interval_lo; /* r_hat + 1 */
  uint32_t interval_hi; /* r_hat + 2 */
  double log_e_at_r_hat;        /* -HUGE_VAL when the expectation is 0 */
  double log_e_at_r_hat_plus_2;
  int regime;     /* domlab_regime */
  double dense_r_hat; /* NaN unless regime is DENSE_CLOSED_FORM */
} domlab_prediction_view;

domlab_status domlab_predict(uint32_t n, double p,
                             domlab_prediction_view* out);

/* Same data as a JSON document (snake_case keys, 17-significant-digit
 * reals, non-finite reals serialized as null). */
domlab_status domlab_predict_json(uint32_t n, double p, char** out_json);

/* ---------------------------------------------------------------- */
/* Monte Carlo experiments                                          */
/* ---------------------------------------------------------------- */

/* config_json describes one experiment:
 *   {"kind":"concentration"|"deletion"|"crucial_distribution"|
 *           "alteration"|"talagrand_sanity",
 *    "n":..,"p":..,"trials":..,"master_seed":..,
 *    "solver_budget_seconds":..,          (solving kinds, default 10)
 *    "x":..,"fixed_graph":..,             (deletion)
 *    "r":..,                              (crucial_distribution)
 *    "b_values":[..],"t_values":[..]}     (talagrand_sanity)
 * Unknown keys and knobs that do not match the kind are rejected.
 *
 * Trials are independent units of work scheduled across `threads`
 * workers; the report is byte-identical for any thread count.
 * out_report_json receives the JSON report, out_csv the per-trial CSV
 * (the CSV carries wall-clock millis and is not reproducible). Either
 * output pointer may be NULL if not wanted. */
domlab_status domlab_experiment_run(const char* config_json, size_t len,
                                    uint32_t threads, char** out_report_json,
                                    char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* DOMLAB_H */

/* listlab — list update algorithms, exact offline optima, projectivity
 * analysis, and the two-item adversarial harness, behind a C ABI.
 *
 * Handles are opaque; every call returns a status code. On failure,
 * lu_last_error() holds a message for the calling thread. Strings returned
 * through char** are heap-allocated; release them with lu_string_free().
 * Rich results are JSON documents with deterministic (sorted-key) layout.
 */

#ifndef LISTLAB_H
#define LISTLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lu_algorithm lu_algorithm;

typedef enum lu_status {
    LU_OK = 0,
    LU_ERR_INVALID = 1,  /* malformed input or precondition violation */
    LU_ERR_GUARD = 2,    /* a resource guard tripped; see lu_last_error() */
    LU_ERR_NOMEM = 3,
    LU_ERR_INTERNAL = 4
} lu_status;

const char *lu_status_name(lu_status status);

/* Message for the most recent failure on this thread; never NULL. */
const char *lu_last_error(void);

void lu_string_free(char *s);

/* Creates an algorithm over n_items items (ids 0..n-1). Accepted specs:
 *   mtf | ts | transpose | fc | lmtf | bit | comb
 *   bit:seed=<u64>   one bit vector sampled from the seed (any n)
 *   crf:<file>       critical-request table, CSV rows item,i,f
 *                    (i may be '*' for every count past the table)
 * bit and comb are distributions: simulate/analyze reject them, ratio and
 * lowerbound evaluate them exactly (guard: n <= 16 for the 2^n atoms). */
lu_status lu_algorithm_create(const char *spec, int n_items, lu_algorithm **out);
void lu_algorithm_free(lu_algorithm *alg);
const char *lu_algorithm_name(const lu_algorithm *alg);
int lu_algorithm_is_randomized(const lu_algorithm *alg);

/* States are bracketed item lists ("[abc]", "[yx]"); sequences are item
 * letters with an optional repetition macro ("x^3(yx)^2"). The letters of
 * the initial state name the items; sorted letter order gives ids. */

/* Number of items in a state string, for sizing lu_algorithm_create. */
lu_status lu_state_item_count(const char *state, int *out);

/* Unordered item pairs whose relative order differs (minimum number of
 * adjacent transpositions between the states). */
lu_status lu_kendall_distance(const char *state_a, const char *state_b, long long *out);

/* Items in front of `item` in `state`. */
lu_status lu_access_cost(const char *state, const char *item, long long *out);

/* Total online cost of serving sigma from the initial state. */
lu_status lu_serve_cost(const lu_algorithm *alg, const char *initial, const char *sigma,
                        long long *out);

/* JSON: {"cost":..,"final":"[..]","states":[..]? } */
lu_status lu_simulate(const lu_algorithm *alg, const char *initial, const char *sigma,
                      int with_trace, char **json_out);

/* Exact offline optimum (guard n <= 6 unless force) or the pairwise lower
 * bound. JSON: {"cost":..,"method":"exact"|"pairwise"} */
lu_status lu_opt(const char *initial, const char *sigma, int pairwise, int force,
                 char **json_out);

/* Exhaustive two-item competitiveness probe over both initial states and
 * all sequences up to maxlen (guard maxlen <= 14 unless force). JSON keys:
 * sup_ratio_num/_den/_decimal, argmax_sigma, argmax_initial, vacuous. */
lu_status lu_ratio(const lu_algorithm *alg, int maxlen, int force, char **json_out);

/* Projectivity check up to maxlen plus the container structure up to the
 * depth bound, from the identity initial state. JSON keys: projective,
 * counterexample?, containers?, truncation_ties, diagnostics?. */
lu_status lu_analyze(const lu_algorithm *alg, int depth, int maxlen, char **json_out);

/* Two-item adversarial harness from [yx]: exact aggregate ratio over the
 * request family, good-state count, optionally the per-offset cost table
 * and a per-state CSV (i,j,good,cost_sum). */
lu_status lu_lowerbound(const lu_algorithm *alg, int m_hat, int k_reps, int t_scale,
                        long long b, int emit_table1, const char *states_csv_path,
                        char **json_out);

#ifdef __cplusplus
}
#endif

#endif /* LISTLAB_H */

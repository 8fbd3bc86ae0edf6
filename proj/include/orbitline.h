/* orbitline -- exact polynomial semigroup dynamics on the plane.
 *
 * Plain-C surface over the core library. All structured values cross the
 * boundary as JSON text; every returned char* is heap-allocated and must be
 * released with ol_string_free. Calls never throw and never abort: failures
 * come back as an ol_status >= 10 with a message in ol_last_error().
 *
 * Rationals are exact "p/q" strings. Polynomials are {"coeffs": [c0, c1,
 * ...]} with the constant term first. Linear maps are {"alpha": "...",
 * "beta": "..."} meaning alpha*X + beta.
 */
#ifndef ORBITLINE_H
#define ORBITLINE_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define OL_API __declspec(dllexport)
#else
#define OL_API __attribute__((visibility("default")))
#endif

typedef struct ol_system ol_system;

typedef enum ol_status {
  OL_OK = 0,
  /* negative results that still fill the output JSON */
  OL_NOT_FOUND = 2,
  OL_INCONCLUSIVE = 3,
  /* errors: output parameters are untouched */
  OL_ERR_PARSE = 10,
  OL_ERR_VALIDATION = 11,
  OL_ERR_DEGREE_TOO_LOW = 12,
  OL_ERR_DEGREE_MISMATCH = 13,
  OL_ERR_DEGREE_SUM_TOO_LOW = 14,
  OL_ERR_NOT_INVERTIBLE = 15,
  OL_ERR_PRECONDITION = 16,
  OL_ERR_MONOMIAL_EQUIVALENT = 17,
  OL_ERR_BUDGET = 18,
  OL_ERR_INSUFFICIENT_SUPPORT = 19,
  OL_ERR_BAD_INDEX = 20,
  OL_ERR_HYPOTHESIS = 21,
  OL_ERR_INVALID_ARGUMENT = 22,
  OL_ERR_IO = 23,
  OL_ERR_INTERNAL = 24
} ol_status;

/* Static strings; do not free. ol_last_error is per-thread and refers to
 * the most recent failing call. */
OL_API const char* ol_version(void);
OL_API const char* ol_last_error(void);

OL_API void ol_string_free(char* s);

/* ---- systems ---------------------------------------------------------- */

/* A system file: {"generators": [{"f": ..., "g": ...}, ...],
 * "base": {"x": ..., "y": ...}, optional "line", "sequences", "budget",
 * "rng_seed"}. Every coordinate polynomial must have degree >= 2. */
OL_API ol_status ol_system_parse(const char* json_text, ol_system** out);
OL_API ol_status ol_system_parse_file(const char* path, ol_system** out);
OL_API ol_status ol_system_to_json(const ol_system* sys, char** out_json);
OL_API void ol_system_free(ol_system* sys);

/* Overrides the stored search budgets; pass 0 to keep a value. */
OL_API ol_status ol_system_set_budget(ol_system* sys, long long max_words,
                                      long long max_digits);

/* ---- polynomial algebra ------------------------------------------------ */

/* outer(inner(X)), exactly. */
OL_API ol_status ol_poly_compose(const char* outer_json, const char* inner_json,
                                 char** out_json);

/* Kills the subleading term: returns {"alpha", "beta", "normalized"} with
 * normalized(X) = alpha + P(X + beta), zero constant and X^(d-1) terms. */
OL_API ol_status ol_poly_depress(const char* poly_json, char** out_json);

/* Whether u∘P∘v = X^d for linear u, v; OL_OK with the witness maps when it
 * is, OL_NOT_FOUND with {"equivalent": false} when it is not. */
OL_API ol_status ol_poly_monomial_equivalent(const char* poly_json, char** out_json);

/* ---- heights ----------------------------------------------------------- */

/* log max(|p|, q) of the reduced fraction p/q. */
OL_API ol_status ol_height_naive(const char* rational_text, double* out);

/* Same value plus the exact integer log-arguments:
 * {"value", "log_argument_num", "log_argument_den"}. */
OL_API ol_status ol_height_naive_detail(const char* rational_text, char** out_json);

/* C with |h(P(x)) - deg(P) h(x)| <= C for all rational x (sound, not
 * minimal). */
OL_API ol_status ol_height_map_constant(const char* poly_json, double* out);

/* c with |h(l(x)) - h(x)| <= c for all rational x, l linear. */
OL_API ol_status ol_height_shift_constant(const char* linear_json, double* out);

/* Limit of h(x_n)/(d_1...d_n) along the chain picked by an eventually
 * periodic sequence ({"preperiod": [...], "cycle": [...]} or the name of a
 * sequence stored in the system). coordinate: 0 = f maps, 1 = g maps.
 * x0_text NULL means the matching coordinate of the system base point.
 * Output: {"estimate", "error_bound", "depth", "degree_product",
 * "preperiodic", "depth_capped"}. */
OL_API ol_status ol_height_sequence(const ol_system* sys, const char* seq_json,
                                    int coordinate, const char* x0_text,
                                    double target_error, int max_depth,
                                    char** out_json);

/* Height attached to the whole generator set on one coordinate, averaged
 * over all words of the given depth. */
OL_API ol_status ol_height_eigensystem(const ol_system* sys, int coordinate,
                                       const char* x0_text, int depth,
                                       char** out_json);

/* ---- decomposition solvers --------------------------------------------- */

/* Given A∘B = C∘D with deg A = deg C and A not a monomial composed with
 * linears, finds the linear l with A = C∘l^{-1} and B = l∘D. OL_OK with
 * {"solvable": true, "l": ...}; OL_NOT_FOUND when no such l exists. */
OL_API ol_status ol_solve_rigidity(const char* a_json, const char* b_json,
                                   const char* c_json, const char* d_json,
                                   char** out_json);

/* All linear pairs (a, b) with a∘F = G∘b, for same-degree F, G that are not
 * monomial-equivalent. OL_OK with the (at most two) solutions sorted;
 * OL_NOT_FOUND with an empty list. */
OL_API ol_status ol_solve_linear_pair(const char* f_json, const char* g_json,
                                      char** out_json);

/* Checks F = E∘H∘a and G = E∘c∘H∘b exactly for witness
 * {"E", "H", "a", "b", "c"}. */
OL_API ol_status ol_verify_decomposition(const char* f_json, const char* g_json,
                                         const char* witness_json, int* out_ok);

/* ---- orbits ------------------------------------------------------------ */

/* params: {"mode": "semigroup", "max_depth": N, "dedup": bool,
 *          "intersect": bool}
 *     or  {"mode": "forward" | "coherent", "sequence": <spec or name>,
 *          "n_max": N, "intersect": bool}
 * "intersect" keeps only points on the system line. Output: {"records":
 * [{"point", "word", "order", "depth", "on_line"}...], "truncated",
 * "closed", "words_visited"}. */
OL_API ol_status ol_orbit(const ol_system* sys, const char* params_json,
                          char** out_json);

/* Longest common outermost run of a word collection: words_json is an array
 * of words (bare arrays are read inner-first). OL_OK with {"letters",
 * "order": "outer_first", "support"}. */
OL_API ol_status ol_extract_suffix(const char* words_json, int min_support,
                                   char** out_json);

/* ---- certificates and finiteness criteria ------------------------------ */

/* Shortest (then lexicographically least) word whose f- and g-compositions
 * agree, optionally up to a linear link: F_w = link ∘ G_w. OL_OK when
 * found; OL_NOT_FOUND reports the exhausted length. */
OL_API ol_status ol_certificate_search(const ol_system* sys, int max_k,
                                       const char* link_json, char** out_json);

/* Replaces each g_i by l∘g_i∘l^{-1}, moves the base point and any stored
 * line along, so diagonal hits of the image match line hits of the source. */
OL_API ol_status ol_conjugate(const ol_system* sys, const char* linear_json,
                              ol_system** out);

/* Least (m, k) with the two sequences' shifted length-k windows composing
 * to the same map on the chosen coordinate. */
OL_API ol_status ol_common_word(const ol_system* sys, int coordinate,
                                const char* phi_json, const char* psi_json,
                                int m_max, int k_max, char** out_json);

/* Degree-dominance criterion along one sequence; params: {"sequence": ...,
 * "target_error": e, "max_depth": N, "verify_depth": V}. OL_OK when the
 * report certifies a stop depth, OL_INCONCLUSIVE otherwise (report still
 * returned). */
OL_API ol_status ol_finiteness_degree(const ol_system* sys, const char* params_json,
                                      char** out_json);

/* Level height-sum criterion over the whole system (needs
 * sum deg f > sum deg g > generator count). */
OL_API ol_status ol_finiteness_heightsum(const ol_system* sys, int k_max,
                                         int detect_depth, char** out_json);

/* All integer (x, y), |x|,|y| <= bound, with F(x) = G(y); never scans the
 * full y range when deg G >= 2. */
OL_API ol_status ol_integral_solutions(const char* f_json, const char* g_json,
                                       long long bound, char** out_json);

/* Exact coordinatewise commutativity of all generator pairs. */
OL_API ol_status ol_generators_commute(const ol_system* sys, int* out_commute);

#ifdef __cplusplus
}
#endif

#endif /* ORBITLINE_H */

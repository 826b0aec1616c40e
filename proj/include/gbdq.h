#ifndef GBDQ_H
#define GBDQ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by every fallible call.  On failure the handle /
 * string out-params are left untouched and gbdq_last_error() carries a
 * human-readable detail message for the calling thread. */
typedef enum gbdq_status {
  GBDQ_OK = 0,
  GBDQ_ERR_INVALID = 1,  /* malformed input or violated precondition */
  GBDQ_ERR_VERIFY = 2,   /* a consistency check inside the engine tripped */
  GBDQ_ERR_NOMEM = 3,
  GBDQ_ERR_INTERNAL = 4
} gbdq_status;

/* Opaque handles.  Create with the gbdq_* constructors below, release with
 * the matching *_free.  Freeing NULL is a no-op. */
typedef struct gbdq_chainset_t gbdq_chainset_t; /* ordered set of labeled chains */
typedef struct gbdq_graph_t gbdq_graph_t;       /* edge-colored descent graph */
typedef struct gbdq_report_t gbdq_report_t;     /* axiom verification report */
typedef struct gbdq_census_t gbdq_census_t;     /* per-length graph census */

const char* gbdq_version(void);

/* Detail message for the most recent failure on this thread, or "" if the
 * last call succeeded.  The pointer stays valid until the next gbdq call
 * on the same thread. */
const char* gbdq_last_error(void);

/* All char** out-params give ownership of a heap buffer to the caller;
 * release it with gbdq_string_free. */
void gbdq_string_free(char* s);

/* ---- chain sets ------------------------------------------------------- */

/* Number of canonical chains of length n, without materializing them.
 * jobs <= 0 picks a worker count automatically. */
gbdq_status gbdq_count_canonical(int n, int jobs, uint64_t* out);

/* Every labeled chain of length n in the canonical family. */
gbdq_status gbdq_chains_canonical(int n, int jobs, gbdq_chainset_t** out);

/* Maximal chains of the interval below zeta, written in cycle notation,
 * e.g. "(1,4,5,3,2,6)". */
gbdq_status gbdq_chains_interval(const char* zeta_cycles, gbdq_chainset_t** out);

/* Chains of the k-Bruhat interval [u, w], both in one-line notation,
 * transported to the canonical labeling. */
gbdq_status gbdq_chains_k_bruhat(const char* u_one_line, const char* w_one_line,
                                 int k, gbdq_chainset_t** out);

void gbdq_chainset_free(gbdq_chainset_t* cs);
gbdq_status gbdq_chainset_count(const gbdq_chainset_t* cs, uint64_t* out);
gbdq_status gbdq_chainset_text(const gbdq_chainset_t* cs, char** out);
gbdq_status gbdq_chainset_json(const gbdq_chainset_t* cs, char** out);

/* Fundamental-basis generating function of the chain descents and, when it
 * is symmetric, its Schur expansion.  *symmetric reports which case holds;
 * *schur_text is the expansion or the non-symmetric residual. */
gbdq_status gbdq_chainset_expand(const gbdq_chainset_t* cs, char** q_text,
                                 char** schur_text, int* symmetric);
gbdq_status gbdq_chainset_expand_json(const gbdq_chainset_t* cs, char** out);

/* ---- graphs ----------------------------------------------------------- */

gbdq_status gbdq_graph_build(const gbdq_chainset_t* cs, gbdq_graph_t** out);
void gbdq_graph_free(gbdq_graph_t* g);
gbdq_status gbdq_graph_vertex_count(const gbdq_graph_t* g, uint64_t* out);
gbdq_status gbdq_graph_edge_count(const gbdq_graph_t* g, uint64_t* out);
gbdq_status gbdq_graph_component_count(const gbdq_graph_t* g, uint64_t* out);
gbdq_status gbdq_graph_text(const gbdq_graph_t* g, char** out);
gbdq_status gbdq_graph_json(const gbdq_graph_t* g, char** out);
gbdq_status gbdq_graph_dot(const gbdq_graph_t* g, char** out);

/* Isomorphism certificate of a connected graph, hex-encoded. */
gbdq_status gbdq_graph_certificate(const gbdq_graph_t* g, char** out);

/* ---- verification ----------------------------------------------------- */

/* Runs the full axiom battery over the canonical chains of length n.
 * corrupt != 0 swaps in a deliberately broken involution table; the report
 * must then fail, which exercises the verifier's negative path. */
gbdq_status gbdq_verify_chains(int n, int jobs, int corrupt, gbdq_report_t** out);

/* Same battery over the standard tableaux of the given shape
 * (shape = weakly decreasing positive parts). */
gbdq_status gbdq_verify_tableaux(const int* shape, size_t parts, gbdq_report_t** out);

void gbdq_report_free(gbdq_report_t* r);
gbdq_status gbdq_report_passed(const gbdq_report_t* r, int* out);
gbdq_status gbdq_report_text(const gbdq_report_t* r, char** out);
gbdq_status gbdq_report_json(const gbdq_report_t* r, char** out);

/* ---- census ----------------------------------------------------------- */

gbdq_status gbdq_census_run(int n, int jobs, gbdq_census_t** out);
void gbdq_census_free(gbdq_census_t* c);
gbdq_status gbdq_census_chains(const gbdq_census_t* c, uint64_t* out);
gbdq_status gbdq_census_graphs(const gbdq_census_t* c, uint64_t* out);
gbdq_status gbdq_census_iso_classes(const gbdq_census_t* c, uint64_t* out);
gbdq_status gbdq_census_orbits(const gbdq_census_t* c, uint64_t* out);
gbdq_status gbdq_census_text(const gbdq_census_t* c, char** out);
gbdq_status gbdq_census_json(const gbdq_census_t* c, char** out);

/* ---- Schubert oracle -------------------------------------------------- */

/* Basis coefficients of S_u * s_lambda(z_1..z_k), JSON keyed by one-line
 * permutations. */
gbdq_status gbdq_oracle_coeffs(const char* u_one_line, const int* lambda,
                               size_t parts, int k, char** out_json);

/* Chain count, generating function, and Schur expansion of [u, w] in
 * k-Bruhat order; with_oracle != 0 additionally cross-checks every Schur
 * coefficient against the polynomial oracle and reports the verdict. */
gbdq_status gbdq_interval_expand(const char* u_one_line, const char* w_one_line,
                                 int k, int with_oracle, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* GBDQ_H */

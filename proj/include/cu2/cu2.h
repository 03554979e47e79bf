/* C interface to the Cu2 semigroup-algebra library.
 *
 * All computation runs behind opaque handles; structured results come
 * back as JSON strings. Strings returned by the library are heap
 * allocated and must be released with cu2_string_free. Every fallible
 * call returns a cu2_status; on failure cu2_last_error() describes the
 * problem (the message is thread-local and valid until the next failing
 * call on the same thread).
 */

#ifndef CU2_H
#define CU2_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cu2_status {
  CU2_OK = 0,
  CU2_ERR_PARSE = 1,            /* bad surface syntax / JSON / spec string */
  CU2_ERR_DOMAIN = 2,           /* precondition violated */
  CU2_ERR_NOT_IN_IDEAL = 3,     /* certificate requested outside the ideal */
  CU2_ERR_IN_IDEAL = 4,         /* factorization requested inside the ideal */
  CU2_ERR_ZERO_ELEMENT = 5,     /* factorization requested for zero */
  CU2_ERR_INVALID_ARGUMENT = 6, /* null pointers, bad ranges */
  CU2_ERR_INTERNAL = 7
} cu2_status;

/* An element of the semigroup algebra (finitely supported, exact
 * Gaussian-rational coefficients). */
typedef struct cu2_element cu2_element;

/* A bounded functional on the algebra (a lazy evaluation rule). */
typedef struct cu2_functional cu2_functional;

const char* cu2_status_name(cu2_status status);
const char* cu2_last_error(void);
void cu2_string_free(char* s);

/* ---- elements ---- */

/* Surface syntax, e.g. "e - s1#s1* - s2#s2*" or "1/2 s1* + 1/2 s2*". */
cu2_status cu2_element_parse(const char* text, cu2_element** out);
/* {"terms":[{"i":[...],"j":[...],"re":"p/q","im":"p/q"},...]} */
cu2_status cu2_element_from_json(const char* json_text, cu2_element** out);
void cu2_element_free(cu2_element* f);

cu2_status cu2_element_to_json(const cu2_element* f, char** out);
cu2_status cu2_element_to_text(const cu2_element* f, char** out);

cu2_status cu2_sharp(const cu2_element* f, const cu2_element* g, cu2_element** out);
cu2_status cu2_add(const cu2_element* f, const cu2_element* g, cu2_element** out);
cu2_status cu2_involution(const cu2_element* f, cu2_element** out);

/* l1 norm as a double; the exact variant yields a canonical "p/q" string
 * for elements with real coefficients and fails with CU2_ERR_DOMAIN
 * otherwise. */
cu2_status cu2_l1_norm(const cu2_element* f, double* out);
cu2_status cu2_l1_norm_exact(const cu2_element* f, char** out);

/* 1 if f lies in the closed ideal generated by the defect projection,
 * 0 if not, negative on error. */
int cu2_in_ideal(const cu2_element* f);

/* Exact generator decomposition of an ideal element (JSON, re-verified
 * before returning). */
cu2_status cu2_ideal_certificate(const cu2_element* f, char** json_out);

/* Witness g # f # h = delta_e for a non-ideal element (JSON with the
 * search trace; re-verified before returning). */
cu2_status cu2_factorize_identity(const cu2_element* f, char** json_out);

/* l1(g) * l1(h) of the witness found for f. */
cu2_status cu2_cpi_upper_bound(const cu2_element* f, double* out);

/* ---- functionals ---- */

/* Spec strings: "tau", "mu:1,21" (comma-separated nonempty words over
 * the digits 1/2), or "fs:EXPR" for the finite-support functional with
 * the coefficients of the element EXPR. */
cu2_status cu2_functional_parse(const char* spec, cu2_functional** out);
void cu2_functional_free(cu2_functional* phi);

/* Dual pairing <f, phi>; JSON {"re":"p/q","im":"p/q","abs":x}. */
cu2_status cu2_pair(const cu2_element* f, const cu2_functional* phi, char** json_out);

/* Certified lower bound |<f,phi>|/||phi|| for the quotient norm of the
 * image of f; max_length bounds the fixed-point pre-check and must
 * exceed the support length of f. Pass max_length <= 0 to use the
 * smallest admissible length; checked_length (nullable) receives the
 * length actually used. */
cu2_status cu2_quotient_norm_lower(const cu2_element* f, const cu2_functional* phi,
                                   int max_length, double* out, int* checked_length);

/* Finite-stage fixed-point check of the adjoint expansion operator;
 * JSON report. */
cu2_status cu2_tstar_check(const cu2_functional* phi, int max_length, char** json_out);

/* Trace diagnostics (trace identity, value at e, ideal-generator
 * pairings); JSON report. */
cu2_status cu2_trace_checks(const cu2_functional* phi, int max_length, char** json_out);

/* ---- sequence-space representation ---- */

/* vector_json: {"entries":[{"n":1,"re":1.0,"im":0.0},...]} */
cu2_status cu2_rep_apply(const cu2_element* f, const char* vector_json, double p,
                         char** json_out);

/* Operator-relation checks on basis vectors e_1..e_n plus randomized
 * partition/isometry checks (seeded); JSON report. */
cu2_status cu2_rep_check(int n, double p, unsigned seed, char** json_out);

/* Norm-collapse table for N = 1..n_max at exponent p. Set csv nonzero
 * for the CSV rendering, otherwise JSON rows. */
cu2_status cu2_collapse(int n_max, double p, int csv, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CU2_H */

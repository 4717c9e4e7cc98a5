/*
   Copyright 2026 The upm authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * C API of the upm shared library.
 *
 * Conventions:
 *   - Every function returns a upm_status; results travel through out
 *     parameters. UPM_OK guarantees the outputs are valid.
 *   - On failure upm_last_error() holds a one-line diagnostic for the
 *     calling thread until its next upm call.
 *   - Scalars cross this boundary as exact strings: "p" or "p/q" with q > 0
 *     in lowest terms, Gaussian values as {"re":"p/q","im":"p/q"}.
 *     Sequence arguments are comma-separated scalars (commas inside {...}
 *     belong to the complex object).
 *   - char* outputs are heap strings owned by the caller; release them with
 *     upm_string_free(). Handles are released with their *_free().
 */

#ifndef UPM_UPM_H
#define UPM_UPM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum upm_status {
  UPM_OK = 0,
  UPM_ERR_INVALID = 1,  /* argument outside its contract                  */
  UPM_ERR_PARSE = 2,    /* malformed scalar/JSON input                    */
  UPM_ERR_DOMAIN = 3,   /* operation not applicable to these inputs       */
  UPM_ERR_INTERNAL = 4  /* unexpected library failure; please report      */
} upm_status;

typedef struct upm_spec upm_spec;     /* (k; x, y, r, ell) input data      */
typedef struct upm_matrix upm_matrix; /* dense exact matrix                */

const char* upm_version(void);
const char* upm_status_name(upm_status s);
const char* upm_last_error(void);
void upm_string_free(char* s);

/* ---- spec construction ------------------------------------------------ */

/* x/y/r are comma-separated scalar lists with at least k entries each;
 * r must not repeat among its first k entries. */
upm_status upm_spec_create(int k, int ell, const char* x, const char* y, const char* r, upm_spec** out);

/* Row-wise consecutive integers from `start` (a positive decimal string),
 * raised to the ell-th power. */
upm_status upm_spec_constant_gap(const char* start, int k, int ell, upm_spec** out);

upm_status upm_spec_from_json(const char* json_text, upm_spec** out);
upm_status upm_spec_to_json(const upm_spec* s, char** out);
void upm_spec_free(upm_spec* s);

/* ---- matrices ---------------------------------------------------------- */

/* The k x k matrix with entries (x_i + r_j y_i)^ell. */
upm_status upm_spec_build(const upm_spec* s, upm_matrix** out);

upm_status upm_matrix_from_json(const char* json_text, upm_matrix** out);

/* format is "json", "csv" or "table"; output is byte-deterministic. */
upm_status upm_matrix_format(const upm_matrix* m, const char* format, char** out);

int upm_matrix_rows(const upm_matrix* m);
int upm_matrix_cols(const upm_matrix* m);
void upm_matrix_free(upm_matrix* m);

/* ---- determinants ------------------------------------------------------ */

/* Exact determinant by fraction-free elimination. */
upm_status upm_matrix_det(const upm_matrix* m, char** out);

/* Exact determinant as the sum over increasing exponent tuples of
 * generalized-Vandermonde times coefficient-submatrix determinants;
 * jobs > 1 parallelizes the sum with bit-identical output. */
upm_status upm_spec_det_expansion(const upm_spec* s, int jobs, char** out);

/* Column-manipulated matrix A' with |det A'| = |det A| and the trailing
 * columns collapsed to (ell! y_i^ell). Requires r = (1..k) and k >= ell+1
 * (UPM_ERR_DOMAIN otherwise). */
upm_status upm_spec_column_reduce(const upm_spec* s, upm_matrix** out);

/* Regularity verdict as JSON {"status","witness","method"}; *regular is 1
 * for a regular matrix, 0 for singular (may be NULL). */
upm_status upm_spec_classify(const upm_spec* s, char** verdict_json, int* regular);

/* ---- Vandermonde / Schur / combinatorics ------------------------------- */

/* prod_{i<j} (u_j - u_i). */
upm_status upm_vandermonde(const char* points, char** out);

/* det(u_i^alpha_j) for a strictly increasing integer tuple alpha. */
upm_status upm_generalized_vandermonde(const char* points, const char* alpha, char** out);

/* Schur polynomial value; lambda is a comma-separated non-increasing
 * partition, points has the same length. */
upm_status upm_schur_eval(const char* lambda, const char* points, char** out);

/* Monomial expansion of s_lambda in k symbols as polynomial JSON. */
upm_status upm_schur_expand(const char* lambda, int k, char** poly_json);

/* Number of semistandard tableaux of shape lambda and content mu with
 * entries in 1..k, as a decimal string. */
upm_status upm_gamma_coefficient(const char* lambda, const char* mu, int k, char** out);

/* sum_{v=0..ell} (-1)^v C(ell,v) q(v) for q given by coefficients a0,a1,...
 * of degree at most ell. */
upm_status upm_finite_diff_sum(int ell, const char* coefficients, char** out);

/* C(n, k) as a decimal string; 0 when k < 0 or k > n. */
upm_status upm_binomial(int n, int k, char** out);

#ifdef __cplusplus
}
#endif

#endif /* UPM_UPM_H */

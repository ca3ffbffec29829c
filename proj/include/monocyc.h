/* monocyc: exact computation with the recurrence w_n, its cyclotomic-shift
 * factors, and their monogenicity and Galois-cyclicity verdicts.
 *
 * C interface over the C++ core. All handles are opaque; every function
 * returns an mc_status, with MC_OK on success. Output strings are allocated
 * by the library and must be released with mc_string_free; polynomial
 * handles with mc_poly_free. Structured results are JSON with all
 * arbitrary-precision integers rendered as decimal strings.
 */
#ifndef MONOCYC_H
#define MONOCYC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mc_status {
    MC_OK = 0,
    MC_ERR_NOT_DIVISIBLE,
    MC_ERR_ZERO_POLYNOMIAL,
    MC_ERR_NON_MONIC,
    MC_ERR_MODULUS_MISMATCH,
    MC_ERR_MODULUS_TOO_LARGE,
    MC_ERR_OUT_OF_RANGE,
    MC_ERR_INDEX_OUT_OF_RANGE,
    MC_ERR_FACTORIZATION_TOO_HARD,
    MC_ERR_NOT_A_SQUARE_QUOTIENT,
    MC_ERR_DEGREE_MISMATCH,
    MC_ERR_EVEN_INDEX,
    MC_ERR_PRODUCT_MISMATCH,
    MC_ERR_PARSE,
    MC_ERR_UNSUPPORTED_MODULUS,
    MC_ERR_INTERNAL,
    MC_ERR_INVALID_ARGUMENT
} mc_status;

/* opaque handle for a polynomial with arbitrary-precision integer
 * coefficients */
typedef struct mc_poly mc_poly;

const char* mc_status_name(mc_status status);

/* message describing the most recent failure on this thread */
const char* mc_last_error(void);

void mc_string_free(char* s);
void mc_poly_free(mc_poly* p);

/* ---- polynomials ------------------------------------------------------- */

/* text is either a JSON array of decimal coefficient strings (ascending,
 * e.g. ["-7","14","-7","1"]) or a human form such as "x^3-7x^2+14x-7" */
mc_status mc_poly_parse(const char* text, mc_poly** out);
mc_status mc_poly_to_json(const mc_poly* p, char** out);
mc_status mc_poly_to_pretty(const mc_poly* p, char** out);
/* degree; the zero polynomial reports -1 */
mc_status mc_poly_degree(const mc_poly* p, int64_t* out);
mc_status mc_poly_discriminant(const mc_poly* p, char** decimal_out);
mc_status mc_poly_eval(const mc_poly* p, const char* t_decimal, char** decimal_out);

/* ---- sequences --------------------------------------------------------- */

/* kind: "w", "W", "v", "F", "L" */
mc_status mc_seq_term(const char* kind, uint64_t n, mc_poly** out);

/* ---- cyclotomic constructions ------------------------------------------ */

mc_status mc_cyclotomic(uint64_t N, mc_poly** out);
mc_status mc_real_cyclotomic(uint64_t N, mc_poly** out);
mc_status mc_omega(uint64_t d, mc_poly** out);

/* factorization of w_n into the omega factors; enrich != 0 adds per-factor
 * discriminants and verdicts on top of the canonical shape */
mc_status mc_factor_w_json(uint64_t n, int enrich, char** json_out);

/* ---- verdicts and reports ---------------------------------------------- */

mc_status mc_condition_c_json(uint64_t N, char** json_out);
mc_status mc_unit_group_json(uint64_t N, uint64_t bound, char** json_out);
mc_status mc_field_disc_real_cyclotomic(uint64_t N, char** decimal_out);
mc_status mc_monogenic_report_json(const mc_poly* p, uint64_t seed, char** json_out);
mc_status mc_omega_report_json(uint64_t d, char** json_out);
/* Galois class of irreducible x^4 + p x^2 + q: "C4", "V4" or "D4" */
mc_status mc_even_quartic_class(const char* p_decimal, const char* q_decimal, char** class_out);
mc_status mc_corpus_report_json(char** json_out);
mc_status mc_table_json(uint64_t max_n, char** json_out);

/* ---- verification sweeps ------------------------------------------------ */

/* suite: products | discs | condition-c | dedekind | field-disc | primitive |
 * eisenstein | distinctness | corpus | all. max = 0 selects the default.
 * Returns a single report object, or an array for "all". *failures_out
 * receives the total failure count. */
mc_status mc_verify_json(const char* suite, uint64_t max, uint32_t threads, uint64_t seed,
                         char** json_out, uint64_t* failures_out);

/* newline-separated suite names */
mc_status mc_suite_names(char** out);

#ifdef __cplusplus
}
#endif

#endif /* MONOCYC_H */

/* heckelab -- exact Hecke-algebra and L-function computations for Siegel
 * modular forms, behind a C interface.
 *
 * Every entry point returns an hl_status. Functions that produce output do
 * so through out-parameters; strings are heap-allocated and released with
 * hl_string_free. On failure hl_last_error() describes the problem for the
 * calling thread. Handles are opaque and freed with their matching _free.
 */
#ifndef HECKELAB_H
#define HECKELAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hl_status {
    HL_OK = 0,
    HL_VERIFICATION_FAILED = 1,
    HL_INVALID_INPUT = 2,
    HL_PARSE_ERROR = 3,
    HL_NOT_DIVISIBLE = 4,
    HL_NOT_A_UNIT = 5,
    HL_INCONSISTENT = 6,
    HL_UNDERDETERMINED = 7,
    HL_NOT_IN_IMAGE = 8,
    HL_UNSUPPORTED_GENUS = 9,
    HL_WEIGHT_TOO_SMALL = 10,
    HL_NON_INVERTIBLE_PARAMETER = 11,
    HL_POLE = 12,
    HL_NEGATIVE_ORDER = 13,
    HL_ZERO_INPUT = 14,
    HL_CONGRUENCE_HYPOTHESIS_FAILS = 15,
    HL_EMPTY_INPUT = 16,
    HL_INTERNAL = 17
} hl_status;

const char* hl_version(void);

/* Thread-local description of the most recent failure. */
const char* hl_last_error(void);

void hl_string_free(char* s);

/* ---------- exact sparse polynomials ---------- */

typedef struct hl_poly hl_poly;

/* Canonical JSON form: object mapping monomial keys ("p^2 u x0^3", "1" for
 * the constant term) to rational strings "num/den", keys in monomial order. */
hl_status hl_poly_from_json(const char* json, hl_poly** out);
hl_status hl_poly_to_json(const hl_poly* poly, char** json_out);

/* op is one of '+', '-', '*'. */
hl_status hl_poly_binop(const hl_poly* a, const hl_poly* b, char op, hl_poly** out);

/* Exact quotient; HL_NOT_DIVISIBLE when the division leaves a remainder. */
hl_status hl_poly_exact_divide(const hl_poly* num, const hl_poly* den, hl_poly** out);

/* 1 when equal, 0 when different, -1 on null input. */
int hl_poly_equal(const hl_poly* a, const hl_poly* b);

void hl_poly_free(hl_poly* poly);

/* ---------- verification pipelines ----------
 *
 * Each runner emits a JSON run report:
 *   {"command": ..., "status": "pass"|"fail"|"error",
 *    "artifacts": [...], "details": {...}}
 * HL_OK means the run completed and every check passed;
 * HL_VERIFICATION_FAILED means the run completed with a failing check (the
 * report is still produced); other codes signal unusable input or internal
 * failures.
 */

/* The tensor generating-series pipeline at genus 1 or 2: partial fractions,
 * denominator cancellation, quadratic-factor extraction, series oracle up to
 * X^(series_order - 2), optional Hecke reconstruction and functional
 * equation. series_order <= 0 selects the default (8). */
hl_status hl_run_rankin(int genus, int reconstruct, int check_feq, int series_order,
                        char** report);

/* type: "spinor" | "standard" | "triple". For spinor/standard the parameters
 * are symbolic unless eisenstein is nonzero, in which case weight selects the
 * Siegel-Eisenstein specialization (genus must be even) and the lambda([p])
 * normalization is checked. specialize_p >= 2 substitutes that integer for
 * the symbolic prime in the emitted factors. */
hl_status hl_run_euler(const char* type, int genus, long weight, int eisenstein,
                       long specialize_p, char** report);

/* Spin and standard Hodge types at (genus, weight); tensor_weight >= 0 adds
 * the tensor with the spin type of that weight; check_lift_m > 0 runs the
 * Kuenneth comparison for the genus-4m lift. */
hl_status hl_run_hodge(int genus, long weight, long tensor_weight, int check_lift_m,
                       char** report);

/* kind: "spin3" | "spin4" | "tensor-g2" | "triple"; weights has 1, 1, 2 or 3
 * entries respectively. numeric_checks adds the duplication-formula and
 * special-value table. */
hl_status hl_run_gamma(const char* kind, const long* weights, size_t weight_count,
                       int numeric_checks, char** report);

/* check: "ikeda-standard" | "eisenstein" | "quadratic". n is the lift index
 * (genus 2n, or m for the Eisenstein evidence). */
hl_status hl_run_lift(const char* check, int n, long weight, char** report);

/* Eisenstein family table a_n(k) for n <= bound at each weight, with slopes;
 * kummer_m > 0 additionally checks the Kummer congruence between consecutive
 * weight pairs at modulus p^kummer_m. */
hl_status hl_run_family(long p, const long* weights, size_t weight_count, long bound,
                        long kummer_m, char** report);

/* factors_json: object mapping prime strings to polynomial JSON in X. */
hl_status hl_run_dirichlet(const char* factors_json, long bound, char** report);

/* input_json: {"points": [[degree, "val"], ...]} or
 * {"coefficients": [poly-json, ...], "weights": {"Px": 3, ...}}.
 * csv/svg may be NULL when not wanted. */
hl_status hl_run_newton(const char* input_json, char** report, char** csv, char** svg);

#ifdef __cplusplus
}
#endif

#endif /* HECKELAB_H */

/*
 * gfm -- exact graded Frobenius-module computations over GF(p^e)[x,y].
 *
 * C API over opaque handles. Every function returns a gfm_status; outputs
 * come back through out-parameters. On any status other than GFM_OK a
 * thread-local message with details is available from gfm_last_error().
 * Strings returned through char** out-parameters are heap-allocated and must
 * be released with gfm_string_free().
 */

#ifndef GFM_H
#define GFM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gfm_status {
    GFM_OK = 0,
    GFM_ERR_INVALID_ARGUMENT = 1, /* bad parameter (p not prime, bad twist, ...) */
    GFM_ERR_PARSE = 2,            /* text does not match the element grammar */
    GFM_ERR_PRECISION = 3,        /* operation needs coefficients beyond a window */
    GFM_ERR_OVERFLOW = 4,         /* exponent arithmetic overflow */
    GFM_ERR_INTERNAL = 5
} gfm_status;

typedef struct gfm_poly gfm_poly;     /* element of GF(p^e)[x,y] */
typedef struct gfm_eelt gfm_eelt;     /* element of E = H^2_(x,y)(R) */
typedef struct gfm_report gfm_report; /* verification report */

const char* gfm_version(void);
const char* gfm_status_name(gfm_status status);
/* Message for the most recent failure on this thread; empty if none. */
const char* gfm_last_error(void);
void gfm_string_free(char* s);

/* --- polynomials: grammar "c*x^a*y^b" terms joined by '+' ----------------- */

gfm_status gfm_poly_parse(uint32_t p, uint32_t e, const char* text, gfm_poly** out);
gfm_status gfm_poly_render(const gfm_poly* poly, char** out);
gfm_status gfm_poly_add(const gfm_poly* a, const gfm_poly* b, gfm_poly** out);
gfm_status gfm_poly_mul(const gfm_poly* a, const gfm_poly* b, gfm_poly** out);
/* Degree and homogeneity; fails with GFM_ERR_INVALID_ARGUMENT on zero. */
gfm_status gfm_poly_degree(const gfm_poly* poly, int64_t* degree, int* homogeneous);
void gfm_poly_free(gfm_poly* poly);

/* --- E elements: grammar "c/(x^a*y^b)" terms joined by '+' ---------------- */

gfm_status gfm_eelt_parse(uint32_t p, uint32_t e, const char* text, gfm_eelt** out);
gfm_status gfm_eelt_render(const gfm_eelt* elt, char** out);
/* h/(x^A y^B) expanded to normal form; A, B >= 1. */
gfm_status gfm_eelt_from_fraction(const gfm_poly* h, int64_t A, int64_t B, gfm_eelt** out);
/* The R-action of a polynomial on an element of E. */
gfm_status gfm_eelt_act(const gfm_poly* r, const gfm_eelt* elt, gfm_eelt** out);
gfm_status gfm_eelt_is_zero(const gfm_eelt* elt, int* out);
/* Membership form of vanishing: (xy)^r h in (x^(A+r), y^(B+r)) for r <= r_max;
 * r_max < 0 selects the stable default bound. */
gfm_status gfm_cech_vanishes(const gfm_poly* h, int64_t A, int64_t B, int64_t r_max,
                             int* out);
void gfm_eelt_free(gfm_eelt* elt);

/* --- verification runs ----------------------------------------------------- */

gfm_status gfm_run_theorem(uint32_t p, uint32_t e, int64_t alpha_max, gfm_report** out);
gfm_status gfm_run_roundtrip(uint32_t p, uint32_t e, int64_t degree, int64_t precision,
                             uint64_t trials, uint64_t seed, gfm_report** out);
gfm_status gfm_run_zero_fuzz(uint32_t p, uint32_t e, uint64_t trials, uint64_t seed,
                             gfm_report** out);
gfm_status gfm_run_walkthrough(uint32_t p, uint32_t e, int64_t alpha, const char* t_text,
                               gfm_report** out);

/* 1 when every check in the report passed. */
int gfm_report_passed(const gfm_report* report);
/* Deterministic JSON (sorted keys, 2-space indent, trailing newline). */
gfm_status gfm_report_json(const gfm_report* report, char** out);
/* Human-readable one-line-per-check rendering. */
gfm_status gfm_report_text(const gfm_report* report, char** out);
void gfm_report_free(gfm_report* report);

#ifdef __cplusplus
}
#endif

#endif /* GFM_H */

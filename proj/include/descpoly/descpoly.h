/*
 * descpoly C API.
 *
 * Descent polynomials of permutations with bounded maximum drop, the
 * polynomials P_k / PP_k, their rational generating function, the juggling
 * map phi and its bubble-sort transform, and the verification suites.
 *
 * Every fallible call returns a descpoly_status. On failure the message is
 * available from descpoly_last_error() on the same thread until the next call.
 * Objects returned through an out-parameter are owned by the caller and must
 * be released with the matching *_free function. Accessors that return
 * "const" handles or strings borrow from their parent object.
 *
 * Handles are immutable after construction and may be shared across threads.
 */
#ifndef DESCPOLY_DESCPOLY_H
#define DESCPOLY_DESCPOLY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DESCPOLY_BUILDING)
#    define DESCPOLY_API __declspec(dllexport)
#  else
#    define DESCPOLY_API __declspec(dllimport)
#  endif
#else
#  define DESCPOLY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum descpoly_status {
  DESCPOLY_OK = 0,
  DESCPOLY_E_INVALID_ARGUMENT = 1,
  DESCPOLY_E_NEGATIVE_EXPONENT_RESIDUE = 2,
  DESCPOLY_E_CAP_EXCEEDED = 3,
  DESCPOLY_E_DROP_EXCEEDS_K = 4,
  DESCPOLY_E_INVALID_SEQUENCE = 5,
  DESCPOLY_E_INTERNAL = 6
} descpoly_status;

typedef enum descpoly_route {
  DESCPOLY_ROUTE_ENUMERATION = 0,
  DESCPOLY_ROUTE_RECURRENCE = 1,
  DESCPOLY_ROUTE_CLOSED_FORM = 2
} descpoly_route;

typedef enum descpoly_construction {
  DESCPOLY_CONSTRUCTION_FORMULA = 0,
  DESCPOLY_CONSTRUCTION_STRETCH = 1,
  DESCPOLY_CONSTRUCTION_DUPLICATION = 2
} descpoly_construction;

typedef enum descpoly_which {
  DESCPOLY_WHICH_P = 0,
  DESCPOLY_WHICH_PP = 1
} descpoly_which;

typedef enum descpoly_suite {
  DESCPOLY_SUITE_IDENTITIES = 0,
  DESCPOLY_SUITE_ROUTES = 1,
  DESCPOLY_SUITE_BIJECTIONS = 2,
  DESCPOLY_SUITE_JUGGLING = 3,
  DESCPOLY_SUITE_STRUCTURE = 4,
  DESCPOLY_SUITE_ALL = 5
} descpoly_suite;

/* Opaque handles. */
typedef struct descpoly_poly descpoly_poly;         /* integer polynomial */
typedef struct descpoly_polylist descpoly_polylist; /* list of polynomials */
typedef struct descpoly_gf descpoly_gf;             /* rational generating function */
typedef struct descpoly_report descpoly_report;     /* verification report */

DESCPOLY_API const char* descpoly_version(void);
DESCPOLY_API const char* descpoly_last_error(void);
DESCPOLY_API const char* descpoly_status_name(descpoly_status status);

/* Polynomials. Coefficients are decimal strings, lowest degree first. The
 * zero polynomial has 0 coefficients. */
DESCPOLY_API void descpoly_poly_free(descpoly_poly* p);
DESCPOLY_API size_t descpoly_poly_size(const descpoly_poly* p);
DESCPOLY_API const char* descpoly_poly_coeff(const descpoly_poly* p, size_t j);
DESCPOLY_API int descpoly_poly_equal(const descpoly_poly* a, const descpoly_poly* b);

DESCPOLY_API void descpoly_polylist_free(descpoly_polylist* l);
DESCPOLY_API size_t descpoly_polylist_size(const descpoly_polylist* l);
DESCPOLY_API const descpoly_poly* descpoly_polylist_at(const descpoly_polylist* l, size_t i);

/* B_{n,k}(y) by the chosen route. enum_cap bounds n for enumeration. */
DESCPOLY_API descpoly_status descpoly_bnk(unsigned n, unsigned k, descpoly_route route, unsigned enum_cap,
                                          descpoly_poly** out);
/* Eulerian polynomial A_n(x). */
DESCPOLY_API descpoly_status descpoly_eulerian(unsigned n, descpoly_poly** out);
/* P_k(u) or its stretch PP_k(u) by the chosen construction. The stretch and
 * duplication constructions require k >= 1. */
DESCPOLY_API descpoly_status descpoly_pk(unsigned k, descpoly_which which, descpoly_construction construction,
                                         descpoly_poly** out);

/* Generating function sum_n B_{n,k}(y) z^n = numerator / denominator. */
DESCPOLY_API descpoly_status descpoly_gf_build(unsigned k, descpoly_gf** out);
DESCPOLY_API void descpoly_gf_free(descpoly_gf* gf);
/* z-coefficients (polynomials in y). */
DESCPOLY_API const descpoly_polylist* descpoly_gf_numerator(const descpoly_gf* gf);
DESCPOLY_API const descpoly_polylist* descpoly_gf_denominator(const descpoly_gf* gf);
/* [B_{0,k}, ..., B_{upto,k}]. */
DESCPOLY_API descpoly_status descpoly_gf_series(const descpoly_gf* gf, unsigned upto, descpoly_polylist** out);
/* z^0 .. z^upto coefficients of denominator * series - numerator. */
DESCPOLY_API descpoly_status descpoly_gf_residual(const descpoly_gf* gf, unsigned upto, descpoly_polylist** out);

/* Permutations are arrays of the values 1..n. */
DESCPOLY_API descpoly_status descpoly_maxdrop(const int* perm, size_t n, unsigned* out);
DESCPOLY_API descpoly_status descpoly_bsort_pass(const int* perm, size_t n, int* out);

/* Juggling sequences are arrays of n >= 1 nonnegative throws. */
DESCPOLY_API descpoly_status descpoly_phi(const int* perm, size_t n, unsigned k, int64_t* throws_out);
DESCPOLY_API descpoly_status descpoly_juggle_is_valid(const int64_t* throws, size_t n, int* valid);
DESCPOLY_API descpoly_status descpoly_juggle_ball_count(const int64_t* throws, size_t n, int64_t* balls);
DESCPOLY_API descpoly_status descpoly_fk_transform(const int64_t* throws, size_t n, int64_t* out);

/* Verification suites. */
DESCPOLY_API descpoly_status descpoly_verify(descpoly_suite suite, unsigned nmax, unsigned kmax,
                                             descpoly_report** out);
DESCPOLY_API void descpoly_report_free(descpoly_report* r);
DESCPOLY_API size_t descpoly_report_size(const descpoly_report* r);
DESCPOLY_API int descpoly_report_all_passed(const descpoly_report* r);
DESCPOLY_API const char* descpoly_report_suite(const descpoly_report* r, size_t i);
DESCPOLY_API const char* descpoly_report_claim(const descpoly_report* r, size_t i);
DESCPOLY_API int descpoly_report_passed(const descpoly_report* r, size_t i);
DESCPOLY_API size_t descpoly_report_cases(const descpoly_report* r, size_t i);
/* Empty string when the check passed. */
DESCPOLY_API const char* descpoly_report_counterexample(const descpoly_report* r, size_t i);

#ifdef __cplusplus
}
#endif

#endif /* DESCPOLY_DESCPOLY_H */

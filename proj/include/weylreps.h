/*
 * weylreps C API.
 *
 * Opaque handles over the C++ core. Every function returns a wr_status;
 * results come back through out-parameters. On failure the out-parameters
 * are left untouched and wr_last_error() describes the problem (the message
 * is thread-local and stays valid until the next failing call on the same
 * thread). Handles are immutable after creation and may be shared between
 * threads; release each with its matching *_free function. Strings returned
 * through char** are heap-allocated and released with wr_string_free.
 *
 * Rationals cross the boundary as exact strings: "p/q", "p" or "-p/q".
 */
#ifndef WEYLREPS_H
#define WEYLREPS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(WEYLREPS_BUILDING)
#define WR_API __declspec(dllexport)
#else
#define WR_API __declspec(dllimport)
#endif
#else
#define WR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wr_status {
  WR_OK = 0,
  WR_ERR_INVALID_ARGUMENT = 1,
  WR_ERR_PARSE = 2,
  WR_ERR_OWNER_MISMATCH = 3,
  WR_ERR_FLAVOR_MISMATCH = 4,
  WR_ERR_NONEXISTENT_OBSERVABLE = 5,
  WR_ERR_EIGEN_FAILURE = 6,
  WR_ERR_INTERNAL = 7
} wr_status;

typedef enum wr_direction { WR_DIRECTION_U = 0, WR_DIRECTION_V = 1 } wr_direction;

typedef struct wr_element wr_element;     /* Weyl algebra element */
typedef struct wr_state wr_state;         /* built-in state functional */
typedef struct wr_vector wr_vector;       /* finitely supported l2(R) vector */
typedef struct wr_polynomial wr_polynomial; /* trigonometric polynomial */

WR_API const char* wr_version(void);
WR_API const char* wr_status_name(wr_status status);
WR_API const char* wr_last_error(void);
/* Line and column of the last WR_ERR_PARSE on this thread, 0 otherwise. */
WR_API size_t wr_last_error_line(void);
WR_API size_t wr_last_error_column(void);
WR_API void wr_string_free(char* s);

/* --- Weyl algebra ------------------------------------------------------ */

WR_API wr_status wr_element_generator(const char* a, const char* b, wr_element** out);
WR_API wr_status wr_element_parse(const char* text, wr_element** out);
WR_API wr_status wr_element_serialize(const wr_element* x, char** out);
WR_API wr_status wr_element_multiply(const wr_element* x, const wr_element* y, wr_element** out);
WR_API wr_status wr_element_add(const wr_element* x, const wr_element* y, wr_element** out);
WR_API wr_status wr_element_scale(double re, double im, const wr_element* x, wr_element** out);
WR_API wr_status wr_element_adjoint(const wr_element* x, wr_element** out);
WR_API wr_status wr_element_l1_bound(const wr_element* x, double* out);
WR_API wr_status wr_element_term_count(const wr_element* x, size_t* out);
/* The i-th term (in normal-form order) as a single-term element. */
WR_API wr_status wr_element_term(const wr_element* x, size_t index, wr_element** out);
WR_API void wr_element_free(wr_element* x);

/* --- States ------------------------------------------------------------ */

/* "position:3/2", "momentum:1/2", "vacuum" or {kind: "position", lambda: "3/2"}. */
WR_API wr_status wr_state_parse(const char* text, wr_state** out);
WR_API wr_status wr_state_serialize(const wr_state* state, char** out);
WR_API wr_status wr_state_evaluate(const wr_state* state, const wr_element* x, double* re, double* im);
/* Writes count*count entries, row-major, into re_out and im_out. */
WR_API wr_status wr_state_gram_matrix(const wr_state* state, const wr_element* const* basis, size_t count,
                                      double* re_out, double* im_out);
WR_API wr_status wr_state_min_gram_eigenvalue(const wr_state* state, const wr_element* const* basis, size_t count,
                                              double* out);
WR_API void wr_state_free(wr_state* state);

/* --- GNS ----------------------------------------------------------------- */

/* owner(x* y) for the GNS vectors x Omega and y Omega. */
WR_API wr_status wr_gns_inner(const wr_state* owner, const wr_element* x, const wr_element* y, double* re,
                              double* im);
WR_API wr_status wr_gns_norm(const wr_state* owner, const wr_element* x, double* out);
/* Canonical reduction of x Omega as {shift, re, im} records. Position and
 * momentum owners only. */
WR_API wr_status wr_gns_reduce(const wr_state* owner, const wr_element* x, char** out);
/* grid: comma-separated rationals. Output: CSV "parameter,re,im". */
WR_API wr_status wr_continuity_scan_csv(const wr_state* state, wr_direction direction, const char* grid,
                                        char** out);
WR_API wr_status wr_is_regular_direction(const wr_state* state, wr_direction direction, int* out);
WR_API wr_status wr_equivalence_check(const wr_state* state, const wr_element* const* words, size_t count,
                                      double* out);

/* --- Position / momentum models ------------------------------------------ */

WR_API wr_status wr_vector_basis(const char* point, int momentum_flavor, wr_vector** out);
WR_API wr_status wr_vector_parse(const char* text, wr_vector** out);
WR_API wr_status wr_vector_serialize(const wr_vector* v, char** out);
WR_API wr_status wr_vector_inner(const wr_vector* u, const wr_vector* v, double* re, double* im);
WR_API wr_status wr_vector_apply_u(const char* a, const wr_vector* v, wr_vector** out);
WR_API wr_status wr_vector_apply_v(const char* b, const wr_vector* v, wr_vector** out);
/* WR_ERR_NONEXISTENT_OBSERVABLE on momentum-flavor vectors. */
WR_API wr_status wr_vector_apply_q(const wr_vector* v, wr_vector** out);
/* WR_ERR_NONEXISTENT_OBSERVABLE on position-flavor vectors. */
WR_API wr_status wr_vector_apply_p(const wr_vector* v, wr_vector** out);
WR_API void wr_vector_free(wr_vector* v);

/* --- Almost periodic functions ------------------------------------------- */

WR_API wr_status wr_polynomial_parse(const char* text, wr_polynomial** out);
WR_API wr_status wr_polynomial_serialize(const wr_polynomial* f, char** out);
WR_API wr_status wr_polynomial_mean(const wr_polynomial* f, double* re, double* im);
/* Trapezoidal (1/2N) int_{-N}^{N} f and the analytic truncation bound. */
WR_API wr_status wr_polynomial_mean_quadrature(const wr_polynomial* f, double half_width, double* re, double* im,
                                               double* bound);
WR_API wr_status wr_polynomial_evaluate(const wr_polynomial* f, const char* x, double* re, double* im);
WR_API void wr_polynomial_free(wr_polynomial* f);

/* --- Verification suites -------------------------------------------------- */

/* suite: "algebra", "reps", "gns", "ap", "oracle" or "all". */
WR_API wr_status wr_verify_run(const char* suite, uint64_t seed, char** report, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* WEYLREPS_H */

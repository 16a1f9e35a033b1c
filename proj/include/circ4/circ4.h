/* circ4 — C API for the circulant-metric geometry library.
 *
 * Small value types cross the boundary as plain structs; traces and field
 * families are opaque handles. Every function returns a circ4_status; on
 * failure a thread-local message naming the violated precondition is
 * available through circ4_last_error().
 */
#ifndef CIRC4_H
#define CIRC4_H

#if defined(_WIN32)
#define CIRC4_API __declspec(dllexport)
#else
#define CIRC4_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum circ4_status {
    CIRC4_OK = 0,
    CIRC4_ERR_NON_FINITE = 1,
    CIRC4_ERR_ORDERING = 2,
    CIRC4_ERR_INVALID_PARAMS = 3,
    CIRC4_ERR_NOT_POSITIVE_DEFINITE = 4,
    CIRC4_ERR_EIGENVECTOR_INPUT = 5,
    CIRC4_ERR_ZERO_VECTOR = 6,
    CIRC4_ERR_SCALE_OVERFLOW = 7,
    CIRC4_ERR_OUT_OF_DOMAIN = 8,
    CIRC4_ERR_SINGULAR_METRIC = 9,
    CIRC4_ERR_UNKNOWN_FAMILY = 10,
    CIRC4_ERR_BOUNDARY_FIXED_POINT = 11,
    CIRC4_ERR_NULL_ARGUMENT = 12,
    CIRC4_ERR_INTERNAL = 13
} circ4_status;

/* Symmetric circulant 4x4 tensor with first row (a, b, c, b). */
typedef struct circ4_metric {
    double a, b, c;
} circ4_metric;

/* Tangent vector. */
typedef struct circ4_vec4 {
    double x, y, z, u;
} circ4_vec4;

/* Conformal transformation parameters. */
typedef struct circ4_params {
    double alpha, beta;
} circ4_params;

/* Cosines of the angles between w and qw, and between w and q^2 w. */
typedef struct circ4_angles {
    double cos_q, cos_q2;
} circ4_angles;

typedef struct circ4_trace circ4_trace;   /* angle trace of a metric sequence */
typedef struct circ4_fields circ4_fields; /* named scalar field family */

CIRC4_API const char* circ4_version(void);
CIRC4_API const char* circ4_status_name(circ4_status status);
/* Message of the most recent failure on this thread; empty string if none. */
CIRC4_API const char* circ4_last_error(void);

/* ---- circulant core ---------------------------------------------------- */

/* raw != 0 skips the a > c > b > 0 ordering check (needed for the pullback
 * metric, which violates it). */
CIRC4_API circ4_status circ4_metric_make(double a, double b, double c, int raw,
                                         circ4_metric* out);
CIRC4_API circ4_status circ4_det_closed_form(const circ4_metric* m, double* out);
/* Cofactor expansion of the expanded 4x4 matrix; the independent dense route. */
CIRC4_API circ4_status circ4_det_cofactor(const circ4_metric* m, double* out);
/* out = {a+2b+c, a-c, a-2b+c}; the middle value has multiplicity 2. */
CIRC4_API circ4_status circ4_eigenvalues(const circ4_metric* m, double out[3]);
/* exact != 0: all eigenvalues positive; else the sufficient ordering test. */
CIRC4_API circ4_status circ4_is_positive_definite(const circ4_metric* m, int exact, int* out);
CIRC4_API circ4_status circ4_apply_affinor(const circ4_vec4* w, int k, circ4_vec4* out);
CIRC4_API circ4_status circ4_inner(const circ4_metric* m, const circ4_vec4* w,
                                   const circ4_vec4* v, double* out);

/* ---- metric algebra ---------------------------------------------------- */

CIRC4_API circ4_status circ4_pullback(const circ4_metric* g, circ4_metric* out);
CIRC4_API circ4_status circ4_conformal_combine(const circ4_metric* g, const circ4_params* p,
                                               circ4_metric* out);
/* Entry n of the iterated metric sequence, by direct iteration. */
CIRC4_API circ4_status circ4_iterate_metric(const circ4_metric* g0, const circ4_params* p, int n,
                                            circ4_metric* out);
/* Entry n by the closed form of the recursion; the oracle route. */
CIRC4_API circ4_status circ4_closed_form_metric(const circ4_metric* g0, const circ4_params* p,
                                                int n, circ4_metric* out);

/* ---- angle engine ------------------------------------------------------ */

/* out = {g(w,w), g(w,qw), g(w,q^2 w)} as literal polynomials. */
CIRC4_API circ4_status circ4_gram_triple(const circ4_metric* m, const circ4_vec4* w,
                                         double out[3]);
CIRC4_API circ4_status circ4_angle_pair(const circ4_metric* m, const circ4_vec4* w,
                                        circ4_angles* out);
CIRC4_API circ4_status circ4_transform_angles(const circ4_angles* p0, const circ4_params* p,
                                              circ4_angles* out);
/* The cos value of the q^2-angle whose transform is exactly a right angle. */
CIRC4_API circ4_status circ4_inverse_special_case(const circ4_params* p, double* out);
/* Exact n-step solution of the q^2-cosine recurrence. */
CIRC4_API circ4_status circ4_mobius_closed_form(double cos_q2_0, const circ4_params* p, int n,
                                                double* out);

/* ---- angle traces ------------------------------------------------------ */

CIRC4_API circ4_status circ4_trace_recurrence(const circ4_angles* p0, const circ4_params* p,
                                              int n, circ4_trace** out);
CIRC4_API circ4_status circ4_trace_direct(const circ4_metric* g0, const circ4_vec4* w,
                                          const circ4_params* p, int n, circ4_trace** out);
/* Number of rows, or -1 for a null trace. */
CIRC4_API int circ4_trace_len(const circ4_trace* trace);
/* Row idx: step index, cosines, and whether the row came from the direct
 * metric computation (is_direct != 0) or the recurrence. Output pointers may
 * be null. */
CIRC4_API circ4_status circ4_trace_row(const circ4_trace* trace, int idx, int* step,
                                       circ4_angles* out, int* is_direct);
/* Last-row values; converged is set when the last two rows differ by < tol
 * in both components. */
CIRC4_API circ4_status circ4_trace_limit(const circ4_trace* trace, double tol,
                                         circ4_angles* out, int* converged);
CIRC4_API void circ4_trace_free(circ4_trace* trace);

/* ---- field calculus ---------------------------------------------------- */

/* Built-in families: "linear", "nonlinear", "conformal_pair", "broken", and
 * '+' composites such as "linear+conformal_pair". */
CIRC4_API circ4_status circ4_fields_open(const char* name, circ4_fields** out);
CIRC4_API void circ4_fields_free(circ4_fields* fields);
CIRC4_API circ4_status circ4_fields_has(const circ4_fields* fields, int* has_metric,
                                        int* has_pair);
/* Sub-box on which the family's pointwise constraints are guaranteed. */
CIRC4_API circ4_status circ4_fields_valid_box(const circ4_fields* fields, double lo[4],
                                              double hi[4]);

/* Residuals of the parallel-affinor gradient conditions on (A, B, C).
 * h <= 0 selects the family default step (1e-4). */
CIRC4_API circ4_status circ4_check_metric_gradients(const circ4_fields* fields,
                                                    const double p[4], double h, double* res_a,
                                                    double* res_b);
/* Residuals of the gradient conditions on (alpha, beta). */
CIRC4_API circ4_status circ4_check_pair_gradients(const circ4_fields* fields, const double p[4],
                                                  double h, double* res_alpha, double* res_beta);
/* Residuals of the same conditions on the transformed coefficients. */
CIRC4_API circ4_status circ4_check_transformed_gradients(const circ4_fields* fields,
                                                         const double p[4], double h,
                                                         double* res_1, double* res_2);
/* Max-norm of the covariant derivative of q assembled from Christoffel
 * symbols with central-difference metric derivatives. */
CIRC4_API circ4_status circ4_nabla_q_residual(const circ4_fields* fields, const double p[4],
                                              double h, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CIRC4_H */

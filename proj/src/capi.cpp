#include "circ4/circ4.h"

#include "circ4/angles.hpp"
#include "circ4/conformal.hpp"
#include "circ4/error.hpp"
#include "circ4/fields.hpp"

#include <string>

struct circ4_trace {
    circ4::AngleTrace trace;
};

struct circ4_fields {
    circ4::FieldBundle bundle;
};

namespace {

thread_local std::string g_last_error;

circ4_status to_status(circ4::errc code) {
    using circ4::errc;
    switch (code) {
    case errc::ok: return CIRC4_OK;
    case errc::non_finite: return CIRC4_ERR_NON_FINITE;
    case errc::ordering_violation: return CIRC4_ERR_ORDERING;
    case errc::invalid_params: return CIRC4_ERR_INVALID_PARAMS;
    case errc::not_positive_definite: return CIRC4_ERR_NOT_POSITIVE_DEFINITE;
    case errc::eigenvector_input: return CIRC4_ERR_EIGENVECTOR_INPUT;
    case errc::zero_vector: return CIRC4_ERR_ZERO_VECTOR;
    case errc::scale_overflow: return CIRC4_ERR_SCALE_OVERFLOW;
    case errc::out_of_domain: return CIRC4_ERR_OUT_OF_DOMAIN;
    case errc::singular_metric: return CIRC4_ERR_SINGULAR_METRIC;
    case errc::unknown_family: return CIRC4_ERR_UNKNOWN_FAMILY;
    case errc::boundary_fixed_point: return CIRC4_ERR_BOUNDARY_FIXED_POINT;
    }
    return CIRC4_ERR_INTERNAL;
}

template <typename Fn> circ4_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return CIRC4_OK;
    } catch (const circ4::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CIRC4_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return CIRC4_ERR_INTERNAL;
    }
}

circ4_status null_argument(const char* what) {
    g_last_error = std::string(what) + ": null argument";
    return CIRC4_ERR_NULL_ARGUMENT;
}

circ4::SymCirc4 from_c(const circ4_metric& m) { return {m.a, m.b, m.c}; }
circ4_metric to_c(circ4::SymCirc4 m) { return {m.a, m.b, m.c}; }
circ4::Vec4 from_c(const circ4_vec4& v) { return {v.x, v.y, v.z, v.u}; }
circ4::ConformalParams from_c(const circ4_params& p) { return {p.alpha, p.beta}; }
circ4::Point4 from_c(const double p[4]) { return {p[0], p[1], p[2], p[3]}; }

} // namespace

extern "C" {

const char* circ4_version(void) { return "1.0.0"; }

const char* circ4_status_name(circ4_status status) {
    switch (status) {
    case CIRC4_OK: return "ok";
    case CIRC4_ERR_NON_FINITE: return "non_finite";
    case CIRC4_ERR_ORDERING: return "ordering_violation";
    case CIRC4_ERR_INVALID_PARAMS: return "invalid_params";
    case CIRC4_ERR_NOT_POSITIVE_DEFINITE: return "not_positive_definite";
    case CIRC4_ERR_EIGENVECTOR_INPUT: return "eigenvector_input";
    case CIRC4_ERR_ZERO_VECTOR: return "zero_vector";
    case CIRC4_ERR_SCALE_OVERFLOW: return "scale_overflow";
    case CIRC4_ERR_OUT_OF_DOMAIN: return "out_of_domain";
    case CIRC4_ERR_SINGULAR_METRIC: return "singular_metric";
    case CIRC4_ERR_UNKNOWN_FAMILY: return "unknown_family";
    case CIRC4_ERR_BOUNDARY_FIXED_POINT: return "boundary_fixed_point";
    case CIRC4_ERR_NULL_ARGUMENT: return "null_argument";
    case CIRC4_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* circ4_last_error(void) { return g_last_error.c_str(); }

/* ---- circulant core ---------------------------------------------------- */

circ4_status circ4_metric_make(double a, double b, double c, int raw, circ4_metric* out) {
    if (!out) return null_argument("circ4_metric_make");
    return guarded([&] {
        *out = to_c(circ4::make_metric(a, b, c, raw ? circ4::Role::raw : circ4::Role::metric));
    });
}

circ4_status circ4_det_closed_form(const circ4_metric* m, double* out) {
    if (!m || !out) return null_argument("circ4_det_closed_form");
    return guarded([&] {
        circ4::detail::require_finite(from_c(*m), "det_closed_form");
        *out = circ4::det_closed_form(from_c(*m));
    });
}

circ4_status circ4_det_cofactor(const circ4_metric* m, double* out) {
    if (!m || !out) return null_argument("circ4_det_cofactor");
    return guarded([&] {
        circ4::detail::require_finite(from_c(*m), "det_cofactor");
        *out = circ4::det_cofactor(circ4::expand(from_c(*m)));
    });
}

circ4_status circ4_eigenvalues(const circ4_metric* m, double out[3]) {
    if (!m || !out) return null_argument("circ4_eigenvalues");
    return guarded([&] {
        circ4::detail::require_finite(from_c(*m), "eigenvalues");
        const circ4::CircEigen e = circ4::eigenvalues(from_c(*m));
        out[0] = e.l1;
        out[1] = e.l2;
        out[2] = e.l3;
    });
}

circ4_status circ4_is_positive_definite(const circ4_metric* m, int exact, int* out) {
    if (!m || !out) return null_argument("circ4_is_positive_definite");
    return guarded([&] {
        circ4::detail::require_finite(from_c(*m), "is_positive_definite");
        *out = circ4::is_positive_definite(from_c(*m), exact ? circ4::PosDefMode::exact
                                                             : circ4::PosDefMode::paper_sufficient)
                   ? 1
                   : 0;
    });
}

circ4_status circ4_apply_affinor(const circ4_vec4* w, int k, circ4_vec4* out) {
    if (!w || !out) return null_argument("circ4_apply_affinor");
    return guarded([&] {
        circ4::detail::require_finite(from_c(*w), "apply_affinor");
        const circ4::Vec4 r = circ4::apply_affinor(from_c(*w), circ4::AffinorPower(k));
        *out = {r.x, r.y, r.z, r.u};
    });
}

circ4_status circ4_inner(const circ4_metric* m, const circ4_vec4* w, const circ4_vec4* v,
                         double* out) {
    if (!m || !w || !v || !out) return null_argument("circ4_inner");
    return guarded([&] { *out = circ4::inner(from_c(*m), from_c(*w), from_c(*v)); });
}

/* ---- metric algebra ---------------------------------------------------- */

circ4_status circ4_pullback(const circ4_metric* g, circ4_metric* out) {
    if (!g || !out) return null_argument("circ4_pullback");
    return guarded([&] { *out = to_c(circ4::pullback_f(from_c(*g))); });
}

circ4_status circ4_conformal_combine(const circ4_metric* g, const circ4_params* p,
                                     circ4_metric* out) {
    if (!g || !p || !out) return null_argument("circ4_conformal_combine");
    return guarded([&] { *out = to_c(circ4::conformal_combine(from_c(*g), from_c(*p))); });
}

circ4_status circ4_iterate_metric(const circ4_metric* g0, const circ4_params* p, int n,
                                  circ4_metric* out) {
    if (!g0 || !p || !out) return null_argument("circ4_iterate_metric");
    return guarded([&] {
        const circ4::MetricSequence seq = circ4::iterate_metrics(from_c(*g0), from_c(*p), n);
        *out = to_c(seq.entries.back());
    });
}

circ4_status circ4_closed_form_metric(const circ4_metric* g0, const circ4_params* p, int n,
                                      circ4_metric* out) {
    if (!g0 || !p || !out) return null_argument("circ4_closed_form_metric");
    return guarded([&] { *out = to_c(circ4::closed_form_iterate(from_c(*g0), from_c(*p), n)); });
}

/* ---- angle engine ------------------------------------------------------ */

circ4_status circ4_gram_triple(const circ4_metric* m, const circ4_vec4* w, double out[3]) {
    if (!m || !w || !out) return null_argument("circ4_gram_triple");
    return guarded([&] {
        const auto g = circ4::gram_triple(from_c(*m), from_c(*w));
        out[0] = g[0];
        out[1] = g[1];
        out[2] = g[2];
    });
}

circ4_status circ4_angle_pair(const circ4_metric* m, const circ4_vec4* w, circ4_angles* out) {
    if (!m || !w || !out) return null_argument("circ4_angle_pair");
    return guarded([&] {
        const circ4::AnglePair p = circ4::angle_pair(from_c(*m), from_c(*w));
        *out = {p.cos_q, p.cos_q2};
    });
}

circ4_status circ4_transform_angles(const circ4_angles* p0, const circ4_params* p,
                                    circ4_angles* out) {
    if (!p0 || !p || !out) return null_argument("circ4_transform_angles");
    return guarded([&] {
        const circ4::AnglePair r =
            circ4::transform_angle_pair({p0->cos_q, p0->cos_q2}, from_c(*p));
        *out = {r.cos_q, r.cos_q2};
    });
}

circ4_status circ4_inverse_special_case(const circ4_params* p, double* out) {
    if (!p || !out) return null_argument("circ4_inverse_special_case");
    return guarded([&] { *out = circ4::inverse_special_case(from_c(*p)); });
}

circ4_status circ4_mobius_closed_form(double cos_q2_0, const circ4_params* p, int n,
                                      double* out) {
    if (!p || !out) return null_argument("circ4_mobius_closed_form");
    return guarded([&] { *out = circ4::mobius_closed_form(cos_q2_0, from_c(*p), n); });
}

/* ---- angle traces ------------------------------------------------------ */

circ4_status circ4_trace_recurrence(const circ4_angles* p0, const circ4_params* p, int n,
                                    circ4_trace** out) {
    if (!p0 || !p || !out) return null_argument("circ4_trace_recurrence");
    return guarded([&] {
        *out = new circ4_trace{
            circ4::recurrence_trace({p0->cos_q, p0->cos_q2}, from_c(*p), n)};
    });
}

circ4_status circ4_trace_direct(const circ4_metric* g0, const circ4_vec4* w,
                                const circ4_params* p, int n, circ4_trace** out) {
    if (!g0 || !w || !p || !out) return null_argument("circ4_trace_direct");
    return guarded([&] {
        *out = new circ4_trace{circ4::direct_trace(from_c(*g0), from_c(*w), from_c(*p), n)};
    });
}

int circ4_trace_len(const circ4_trace* trace) {
    return trace ? static_cast<int>(trace->trace.rows.size()) : -1;
}

circ4_status circ4_trace_row(const circ4_trace* trace, int idx, int* step, circ4_angles* out,
                             int* is_direct) {
    if (!trace) return null_argument("circ4_trace_row");
    return guarded([&] {
        if (idx < 0 || idx >= static_cast<int>(trace->trace.rows.size()))
            circ4::raise(circ4::errc::invalid_params, "circ4_trace_row: index out of range");
        const circ4::TraceRow& row = trace->trace.rows[static_cast<std::size_t>(idx)];
        if (step) *step = row.n;
        if (out) *out = {row.cos_q, row.cos_q2};
        if (is_direct) *is_direct = row.source == circ4::TraceSource::direct ? 1 : 0;
    });
}

circ4_status circ4_trace_limit(const circ4_trace* trace, double tol, circ4_angles* out,
                               int* converged) {
    if (!trace || !out) return null_argument("circ4_trace_limit");
    return guarded([&] {
        const circ4::LimitEstimate est = circ4::limit_estimate(trace->trace, tol);
        *out = {est.cos_q, est.cos_q2};
        if (converged) *converged = est.converged ? 1 : 0;
    });
}

void circ4_trace_free(circ4_trace* trace) { delete trace; }

/* ---- field calculus ---------------------------------------------------- */

circ4_status circ4_fields_open(const char* name, circ4_fields** out) {
    if (!name || !out) return null_argument("circ4_fields_open");
    return guarded([&] { *out = new circ4_fields{circ4::builtin_family(name)}; });
}

void circ4_fields_free(circ4_fields* fields) { delete fields; }

circ4_status circ4_fields_has(const circ4_fields* fields, int* has_metric, int* has_pair) {
    if (!fields) return null_argument("circ4_fields_has");
    if (has_metric) *has_metric = fields->bundle.has_metric() ? 1 : 0;
    if (has_pair) *has_pair = fields->bundle.has_pair() ? 1 : 0;
    return CIRC4_OK;
}

circ4_status circ4_fields_valid_box(const circ4_fields* fields, double lo[4], double hi[4]) {
    if (!fields || !lo || !hi) return null_argument("circ4_fields_valid_box");
    for (int i = 0; i < 4; ++i) {
        lo[i] = fields->bundle.valid_box.lo[i];
        hi[i] = fields->bundle.valid_box.hi[i];
    }
    return CIRC4_OK;
}

circ4_status circ4_check_metric_gradients(const circ4_fields* fields, const double p[4],
                                          double h, double* res_a, double* res_b) {
    if (!fields || !p || !res_a || !res_b) return null_argument("circ4_check_metric_gradients");
    return guarded([&] {
        const circ4::PairResidual r =
            circ4::check_metric_gradients(fields->bundle, from_c(p), h);
        *res_a = r.first;
        *res_b = r.second;
    });
}

circ4_status circ4_check_pair_gradients(const circ4_fields* fields, const double p[4], double h,
                                        double* res_alpha, double* res_beta) {
    if (!fields || !p || !res_alpha || !res_beta)
        return null_argument("circ4_check_pair_gradients");
    return guarded([&] {
        const circ4::PairResidual r = circ4::check_pair_gradients(fields->bundle, from_c(p), h);
        *res_alpha = r.first;
        *res_beta = r.second;
    });
}

circ4_status circ4_check_transformed_gradients(const circ4_fields* fields, const double p[4],
                                               double h, double* res_1, double* res_2) {
    if (!fields || !p || !res_1 || !res_2)
        return null_argument("circ4_check_transformed_gradients");
    return guarded([&] {
        const circ4::PairResidual r =
            circ4::check_transformed_gradients(fields->bundle, from_c(p), h);
        *res_1 = r.first;
        *res_2 = r.second;
    });
}

circ4_status circ4_nabla_q_residual(const circ4_fields* fields, const double p[4], double h,
                                    double* out) {
    if (!fields || !p || !out) return null_argument("circ4_nabla_q_residual");
    return guarded([&] { *out = circ4::nabla_q_residual(fields->bundle, from_c(p), h); });
}

} /* extern "C" */

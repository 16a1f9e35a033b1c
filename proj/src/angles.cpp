#include "circ4/angles.hpp"

#include "circ4/error.hpp"

#include <cmath>
#include <sstream>

namespace circ4 {

std::array<double, 3> gram_triple(SymCirc4 m, Vec4 w) {
    detail::require_finite(m, "gram_triple");
    detail::require_finite(w, "gram_triple");
    const double sq = w.x * w.x + w.y * w.y + w.z * w.z + w.u * w.u;
    const double ring = w.x * w.y + w.x * w.u + w.y * w.z + w.z * w.u;
    const double cross = w.x * w.z + w.y * w.u;
    const double g_ww = m.a * sq + 2.0 * m.b * ring + 2.0 * m.c * cross;
    const double g_wqw = (m.a + m.c) * ring + m.b * (sq + 2.0 * cross);
    const double g_wq2w = 2.0 * m.a * cross + 2.0 * m.b * ring + m.c * sq;
    return {g_ww, g_wqw, g_wq2w};
}

namespace {

// Relative residual of w against the line spanned by d (both real
// eigenvector directions of q have Euclidean norm 2).
double line_residual(Vec4 w, Vec4 d) {
    const double t = dot(w, d) / dot(d, d);
    return (w - t * d).norm() / w.norm();
}

void require_valid_direction(Vec4 w) {
    if (w.norm2() == 0.0) raise(errc::zero_vector, "angle_pair: w must be nonzero");
    const Vec4 ones{1.0, 1.0, 1.0, 1.0};
    const Vec4 alt{1.0, -1.0, 1.0, -1.0};
    if (line_residual(w, ones) < 1e-12 || line_residual(w, alt) < 1e-12)
        raise(errc::eigenvector_input,
              "angle_pair: w is (numerically) proportional to a real eigenvector of q; "
              "directions (1,1,1,1) and (1,-1,1,-1) are excluded");
}

void require_cosine_range(double value, const char* name) {
    if (!std::isfinite(value) || std::abs(value) > 1.0 + 1e-9) {
        std::ostringstream os;
        os << name << " = " << value << " is not a valid cosine";
        raise(errc::invalid_params, os.str());
    }
}

} // namespace

AnglePair angle_pair(SymCirc4 m, Vec4 w) {
    detail::require_finite(m, "angle_pair");
    detail::require_finite(w, "angle_pair");
    require_valid_direction(w);
    if (!is_positive_definite(m, PosDefMode::exact))
        raise(errc::not_positive_definite, "angle_pair: metric must be positive definite");
    const auto [g_ww, g_wqw, g_wq2w] = gram_triple(m, w);
    return {g_wqw / g_ww, g_wq2w / g_ww};
}

namespace {

AnglePair mobius_step(AnglePair p0, ConformalParams p) {
    const double denom = p.alpha + p.beta * p0.cos_q2;
    return {(p.alpha + p.beta) * p0.cos_q / denom, (p.alpha * p0.cos_q2 + p.beta) / denom};
}

} // namespace

AnglePair transform_angle_pair(AnglePair p0, ConformalParams p) {
    validate_params(p);
    require_cosine_range(p0.cos_q, "cos_q");
    require_cosine_range(p0.cos_q2, "cos_q2");
    return mobius_step(p0, p);
}

double inverse_special_case(ConformalParams p) {
    validate_params(p);
    return -p.beta / p.alpha;
}

AngleTrace recurrence_trace(AnglePair p0, ConformalParams p, int n) {
    if (n < 0) raise(errc::invalid_params, "recurrence_trace: n must be >= 0");
    validate_params(p);
    require_cosine_range(p0.cos_q, "cos_q");
    require_cosine_range(p0.cos_q2, "cos_q2");
    AngleTrace trace;
    trace.rows.reserve(static_cast<std::size_t>(n) + 1);
    AnglePair cur = p0;
    trace.rows.push_back({0, cur.cos_q, cur.cos_q2, TraceSource::recurrence});
    for (int k = 1; k <= n; ++k) {
        cur = mobius_step(cur, p);
        trace.rows.push_back({k, cur.cos_q, cur.cos_q2, TraceSource::recurrence});
    }
    return trace;
}

AngleTrace direct_trace(SymCirc4 g0, Vec4 w, ConformalParams p, int n) {
    if (n < 0) raise(errc::invalid_params, "direct_trace: n must be >= 0");
    validate_params(p);
    AngleTrace trace;
    trace.rows.reserve(static_cast<std::size_t>(n) + 1);
    SymCirc4 g = g0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            g = conformal_combine(g, p);
            // renormalize by the diagonal entry; cosines are scale-invariant
            g = {1.0, g.b / g.a, g.c / g.a};
        }
        const AnglePair row = angle_pair(g, w);
        trace.rows.push_back({k, row.cos_q, row.cos_q2, TraceSource::direct});
    }
    return trace;
}

double mobius_closed_form(double cos_q2_0, ConformalParams p, int n) {
    if (n < 0) raise(errc::invalid_params, "mobius_closed_form: n must be >= 0");
    validate_params(p);
    require_cosine_range(cos_q2_0, "cos_q2_0");
    if (cos_q2_0 == -1.0)
        raise(errc::boundary_fixed_point,
              "mobius_closed_form: cos = -1 is the repelling fixed point; the invariant "
              "ratio is undefined there");
    const double r = (p.alpha - p.beta) / (p.alpha + p.beta);
    const double t0 = (1.0 - cos_q2_0) / (1.0 + cos_q2_0);
    const double tn = t0 * std::pow(r, n);
    return (1.0 - tn) / (1.0 + tn);
}

LimitEstimate limit_estimate(const AngleTrace& trace, double tol) {
    if (trace.rows.empty()) raise(errc::invalid_params, "limit_estimate: trace is empty");
    if (!(tol > 0.0)) raise(errc::invalid_params, "limit_estimate: tol must be > 0");
    const TraceRow& last = trace.rows.back();
    LimitEstimate est{last.cos_q, last.cos_q2, false};
    if (trace.rows.size() >= 2) {
        const TraceRow& prev = trace.rows[trace.rows.size() - 2];
        est.converged = std::abs(last.cos_q - prev.cos_q) < tol &&
                        std::abs(last.cos_q2 - prev.cos_q2) < tol;
    }
    return est;
}

} // namespace circ4

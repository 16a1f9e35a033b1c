#include "circ4/circulant.hpp"

#include "circ4/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace circ4 {

const char* errc_name(errc code) noexcept {
    switch (code) {
    case errc::ok: return "ok";
    case errc::non_finite: return "non_finite";
    case errc::ordering_violation: return "ordering_violation";
    case errc::invalid_params: return "invalid_params";
    case errc::not_positive_definite: return "not_positive_definite";
    case errc::eigenvector_input: return "eigenvector_input";
    case errc::zero_vector: return "zero_vector";
    case errc::scale_overflow: return "scale_overflow";
    case errc::out_of_domain: return "out_of_domain";
    case errc::singular_metric: return "singular_metric";
    case errc::unknown_family: return "unknown_family";
    case errc::boundary_fixed_point: return "boundary_fixed_point";
    }
    return "unknown";
}

namespace detail {

void require_finite(SymCirc4 m, const char* where) {
    if (!(std::isfinite(m.a) && std::isfinite(m.b) && std::isfinite(m.c)))
        raise(errc::non_finite, std::string(where) + ": metric entries must be finite");
}

void require_finite(Vec4 w, const char* where) {
    if (!w.finite()) raise(errc::non_finite, std::string(where) + ": vector entries must be finite");
}

} // namespace detail

SymCirc4 make_metric(double a, double b, double c, Role role) {
    SymCirc4 m{a, b, c};
    detail::require_finite(m, "make_metric");
    if (role == Role::metric && !(a > c && c > b && b > 0.0)) {
        std::ostringstream os;
        os << "make_metric: ordering a > c > b > 0 violated by (" << a << ", " << b << ", " << c
           << ")";
        raise(errc::ordering_violation, os.str());
    }
    return m;
}

Mat4 expand(SymCirc4 m) {
    const double row[4] = {m.a, m.b, m.c, m.b};
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = row[((j - i) % 4 + 4) % 4];
    return r;
}

double det_closed_form(SymCirc4 m) {
    const double d = m.a - m.c;
    const double s = m.a + m.c;
    return d * d * (s * s - 4.0 * m.b * m.b);
}

CircEigen eigenvalues(SymCirc4 m) {
    return {m.a + 2.0 * m.b + m.c, m.a - m.c, m.a - 2.0 * m.b + m.c};
}

bool is_positive_definite(SymCirc4 m, PosDefMode mode) {
    if (mode == PosDefMode::paper_sufficient) return m.b > 0.0 && m.c > m.b && m.a > m.c;
    const CircEigen e = eigenvalues(m);
    return e.l1 > 0.0 && e.l2 > 0.0 && e.l3 > 0.0;
}

Mat4 affinor_matrix(AffinorPower k) {
    // entry (i, j) of q^k is 1 iff j = i + k mod 4
    Mat4 r;
    for (int i = 0; i < 4; ++i) r(i, (i + k.k) % 4) = 1.0;
    return r;
}

Vec4 apply_affinor(Vec4 w, AffinorPower k) {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r[i] = w[(i + k.k) % 4];
    return r;
}

Covec4 apply_affinor(Covec4 v, AffinorPower k) {
    Covec4 r;
    for (int j = 0; j < 4; ++j) r[j] = v[((j - k.k) % 4 + 4) % 4];
    return r;
}

double inner(SymCirc4 m, Vec4 w, Vec4 v) {
    detail::require_finite(m, "inner");
    detail::require_finite(w, "inner");
    detail::require_finite(v, "inner");
    return bilinear(expand(m), w, v);
}

SymCirc4 circulant_inverse(SymCirc4 m) {
    const CircEigen e = eigenvalues(m);
    const double det = det_closed_form(m);
    const double scale = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c)});
    if (scale == 0.0 || std::abs(det) < 1e-12 * scale * scale * scale * scale)
        raise(errc::singular_metric, "circulant_inverse: determinant negligible at entry scale");
    const double r1 = 1.0 / e.l1, r2 = 1.0 / e.l2, r3 = 1.0 / e.l3;
    return {0.25 * (r1 + 2.0 * r2 + r3), 0.25 * (r1 - r3), 0.25 * (r1 - 2.0 * r2 + r3)};
}

} // namespace circ4

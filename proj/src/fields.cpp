#include "circ4/fields.hpp"

#include "circ4/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace circ4 {

Box4 intersect(const Box4& a, const Box4& b) {
    Box4 r;
    for (int i = 0; i < 4; ++i) {
        r.lo[i] = std::max(a.lo[i], b.lo[i]);
        r.hi[i] = std::min(a.hi[i], b.hi[i]);
    }
    return r;
}

ScalarField constant_field(double value, Box4 domain, double fd_step) {
    return {[value](const Point4&) { return value; }, domain, fd_step};
}

ScalarField product_field(const ScalarField& f, const ScalarField& g) {
    auto fe = f.eval;
    auto ge = g.eval;
    return {[fe, ge](const Point4& p) { return fe(p) * ge(p); }, intersect(f.domain, g.domain),
            std::min(f.fd_step, g.fd_step)};
}

ScalarField linear_combination(double cf, const ScalarField& f, double cg, const ScalarField& g) {
    auto fe = f.eval;
    auto ge = g.eval;
    return {[cf, fe, cg, ge](const Point4& p) { return cf * fe(p) + cg * ge(p); },
            intersect(f.domain, g.domain), std::min(f.fd_step, g.fd_step)};
}

namespace {

void require_in_domain(const ScalarField& f, const Point4& p, const char* where) {
    if (!f.domain.contains(p)) {
        std::ostringstream os;
        os << where << ": point (" << p[0] << ", " << p[1] << ", " << p[2] << ", " << p[3]
           << ") is outside the field domain";
        raise(errc::out_of_domain, os.str());
    }
}

double step_or_default(const ScalarField& f, double h) { return h > 0.0 ? h : f.fd_step; }

} // namespace

Covec4 fd_gradient(const ScalarField& f, const Point4& p, double h) {
    require_in_domain(f, p, "fd_gradient");
    Covec4 g;
    for (int i = 0; i < 4; ++i) {
        Point4 hi = p, lo = p;
        hi[i] += h;
        lo[i] -= h;
        g[i] = (f.eval(hi) - f.eval(lo)) / (2.0 * h);
    }
    return g;
}

Covec4 fd_gradient(const ScalarField& f, const Point4& p) {
    return fd_gradient(f, p, f.fd_step);
}

SymCirc4 FieldBundle::metric_at(const Point4& p) const {
    if (!has_metric()) raise(errc::invalid_params, "bundle has no metric fields");
    return {A->eval(p), B->eval(p), C->eval(p)};
}

ConformalParams FieldBundle::pair_at(const Point4& p) const {
    if (!has_pair()) raise(errc::invalid_params, "bundle has no conformal pair fields");
    return {alpha->eval(p), beta->eval(p)};
}

namespace {

const AffinorPower kQ1{1};
const AffinorPower kQ2{2};
const AffinorPower kQ3{3};

// residual of grad(first) = grad(third).q^2 and 2 grad(second) = grad(third).(q+q^3)
PairResidual coefficient_residuals(const ScalarField& first, const ScalarField& second,
                                   const ScalarField& third, const Point4& p, double h) {
    const Covec4 g1 = fd_gradient(first, p, step_or_default(first, h));
    const Covec4 g2 = fd_gradient(second, p, step_or_default(second, h));
    const Covec4 g3 = fd_gradient(third, p, step_or_default(third, h));
    const Covec4 res_a = g1 - apply_affinor(g3, kQ2);
    const Covec4 res_b = (2.0 * g2) - (apply_affinor(g3, kQ1) + apply_affinor(g3, kQ3));
    return {res_a.max_abs(), res_b.max_abs()};
}

void require_metric(const FieldBundle& bundle, const char* where) {
    if (!bundle.has_metric()) {
        std::ostringstream os;
        os << where << ": family '" << bundle.name << "' has no metric fields";
        raise(errc::invalid_params, os.str());
    }
}

void require_pair(const FieldBundle& bundle, const char* where) {
    if (!bundle.has_pair()) {
        std::ostringstream os;
        os << where << ": family '" << bundle.name << "' has no conformal pair fields";
        raise(errc::invalid_params, os.str());
    }
}

void require_metric_ordering(const FieldBundle& bundle, const Point4& p, const char* where) {
    const SymCirc4 m = bundle.metric_at(p);
    if (!(m.a > m.c && m.c > m.b && m.b > 0.0)) {
        std::ostringstream os;
        os << where << ": metric ordering a > c > b > 0 fails at the evaluation point ("
           << m.a << ", " << m.b << ", " << m.c << ")";
        raise(errc::ordering_violation, os.str());
    }
}

} // namespace

PairResidual check_metric_gradients(const FieldBundle& bundle, const Point4& p, double h) {
    require_metric(bundle, "check_metric_gradients");
    require_in_domain(*bundle.A, p, "check_metric_gradients");
    require_metric_ordering(bundle, p, "check_metric_gradients");
    return coefficient_residuals(*bundle.A, *bundle.B, *bundle.C, p, h);
}

PairResidual check_pair_gradients(const FieldBundle& bundle, const Point4& p, double h) {
    require_pair(bundle, "check_pair_gradients");
    require_in_domain(*bundle.alpha, p, "check_pair_gradients");
    const Covec4 ga = fd_gradient(*bundle.alpha, p, step_or_default(*bundle.alpha, h));
    const Covec4 gb = fd_gradient(*bundle.beta, p, step_or_default(*bundle.beta, h));
    const Covec4 gbq2 = apply_affinor(gb, kQ2);
    return {(ga - gbq2).max_abs(), (gb + gbq2).max_abs()};
}

PairResidual check_transformed_gradients(const FieldBundle& bundle, const Point4& p, double h) {
    require_metric(bundle, "check_transformed_gradients");
    require_pair(bundle, "check_transformed_gradients");
    const ScalarField t_a =
        linear_combination(1.0, product_field(*bundle.alpha, *bundle.A), 1.0,
                           product_field(*bundle.beta, *bundle.C));
    const ScalarField t_b =
        linear_combination(1.0, product_field(*bundle.alpha, *bundle.B), 1.0,
                           product_field(*bundle.beta, *bundle.B));
    const ScalarField t_c =
        linear_combination(1.0, product_field(*bundle.alpha, *bundle.C), 1.0,
                           product_field(*bundle.beta, *bundle.A));
    require_in_domain(t_a, p, "check_transformed_gradients");
    return coefficient_residuals(t_a, t_b, t_c, p, h);
}

double nabla_q_residual(const FieldBundle& bundle, const Point4& p, double h) {
    require_metric(bundle, "nabla_q_residual");
    require_in_domain(*bundle.A, p, "nabla_q_residual");
    const SymCirc4 g = bundle.metric_at(p);
    if (!is_positive_definite(g, PosDefMode::exact))
        raise(errc::not_positive_definite,
              "nabla_q_residual: metric is not positive definite at the evaluation point");
    const Mat4 ginv = expand(circulant_inverse(g));

    // dg[i] = expanded matrix of (dA/dx_i, dB/dx_i, dC/dx_i)
    const Covec4 da = fd_gradient(*bundle.A, p, step_or_default(*bundle.A, h));
    const Covec4 db = fd_gradient(*bundle.B, p, step_or_default(*bundle.B, h));
    const Covec4 dc = fd_gradient(*bundle.C, p, step_or_default(*bundle.C, h));
    std::array<Mat4, 4> dg;
    for (int i = 0; i < 4; ++i) dg[i] = expand({da[i], db[i], dc[i]});

    double gamma[4][4][4]; // gamma[k][i][j]
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double s = 0.0;
                for (int l = 0; l < 4; ++l)
                    s += ginv(k, l) * (dg[i](l, j) + dg[j](l, i) - dg[l](i, j));
                gamma[k][i][j] = 0.5 * s;
            }

    // q itself is constant, so only the connection terms contribute:
    // (nabla_i q)_j^k = gamma[k][i][l] q_j^l - gamma[l][i][j] q_l^k
    const Mat4 q = affinor_matrix(kQ1);
    double residual = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                double s = 0.0;
                for (int l = 0; l < 4; ++l)
                    s += gamma[k][i][l] * q(j, l) - gamma[l][i][j] * q(l, k);
                residual = std::max(residual, std::abs(s));
            }
    return residual;
}

namespace {

constexpr double kDefaultStep = 1e-4;

Box4 unit_box() { return {{0.0, 0.0, 0.0, 0.0}, {1.0, 1.0, 1.0, 1.0}}; }

double coord_sum(const Point4& p) { return p[0] + p[1] + p[2] + p[3]; }
double coord_alt(const Point4& p) { return p[0] - p[1] + p[2] - p[3]; }

FieldBundle base_family(const std::string& name) {
    const Box4 dom = unit_box();
    FieldBundle b;
    b.name = name;
    if (name == "linear") {
        b.A = ScalarField{[](const Point4& p) { return coord_sum(p) + 2.0; }, dom, kDefaultStep};
        b.B = ScalarField{[](const Point4& p) { return coord_sum(p) - 0.9; }, dom, kDefaultStep};
        b.C = ScalarField{[](const Point4& p) { return coord_sum(p); }, dom, kDefaultStep};
        b.valid_box = {{0.26, 0.26, 0.26, 0.26}, {0.49, 0.49, 0.49, 0.49}};
    } else if (name == "nonlinear") {
        // C = sin(S) + cos(D) and B = sin(S) - cos(D) + 1/2 with S the
        // coordinate sum and D the alternating sum; the metric ordering holds
        // on [0.3, 0.6]^4 and the gradient conditions hold identically.
        b.A = ScalarField{
            [](const Point4& p) { return std::sin(coord_sum(p)) + std::cos(coord_alt(p)) + 2.0; },
            dom, kDefaultStep};
        b.B = ScalarField{
            [](const Point4& p) { return std::sin(coord_sum(p)) - std::cos(coord_alt(p)) + 0.5; },
            dom, kDefaultStep};
        b.C = ScalarField{
            [](const Point4& p) { return std::sin(coord_sum(p)) + std::cos(coord_alt(p)); }, dom,
            kDefaultStep};
        b.valid_box = {{0.3, 0.3, 0.3, 0.3}, {0.6, 0.6, 0.6, 0.6}};
    } else if (name == "conformal_pair") {
        b.alpha =
            ScalarField{[](const Point4& p) { return 5.0 - (p[0] - p[2]); }, dom, kDefaultStep};
        b.beta = ScalarField{[](const Point4& p) { return p[0] - p[2]; }, dom, kDefaultStep};
        b.valid_box = {{0.40, 0.26, 0.26, 0.26}, {0.49, 0.49, 0.35, 0.49}};
    } else if (name == "broken") {
        // constant B breaks the second gradient condition by exactly 2
        b.A = ScalarField{[](const Point4& p) { return coord_sum(p) + 2.0; }, dom, kDefaultStep};
        b.B = ScalarField{[](const Point4&) { return 0.5; }, dom, kDefaultStep};
        b.C = ScalarField{[](const Point4& p) { return coord_sum(p); }, dom, kDefaultStep};
        b.valid_box = {{0.26, 0.26, 0.26, 0.26}, {0.49, 0.49, 0.49, 0.49}};
    } else {
        raise(errc::unknown_family,
              "unknown field family '" + name +
                  "' (known: linear, nonlinear, conformal_pair, broken, and '+' composites)");
    }
    return b;
}

} // namespace

FieldBundle builtin_family(const std::string& name) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        const auto pos = name.find('+', start);
        parts.push_back(name.substr(start, pos == std::string::npos ? pos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    FieldBundle out = base_family(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) {
        FieldBundle next = base_family(parts[i]);
        if ((next.has_metric() && out.has_metric()) || (next.has_pair() && out.has_pair()))
            raise(errc::invalid_params,
                  "composite family '" + name + "' defines the same fields twice");
        if (next.has_metric()) {
            out.A = std::move(next.A);
            out.B = std::move(next.B);
            out.C = std::move(next.C);
        }
        if (next.has_pair()) {
            out.alpha = std::move(next.alpha);
            out.beta = std::move(next.beta);
        }
        out.valid_box = intersect(out.valid_box, next.valid_box);
        out.name = name;
    }
    return out;
}

} // namespace circ4

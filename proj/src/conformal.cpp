#include "circ4/conformal.hpp"

#include "circ4/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace circ4 {

void validate_params(ConformalParams p) {
    if (!(std::isfinite(p.alpha) && std::isfinite(p.beta)))
        raise(errc::non_finite, "conformal params must be finite");
    if (!(0.0 < p.beta && p.beta < p.alpha)) {
        std::ostringstream os;
        os << "conformal params require 0 < beta < alpha, got (alpha=" << p.alpha
           << ", beta=" << p.beta << ")";
        raise(errc::invalid_params, os.str());
    }
}

SymCirc4 pullback_f(SymCirc4 g) {
    detail::require_finite(g, "pullback_f");
    return {g.c, g.b, g.a};
}

SymCirc4 conformal_combine(SymCirc4 g, ConformalParams p) {
    detail::require_finite(g, "conformal_combine");
    if (!(std::isfinite(p.alpha) && std::isfinite(p.beta)))
        raise(errc::non_finite, "conformal_combine: params must be finite");
    return {p.alpha * g.a + p.beta * g.c, (p.alpha + p.beta) * g.b,
            p.alpha * g.c + p.beta * g.a};
}

namespace {

constexpr double kOverflowLimit = 1e300;

void require_bounded(SymCirc4 m, int step) {
    if (std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c)}) > kOverflowLimit) {
        std::ostringstream os;
        os << "metric sequence entry " << step << " exceeds magnitude 1e300";
        raise(errc::scale_overflow, os.str());
    }
}

void validate_seed(SymCirc4 g0, ConformalParams p) {
    detail::require_finite(g0, "iterate_metrics");
    validate_params(p);
    if (!is_positive_definite(g0, PosDefMode::exact))
        raise(errc::not_positive_definite, "iterate_metrics: g0 must be positive definite");
}

} // namespace

MetricSequence iterate_metrics(SymCirc4 g0, ConformalParams p, int n) {
    if (n < 0) raise(errc::invalid_params, "iterate_metrics: n must be >= 0");
    validate_seed(g0, p);
    MetricSequence seq;
    seq.params = p;
    seq.entries.reserve(static_cast<std::size_t>(n) + 1);
    seq.entries.push_back(g0);
    for (int k = 1; k <= n; ++k) {
        SymCirc4 next = conformal_combine(seq.entries.back(), p);
        require_bounded(next, k);
        seq.entries.push_back(next);
    }
    return seq;
}

SymCirc4 closed_form_iterate(SymCirc4 g0, ConformalParams p, int n) {
    if (n < 0) raise(errc::invalid_params, "closed_form_iterate: n must be >= 0");
    validate_seed(g0, p);
    const double grow = std::pow(p.alpha + p.beta, n);
    const double decay = std::pow(p.alpha - p.beta, n);
    const double sum = grow * (g0.a + g0.c);
    const double diff = decay * (g0.a - g0.c);
    SymCirc4 out{0.5 * (sum + diff), grow * g0.b, 0.5 * (sum - diff)};
    require_bounded(out, n);
    return out;
}

} // namespace circ4

#pragma once

#include "circ4/circulant.hpp"
#include "circ4/conformal.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>

// Field calculus: scalar fields A, B, C, alpha, beta on a box in R^4,
// central-difference gradients, the gradient conditions equivalent to the
// affinor being parallel (grad A = (grad C)q^2, 2 grad B = (grad C)(q+q^3)),
// the analogous conditions on (alpha, beta) and on the transformed metric
// coefficients, and the directly assembled covariant-derivative residual of
// q from Christoffel symbols.

namespace circ4 {

using Point4 = std::array<double, 4>;

/// Axis-aligned box in R^4.
struct Box4 {
    Point4 lo{};
    Point4 hi{};

    bool contains(const Point4& p) const {
        for (int i = 0; i < 4; ++i)
            if (p[i] < lo[i] || p[i] > hi[i]) return false;
        return true;
    }
};

Box4 intersect(const Box4& a, const Box4& b);

/// A smooth real function on a box domain with a central-difference step.
/// eval must be reentrant and finite on the domain inflated by 2*fd_step per
/// axis.
struct ScalarField {
    std::function<double(const Point4&)> eval;
    Box4 domain;
    double fd_step = 1e-4;
};

ScalarField constant_field(double value, Box4 domain, double fd_step = 1e-4);

/// Pointwise a*f + b*g on the intersected domain (used for the composite
/// coefficient fields of the transformed metric).
ScalarField product_field(const ScalarField& f, const ScalarField& g);
ScalarField linear_combination(double cf, const ScalarField& f, double cg, const ScalarField& g);

/// Central differences (f(p + h e_i) - f(p - h e_i)) / (2h), second-order
/// accurate. Raises out_of_domain when p leaves the field's box.
Covec4 fd_gradient(const ScalarField& f, const Point4& p);
Covec4 fd_gradient(const ScalarField& f, const Point4& p, double h);

/// Metric coefficient fields, optionally with a conformal parameter pair.
struct FieldBundle {
    std::optional<ScalarField> A, B, C;
    std::optional<ScalarField> alpha, beta;

    /// Sub-box where the pointwise constraints (A > C > B > 0 and, when the
    /// pair is present, 0 < beta < alpha) are guaranteed. Used for sampling.
    Box4 valid_box{};
    std::string name;

    bool has_metric() const { return A && B && C; }
    bool has_pair() const { return alpha && beta; }

    SymCirc4 metric_at(const Point4& p) const;
    ConformalParams pair_at(const Point4& p) const;
};

/// Residuals of the two parallel-affinor gradient conditions on (A, B, C):
///   res_a = || grad A - (grad C) q^2 ||_inf
///   res_b = || 2 grad B - (grad C)(q + q^3) ||_inf
/// Requires the metric ordering A > C > B > 0 at p.
struct PairResidual {
    double first = 0.0;
    double second = 0.0;
};
PairResidual check_metric_gradients(const FieldBundle& bundle, const Point4& p, double h = 0.0);

/// Residuals of the parameter conditions:
///   res_alpha = || grad alpha - (grad beta) q^2 ||_inf
///   res_beta  = || grad beta + (grad beta) q^2 ||_inf
PairResidual check_pair_gradients(const FieldBundle& bundle, const Point4& p, double h = 0.0);

/// Residuals of the same two gradient conditions applied to the transformed
/// coefficients (alpha A + beta C, (alpha+beta) B, alpha C + beta A). These
/// vanish to O(h^2) whenever the metric and pair conditions both hold.
PairResidual check_transformed_gradients(const FieldBundle& bundle, const Point4& p, double h = 0.0);

/// Max-norm over all 64 components of the covariant derivative of q under
/// the Riemannian connection of the bundle metric, with Christoffel symbols
/// assembled from central-difference metric derivatives and the exact
/// circulant inverse. Small iff check_metric_gradients is small.
double nabla_q_residual(const FieldBundle& bundle, const Point4& p, double h = 0.0);

/// Built-in field families addressable by name:
///   "linear"         A = s+2, B = s-0.9, C = s with s = x1+x2+x3+x4
///   "nonlinear"      A = C+2, C = sin(S)+cos(D), B = sin(S)-cos(D)+1/2
///                    with S = x1+x2+x3+x4, D = x1-x2+x3-x4
///   "conformal_pair" alpha = 5-(x1-x3), beta = x1-x3
///   "broken"         A = s+2, B = 1/2, C = s (violates the gradient
///                    conditions; res_b = 2 exactly)
/// Composite names join bundles with '+', e.g. "linear+conformal_pair".
/// Raises unknown_family otherwise.
FieldBundle builtin_family(const std::string& name);

} // namespace circ4

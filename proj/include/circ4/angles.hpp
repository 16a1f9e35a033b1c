#pragma once

#include "circ4/conformal.hpp"

#include <array>
#include <vector>

// Angle engine: Gram triples, the two angle cosines under any positive
// definite circulant metric, the transformation law between conformally
// related metrics, the cosine recurrences along the metric sequence, their
// closed form and limit estimation.
//
// Angles are carried as cosines throughout; arccos belongs to the
// presentation layer.

namespace circ4 {

/// cos of the angle between w and qw (cos_q) and between w and q^2 w
/// (cos_q2) under one metric. Both magnitudes are <= 1 for positive definite
/// metrics by Cauchy-Schwarz.
struct AnglePair {
    double cos_q = 0.0;
    double cos_q2 = 0.0;
};

enum class TraceSource { recurrence, direct };

struct TraceRow {
    int n = 0;
    double cos_q = 0.0;
    double cos_q2 = 0.0;
    TraceSource source = TraceSource::recurrence;
};

/// Per-step record of a metric-sequence angle experiment.
struct AngleTrace {
    std::vector<TraceRow> rows;
};

struct LimitEstimate {
    double cos_q = 0.0;
    double cos_q2 = 0.0;
    bool converged = false;
};

/// The three Gram values (g(w,w), g(w,qw), g(w,q^2 w)) evaluated as the
/// literal expanded polynomials in (x, y, z, u). The matrix-product route
/// inner(m, w, q^k w) is the independent check.
std::array<double, 3> gram_triple(SymCirc4 m, Vec4 w);

/// Angle cosines of w under m. Requires m exactly positive definite, w
/// nonzero and w not proportional to either real eigenvector direction of q,
/// (1,1,1,1) and (1,-1,1,-1); proportionality is detected at relative
/// residual 1e-12. Vectors in the -1 eigenplane of q^2 are accepted and
/// yield the boundary value cos_q2 = -1.
AnglePair angle_pair(SymCirc4 m, Vec4 w);

/// Transformation law for the angle cosines between conformally related
/// metrics:
///   cos_q'  = (alpha+beta) cos_q / (alpha + beta cos_q2)
///   cos_q2' = (alpha cos_q2 + beta) / (alpha + beta cos_q2)
/// Must agree with angle_pair(conformal_combine(m, p), w) whenever p0 came
/// from angle_pair(m, w).
AnglePair transform_angle_pair(AnglePair p0, ConformalParams p);

/// The cos_q2 value (-beta/alpha) whose transform is exactly a right angle.
double inverse_special_case(ConformalParams p);

/// Rows 0..n of both cosine recurrences seeded at p0.
AngleTrace recurrence_trace(AnglePair p0, ConformalParams p, int n);

/// Rows 0..n computed directly: row k is angle_pair(g_k, w) along the metric
/// sequence. Each iterate is renormalized by its trace before the next step;
/// the cosines are scale-invariant, so the rows are unchanged and the entries
/// cannot overflow.
AngleTrace direct_trace(SymCirc4 g0, Vec4 w, ConformalParams p, int n);

/// Exact solution of the cos_q2 recurrence via the invariant ratio
/// t = (1-cos)/(1+cos), which contracts by r = (alpha-beta)/(alpha+beta)
/// per step. Raises boundary_fixed_point at cos_q2_0 = -1, the repelling
/// fixed point where the ratio is undefined.
double mobius_closed_form(double cos_q2_0, ConformalParams p, int n);

/// Last-row values of a trace plus a convergence flag: set when the last two
/// rows differ by less than tol in both components. Successive differences
/// are used rather than distance to any claimed limit.
LimitEstimate limit_estimate(const AngleTrace& trace, double tol);

} // namespace circ4

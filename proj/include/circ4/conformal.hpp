#pragma once

#include "circ4/circulant.hpp"

#include <vector>

// Metric algebra: the pullback metric f, the almost conformal transformation
// g~ = alpha*g + beta*f, positivity preservation and the iterated metric
// sequence with its closed form.

namespace circ4 {

/// Scalar pair (alpha, beta) of an almost conformal transformation.
/// Positivity-preserving use requires 0 < beta < alpha.
struct ConformalParams {
    double alpha = 1.0;
    double beta = 0.0;
};

/// Require finite alpha, beta with 0 < beta < alpha.
void validate_params(ConformalParams p);

/// Pullback of g by the affinor: f(w, v) = g(qw, qv). In coordinates this is
/// the a<->c swap, so pullback is an involution.
SymCirc4 pullback_f(SymCirc4 g);

/// alpha*g + beta*pullback_f(g), entrywise (alpha*a + beta*c,
/// (alpha+beta)*b, alpha*c + beta*a). No parameter ordering is enforced here;
/// callers that rely on positivity preservation validate 0 < beta < alpha.
SymCirc4 conformal_combine(SymCirc4 g, ConformalParams p);

struct MetricSequence {
    std::vector<SymCirc4> entries; ///< g_0 ... g_n
    ConformalParams params;
};

/// Direct iteration g_k = alpha*g_{k-1} + beta*f_{k-1}, entries 0..n.
/// Requires g0 exactly positive definite and 0 < beta < alpha; every entry is
/// then positive definite. Raises scale_overflow when any entry magnitude
/// exceeds 1e300 (entries grow like (alpha+beta)^n).
MetricSequence iterate_metrics(SymCirc4 g0, ConformalParams p, int n);

/// Closed form of the same recursion:
///   a_n + c_n = (alpha+beta)^n (a_0 + c_0)
///   a_n - c_n = (alpha-beta)^n (a_0 - c_0)
///   b_n       = (alpha+beta)^n b_0
/// Used as the independent oracle for iterate_metrics.
SymCirc4 closed_form_iterate(SymCirc4 g0, ConformalParams p, int n);

} // namespace circ4

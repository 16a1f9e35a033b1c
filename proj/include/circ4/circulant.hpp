#pragma once

#include "circ4/linalg.hpp"

#include <array>

// Circulant core: the symmetric circulant metric type, the cyclic affinor q
// with its powers, closed-form determinant/eigenvalues, positivity tests and
// inner products.

namespace circ4 {

/// Symmetric circulant 4x4 tensor determined by its first row (a, b, c, b).
/// Row i is row 0 cyclically shifted right by i. Houses the base metric g,
/// the pullback metric f and every iterate of the metric sequence.
struct SymCirc4 {
    double a = 0.0, b = 0.0, c = 0.0;
};

enum class Role {
    metric, ///< require the ordering a > c > b > 0
    raw,    ///< any finite entries (the pullback f violates the ordering)
};

/// Validating constructor. Role::metric enforces a > c > b > 0, the
/// sufficient positivity ordering; Role::raw only requires finite entries.
SymCirc4 make_metric(double a, double b, double c, Role role = Role::metric);

/// Expand to the dense 4x4 representation.
Mat4 expand(SymCirc4 m);

/// (a-c)^2 ((a+c)^2 - 4 b^2), the closed-form determinant.
double det_closed_form(SymCirc4 m);

/// Exact spectrum: {a+2b+c, a-c (multiplicity 2), a-2b+c}.
struct CircEigen {
    double l1; ///< a + 2b + c, multiplicity 1
    double l2; ///< a - c, multiplicity 2
    double l3; ///< a - 2b + c, multiplicity 1
};
CircEigen eigenvalues(SymCirc4 m);

enum class PosDefMode {
    paper_sufficient, ///< the ordering 0 < b < c < a (sufficient, not necessary)
    exact,            ///< all eigenvalues strictly positive
};
bool is_positive_definite(SymCirc4 m, PosDefMode mode);

/// Power of the cyclic affinor, k taken mod 4.
struct AffinorPower {
    int k = 1;
    explicit AffinorPower(int power) : k(((power % 4) + 4) % 4) {}
};

/// Dense matrix of q^k.
Mat4 affinor_matrix(AffinorPower k);

/// Column action of q^k on a tangent vector: a left cyclic shift, so
/// q(x, y, z, u) = (y, z, u, x).
Vec4 apply_affinor(Vec4 w, AffinorPower k);

/// Row action of q^k on a covector: component j of v.q^k is v[(j-k) mod 4].
Covec4 apply_affinor(Covec4 v, AffinorPower k);

/// wᵀ M v for the expanded matrix of m. Symmetric and bilinear.
double inner(SymCirc4 m, Vec4 w, Vec4 v);

/// Symmetric circulant inverse computed through the eigenvalue formulas.
/// Raises singular_metric when the determinant is negligible at the entry
/// scale.
SymCirc4 circulant_inverse(SymCirc4 m);

namespace detail {
void require_finite(SymCirc4 m, const char* where);
void require_finite(Vec4 w, const char* where);
} // namespace detail

} // namespace circ4

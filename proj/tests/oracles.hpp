#pragma once

// Test-only oracles, kept independent of the library code paths they check:
// a Jacobi eigensolver for symmetric 4x4 matrices, leading principal minors,
// the pullback metric via explicit index contraction, and deterministic
// random generators for metrics, vectors and parameters.

#include "circ4/circulant.hpp"
#include "circ4/conformal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace oracle {

using circ4::Mat4;
using circ4::SymCirc4;
using circ4::Vec4;

// Cyclic Jacobi sweeps; adequate far beyond 1e-9 for 4x4 symmetric input.
inline std::array<double, 4> jacobi_eigenvalues(Mat4 a) {
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) off += a(i, j) * a(i, j);
        if (off < 1e-28) break;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) {
                if (std::abs(a(p, q)) < 1e-30) continue;
                const double theta = 0.5 * std::atan2(2.0 * a(p, q), a(q, q) - a(p, p));
                const double c = std::cos(theta), s = std::sin(theta);
                const double app = a(p, p), aqq = a(q, q), apq = a(p, q);
                a(p, p) = c * c * app - 2.0 * s * c * apq + s * s * aqq;
                a(q, q) = s * s * app + 2.0 * s * c * apq + c * c * aqq;
                a(p, q) = a(q, p) = 0.0;
                for (int k = 0; k < 4; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = a(p, k) = c * akp - s * akq;
                    a(k, q) = a(q, k) = s * akp + c * akq;
                }
            }
    }
    std::array<double, 4> ev{a(0, 0), a(1, 1), a(2, 2), a(3, 3)};
    std::sort(ev.begin(), ev.end());
    return ev;
}

inline double det_k(const Mat4& m, int k) {
    // determinant of the leading k x k block by Laplace expansion
    if (k == 1) return m(0, 0);
    if (k == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (k == 3)
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    return circ4::det_cofactor(m);
}

inline std::array<double, 4> leading_principal_minors(const Mat4& m) {
    return {det_k(m, 1), det_k(m, 2), det_k(m, 3), det_k(m, 4)};
}

inline bool positive_definite_by_minors(const Mat4& m) {
    for (double d : leading_principal_minors(m))
        if (!(d > 0.0)) return false;
    return true;
}

// f_ij = g_ik q^k_t q^t_j with the affinor written out literally.
inline Mat4 pullback_by_contraction(SymCirc4 g) {
    int q[4][4] = {};
    for (int i = 0; i < 4; ++i) q[i][(i + 1) % 4] = 1;
    const Mat4 gm = circ4::expand(g);
    Mat4 f;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k)
                for (int t = 0; t < 4; ++t) s += gm(i, k) * q[t][k] * q[j][t];
            f(i, j) = s;
        }
    return f;
}

// |a - b| <= tol * max(1, |a|, |b|)
inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }

    SymCirc4 raw_metric(double lo = -10.0, double hi = 10.0) {
        return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
    }

    // 0 < b < c < a
    SymCirc4 ordered_metric() {
        const double b = uniform(0.05, 3.0);
        const double c = b + uniform(0.05, 3.0);
        const double a = c + uniform(0.05, 3.0);
        return {a, b, c};
    }

    // exactly positive definite, sampled through the spectrum; includes
    // metrics that violate the sufficient ordering (b may even be negative)
    SymCirc4 exact_pd_metric() {
        const double l1 = uniform(0.05, 8.0);
        const double l2 = uniform(0.05, 8.0);
        const double l3 = uniform(0.05, 8.0);
        return {0.25 * (l1 + 2.0 * l2 + l3), 0.25 * (l1 - l3), 0.25 * (l1 - 2.0 * l2 + l3)};
    }

    circ4::ConformalParams params() {
        const double alpha = uniform(0.2, 4.0);
        return {alpha, alpha * uniform(0.02, 0.98)};
    }

    // stays clear of the excluded eigenvector directions and zero
    Vec4 vector() {
        while (true) {
            Vec4 w{uniform(-2.0, 2.0), uniform(-2.0, 2.0), uniform(-2.0, 2.0),
                   uniform(-2.0, 2.0)};
            if (w.norm() < 0.1) continue;
            const Vec4 ones{1, 1, 1, 1}, alt{1, -1, 1, -1};
            const auto residual = [&](Vec4 d) {
                const double t = dot(w, d) / dot(d, d);
                return (w - t * d).norm() / w.norm();
            };
            if (residual(ones) > 1e-3 && residual(alt) > 1e-3) return w;
        }
    }
};

} // namespace oracle

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

// Small fixed-size types for 4-dimensional tangent vectors, row covectors
// and dense 4x4 matrices. Kept dependency-free: every consumer works on
// 4x4 problems where generic libraries add nothing.

namespace circ4 {

/// Tangent vector (column) at a point, components (x, y, z, u).
struct Vec4 {
    double x = 0.0, y = 0.0, z = 0.0, u = 0.0;

    double operator[](std::size_t i) const {
        const double* p[4] = {&x, &y, &z, &u};
        return *p[i];
    }
    double& operator[](std::size_t i) {
        double* p[4] = {&x, &y, &z, &u};
        return *p[i];
    }

    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z) && std::isfinite(u);
    }
    double norm2() const { return x * x + y * y + z * z + u * u; }
    double norm() const { return std::sqrt(norm2()); }
};

inline Vec4 operator+(Vec4 a, Vec4 b) { return {a.x + b.x, a.y + b.y, a.z + b.z, a.u + b.u}; }
inline Vec4 operator-(Vec4 a, Vec4 b) { return {a.x - b.x, a.y - b.y, a.z - b.z, a.u - b.u}; }
inline Vec4 operator*(double s, Vec4 a) { return {s * a.x, s * a.y, s * a.z, s * a.u}; }
inline double dot(Vec4 a, Vec4 b) { return a.x * b.x + a.y * b.y + a.z * b.z + a.u * b.u; }

/// Row covector (e.g. a gradient). Distinct from Vec4 so the two index
/// actions of the affinor cannot be mixed up silently.
struct Covec4 {
    std::array<double, 4> c{};

    double operator[](std::size_t i) const { return c[i]; }
    double& operator[](std::size_t i) { return c[i]; }

    double max_abs() const {
        double m = 0.0;
        for (double v : c) m = std::max(m, std::abs(v));
        return m;
    }
};

inline Covec4 operator+(Covec4 a, Covec4 b) {
    return {{a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}};
}
inline Covec4 operator-(Covec4 a, Covec4 b) {
    return {{a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}};
}
inline Covec4 operator*(double s, Covec4 a) {
    return {{s * a[0], s * a[1], s * a[2], s * a[3]}};
}

/// Dense 4x4 matrix, row-major.
struct Mat4 {
    std::array<std::array<double, 4>, 4> m{};

    static Mat4 identity() {
        Mat4 e;
        for (int i = 0; i < 4; ++i) e.m[i][i] = 1.0;
        return e;
    }

    double operator()(int i, int j) const { return m[i][j]; }
    double& operator()(int i, int j) { return m[i][j]; }
};

Mat4 matmul(const Mat4& a, const Mat4& b);
Vec4 matvec(const Mat4& a, Vec4 v);
Mat4 transpose(const Mat4& a);

/// wᵀ M v for a dense matrix.
double bilinear(const Mat4& m, Vec4 w, Vec4 v);

/// Determinant by cofactor expansion along the first row. Serves as the
/// dense route against the circulant closed form.
double det_cofactor(const Mat4& m);

inline double max_abs_diff(const Mat4& a, const Mat4& b) {
    double r = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r = std::max(r, std::abs(a(i, j) - b(i, j)));
    return r;
}

} // namespace circ4

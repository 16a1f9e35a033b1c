#include "circ4/linalg.hpp"

namespace circ4 {

Mat4 matmul(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

Vec4 matvec(const Mat4& a, Vec4 v) {
    Vec4 r;
    for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int j = 0; j < 4; ++j) s += a(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

Mat4 transpose(const Mat4& a) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = a(j, i);
    return r;
}

double bilinear(const Mat4& m, Vec4 w, Vec4 v) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += w[i] * m(i, j) * v[j];
    return s;
}

namespace {

double det3(double a00, double a01, double a02, double a10, double a11, double a12, double a20,
            double a21, double a22) {
    return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
           a02 * (a10 * a21 - a11 * a20);
}

} // namespace

double det_cofactor(const Mat4& m) {
    double d = 0.0;
    for (int j = 0; j < 4; ++j) {
        double sub[3][3];
        for (int r = 1; r < 4; ++r) {
            int cc = 0;
            for (int c = 0; c < 4; ++c) {
                if (c == j) continue;
                sub[r - 1][cc++] = m(r, c);
            }
        }
        double minor = det3(sub[0][0], sub[0][1], sub[0][2], sub[1][0], sub[1][1], sub[1][2],
                            sub[2][0], sub[2][1], sub[2][2]);
        d += ((j % 2 == 0) ? 1.0 : -1.0) * m(0, j) * minor;
    }
    return d;
}

} // namespace circ4

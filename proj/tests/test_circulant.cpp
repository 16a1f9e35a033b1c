#include "circ4/circulant.hpp"

#include "circ4/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>

using namespace circ4;

namespace {

void check_error(errc expected, const std::function<void()>& fn) {
    try {
        fn();
        FAIL_CHECK("expected error ", errc_name(expected));
    } catch (const Error& e) {
        CHECK(e.code() == expected);
    }
}

} // namespace

TEST_CASE("make_metric validates the ordering in metric role only") {
    const SymCirc4 g = make_metric(3, 1, 2);
    CHECK(g.a == 3);
    CHECK(g.b == 1);
    CHECK(g.c == 2);

    check_error(errc::ordering_violation, [] { make_metric(1, 0, 0); });
    check_error(errc::non_finite, [] { make_metric(std::nan(""), 1, 2, Role::raw); });

    const SymCirc4 f = make_metric(2, 1, 3, Role::raw);
    CHECK(f.a == 2);
    CHECK(f.c == 3);
}

TEST_CASE("expansion is symmetric circulant with cyclically shifted rows") {
    const SymCirc4 m{3, 1, 2};
    const Mat4 g = expand(m);
    const double row0[4] = {3, 1, 2, 1};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(g(i, j) == row0[((j - i) % 4 + 4) % 4]);
            CHECK(g(i, j) == g(j, i));
        }
}

TEST_CASE("closed-form determinant matches the cofactor oracle") {
    CHECK(det_closed_form({3, 1, 2}) == 21);
    CHECK(det_closed_form({1, 0, 1}) == 0);
    CHECK(det_closed_form({2, 1, 3}) == 21); // pullback has the same determinant

    oracle::Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const SymCirc4 m = rng.raw_metric();
        CHECK(oracle::close_rel(det_closed_form(m), det_cofactor(expand(m)), 1e-9));
    }
}

TEST_CASE("closed-form eigenvalues match the jacobi oracle as a multiset") {
    const CircEigen e = eigenvalues({3, 1, 2});
    CHECK(e.l1 == 7);
    CHECK(e.l2 == 1);
    CHECK(e.l3 == 3);

    const CircEigen ef = eigenvalues({2, 1, 3});
    CHECK(ef.l1 == 7);
    CHECK(ef.l2 == -1); // the pullback metric is indefinite
    CHECK(ef.l3 == 3);

    const CircEigen ez = eigenvalues({1, 0, 1});
    CHECK(ez.l1 == 2);
    CHECK(ez.l2 == 0);
    CHECK(ez.l3 == 2);

    oracle::Rng rng(12);
    for (int i = 0; i < 1000; ++i) {
        const SymCirc4 m = rng.raw_metric();
        const CircEigen ev = eigenvalues(m);
        std::array<double, 4> mine{ev.l1, ev.l2, ev.l2, ev.l3};
        std::sort(mine.begin(), mine.end());
        const auto ref = oracle::jacobi_eigenvalues(expand(m));
        for (int k = 0; k < 4; ++k) CHECK(oracle::close_rel(mine[k], ref[k], 1e-9));

        const double prod = ev.l1 * ev.l2 * ev.l2 * ev.l3;
        CHECK(oracle::close_rel(prod, det_closed_form(m), 1e-9));
    }
}

TEST_CASE("positive definiteness: exact mode equals the minors oracle, "
          "sufficient mode implies exact") {
    CHECK(is_positive_definite({3, 1, 2}, PosDefMode::paper_sufficient));
    CHECK_FALSE(is_positive_definite({2, 1, 3}, PosDefMode::exact));
    // the sufficient ordering is not necessary
    CHECK_FALSE(is_positive_definite({3, 1, 0.5}, PosDefMode::paper_sufficient));
    CHECK(is_positive_definite({3, 1, 0.5}, PosDefMode::exact));

    oracle::Rng rng(13);
    for (int i = 0; i < 1000; ++i) {
        const SymCirc4 m = rng.raw_metric(-4.0, 4.0);
        const bool exact = is_positive_definite(m, PosDefMode::exact);
        CHECK(exact == oracle::positive_definite_by_minors(expand(m)));
        if (is_positive_definite(m, PosDefMode::paper_sufficient)) CHECK(exact);
    }
}

TEST_CASE("affinor powers: shift action, identity at k=4, eigenvector fixed") {
    const Vec4 w{1, 2, 3, 4};
    const Vec4 qw = apply_affinor(w, AffinorPower(1));
    CHECK(qw.x == 2);
    CHECK(qw.y == 3);
    CHECK(qw.z == 4);
    CHECK(qw.u == 1);

    const Vec4 q4w = apply_affinor(w, AffinorPower(4));
    CHECK(q4w.x == 1);
    CHECK(q4w.u == 4);

    const Vec4 ones{1, 1, 1, 1};
    const Vec4 qo = apply_affinor(ones, AffinorPower(1));
    CHECK(qo.x == 1);
    CHECK(qo.y == 1);
    CHECK(qo.z == 1);
    CHECK(qo.u == 1);
}

TEST_CASE("affinor matrix identities: q^4 = E, q^2 != +-E") {
    const Mat4 q = affinor_matrix(AffinorPower(1));
    const Mat4 q2 = matmul(q, q);
    const Mat4 q4 = matmul(q2, q2);
    CHECK(max_abs_diff(q4, Mat4::identity()) == 0.0);

    Mat4 minus_e;
    for (int i = 0; i < 4; ++i) minus_e(i, i) = -1.0;
    CHECK(max_abs_diff(q2, Mat4::identity()) >= 1.0);
    CHECK(max_abs_diff(q2, minus_e) >= 1.0);

    // matrix of q^k equals the k-fold product
    Mat4 acc = Mat4::identity();
    for (int k = 0; k < 4; ++k) {
        CHECK(max_abs_diff(affinor_matrix(AffinorPower(k)), acc) == 0.0);
        acc = matmul(acc, q);
    }
}

TEST_CASE("column and row actions agree with the matrix products") {
    oracle::Rng rng(14);
    for (int i = 0; i < 200; ++i) {
        const Vec4 w = rng.vector();
        for (int k = 0; k < 4; ++k) {
            const Mat4 qk = affinor_matrix(AffinorPower(k));
            const Vec4 a = apply_affinor(w, AffinorPower(k));
            const Vec4 b = matvec(qk, w);
            CHECK(a.x == b.x);
            CHECK(a.y == b.y);
            CHECK(a.z == b.z);
            CHECK(a.u == b.u);

            Covec4 v{{w.x, w.y, w.z, w.u}};
            const Covec4 r = apply_affinor(v, AffinorPower(k));
            for (int j = 0; j < 4; ++j) {
                double s = 0.0;
                for (int l = 0; l < 4; ++l) s += v[l] * qk(l, j);
                CHECK(r[j] == s);
            }
        }
    }
}

TEST_CASE("inner products: entry picking and the quadratic form") {
    const SymCirc4 m{3, 1, 2};
    CHECK(inner(m, {1, 0, 0, 0}, {1, 0, 0, 0}) == 3);
    CHECK(inner(m, {1, 1, 1, 1}, {1, 1, 1, 1}) == 28);
    CHECK(inner(m, {1, 0, 0, 0}, {0, 0, 1, 0}) == 2);
}

TEST_CASE("inner is symmetric, bilinear and q-invariant") {
    oracle::Rng rng(15);
    for (int i = 0; i < 1000; ++i) {
        const SymCirc4 m = rng.ordered_metric();
        const Vec4 w = rng.vector();
        const Vec4 v = rng.vector();
        CHECK(oracle::close_rel(inner(m, w, v), inner(m, v, w), 1e-12));

        const Vec4 qw = apply_affinor(w, AffinorPower(1));
        const Vec4 qv = apply_affinor(v, AffinorPower(1));
        CHECK(oracle::close_rel(inner(m, qw, qv), inner(m, w, v), 1e-12));

        const double s = rng.uniform(-2.0, 2.0);
        CHECK(oracle::close_rel(inner(m, s * w, v), s * inner(m, w, v), 1e-12));
    }
}

TEST_CASE("circulant inverse reproduces the identity and rejects singular input") {
    oracle::Rng rng(16);
    for (int i = 0; i < 200; ++i) {
        const SymCirc4 m = rng.exact_pd_metric();
        const Mat4 prod = matmul(expand(m), expand(circulant_inverse(m)));
        CHECK(max_abs_diff(prod, Mat4::identity()) < 1e-12);
    }
    check_error(errc::singular_metric, [] { circulant_inverse({1, 0, 1}); });
}

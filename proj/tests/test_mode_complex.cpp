#include <doctest.h>

#include "bvlab/errors.hpp"
#include "bvlab/mode_complex.hpp"

using namespace bvlab;

namespace {

// Rotation contraction in degree 1: keep the dphi slot values.
CMat rot1(const GradedComplex& X) {
    CMat m(X.n0, X.n1());
    for (int i = 0; i < X.n0; ++i) m(i, X.n1t + i) = CRat(1);
    return m;
}

// Rotation contraction in degree 2: minus identity into the dt slots.
CMat rot2(const GradedComplex& X) {
    CMat m(X.n1(), X.n2);
    for (int i = 0; i < X.n2; ++i) m(i, i) = CRat(-1);
    return m;
}

void check_rotation_cartan(const GradedComplex& X, int mode) {
    CRat w = CRat::i(mode);
    CMat i1 = rot1(X), i2 = rot2(X);
    CHECK(i1 * X.d0() == CMat::identity(X.n0) * w);
    CHECK(X.d0() * i1 + i2 * X.d1() == CMat::identity(X.n1()) * w);
    CHECK(X.d1() * i2 == CMat::identity(X.n2) * w);
}

void check_homotopy(const GradedComplex& X) {
    HodgeData hd = hodge(X);
    CMat d0 = X.d0(), d1 = X.d1();
    CMat r0 = hd.eta0 * d0 - (CMat::identity(X.n0) - hd.P0);
    CMat r1 = d0 * hd.eta0 + hd.eta1 * d1 - (CMat::identity(X.n1()) - hd.P1);
    CMat r2 = d1 * hd.eta1 - (CMat::identity(X.n2) - hd.P2);
    CHECK(r0.is_zero());
    CHECK(r1.is_zero());
    CHECK(r2.is_zero());
    CHECK(hd.P0 * hd.P0 == hd.P0);
    CHECK(hd.P1 * hd.P1 == hd.P1);
    CHECK(hd.P2 * hd.P2 == hd.P2);
    // Harmonics are cycles and the projector absorbs the exact part.
    CHECK((d0 * hd.H0).is_zero());
    CHECK((d1 * hd.H1).is_zero());
    CHECK((hd.P1 * d0).is_zero());
    CHECK((hd.P2 * d1).is_zero());
}

}  // namespace

TEST_CASE("mode complexes square to zero in every size and mode") {
    for (int K = 1; K <= 4; ++K) {
        for (int n = -3; n <= 3; ++n) {
            ModeComplex cyl = ModeComplex::cylinder(K, n);
            ModeComplex tor = ModeComplex::torus(K, n);
            CHECK((cyl.A.d1() * cyl.A.d0()).is_zero());
            CHECK((cyl.B.d1() * cyl.B.d0()).is_zero());
            CHECK((tor.A.d1() * tor.A.d0()).is_zero());
            CHECK((tor.B.d1() * tor.B.d0()).is_zero());
            CHECK((cyl.fluct_a().d1() * cyl.fluct_a().d0()).is_zero());
            CHECK((cyl.fluct_b().d1() * cyl.fluct_b().d0()).is_zero());
        }
    }
}

TEST_CASE("mode complex slot counts") {
    ModeComplex cyl = ModeComplex::cylinder(3, 2);
    CHECK(cyl.A.n0 == 4);
    CHECK(cyl.A.n1t == 3);
    CHECK(cyl.A.n1f == 4);
    CHECK(cyl.A.n2 == 3);
    CHECK(cyl.B.n0 == 3);
    CHECK(cyl.B.n1t == 4);
    CHECK(cyl.B.n1f == 3);
    CHECK(cyl.B.n2 == 4);
    ModeComplex tor = ModeComplex::torus(3, 2);
    CHECK(tor.A.n0 == 3);
    CHECK(tor.A.n1t == 3);
    CHECK(tor.B.n1t == 3);
    GradedComplex fa = cyl.fluct_a(), fb = cyl.fluct_b();
    CHECK(fa.n0 == 3);
    CHECK(fa.n1() == 6);
    CHECK(fa.n2 == 3);
    CHECK(fb.n0 == 3);
    CHECK(fb.n1() == 6);
    CHECK(fb.n2 == 3);
}

TEST_CASE("rotation contraction satisfies the Cartan identity per mode") {
    for (int K = 1; K <= 4; ++K) {
        for (int n = -3; n <= 3; ++n) {
            ModeComplex cyl = ModeComplex::cylinder(K, n);
            ModeComplex tor = ModeComplex::torus(K, n);
            check_rotation_cartan(cyl.A, n);
            check_rotation_cartan(cyl.B, -n);
            check_rotation_cartan(tor.A, n);
            check_rotation_cartan(tor.B, -n);
            check_rotation_cartan(cyl.fluct_a(), n);
            check_rotation_cartan(cyl.fluct_b(), -n);
        }
    }
}

TEST_CASE("axial averaging is a partition of unity") {
    for (int K = 1; K <= 4; ++K) {
        for (bool closed : {false, true}) {
            ModeComplex mc = closed ? ModeComplex::torus(K, 1)
                                    : ModeComplex::cylinder(K, 1);
            for (const CMat& avg : {mc.A_avg, mc.B_avg}) {
                for (int i = 0; i < avg.rows(); ++i) {
                    CRat row_sum;
                    for (int j = 0; j < avg.cols(); ++j)
                        row_sum = row_sum + avg(i, j);
                    CHECK(row_sum == CRat(1));
                }
            }
        }
    }
}

TEST_CASE("harmonic dimensions across geometries and modes") {
    for (int K = 1; K <= 4; ++K) {
        // Zero mode: the primal cylinder side has interval cohomology; the
        // extrapolated dual side gains slots from its frozen end rows; the
        // torus carries the product-of-circles pattern on both sides.
        ModeComplex cyl0 = ModeComplex::cylinder(K, 0);
        ModeComplex tor0 = ModeComplex::torus(K, 0);
        CHECK(hodge(cyl0.A).betti() == std::vector<int>{1, 1, 0});
        CHECK(hodge(cyl0.B).betti() == std::vector<int>{1, 3, 2});
        CHECK(hodge(tor0.A).betti() == std::vector<int>{1, 2, 1});
        CHECK(hodge(tor0.B).betti() == std::vector<int>{1, 2, 1});
        CHECK(hodge(cyl0.fluct_a()).betti() == std::vector<int>{0, 0, 0});
        CHECK(hodge(cyl0.fluct_b()).betti() == std::vector<int>{0, 0, 0});
        for (int n : {1, -1, 2, -2, 3}) {
            ModeComplex cyl = ModeComplex::cylinder(K, n);
            ModeComplex tor = ModeComplex::torus(K, n);
            CHECK(hodge(cyl.A).betti() == std::vector<int>{0, 0, 0});
            CHECK(hodge(cyl.B).betti() == std::vector<int>{0, 0, 0});
            CHECK(hodge(tor.A).betti() == std::vector<int>{0, 0, 0});
            CHECK(hodge(tor.B).betti() == std::vector<int>{0, 0, 0});
            CHECK(hodge(cyl.fluct_a()).betti() == std::vector<int>{0, 0, 0});
            CHECK(hodge(cyl.fluct_b()).betti() == std::vector<int>{0, 0, 0});
        }
    }
}

TEST_CASE("chain homotopy identities hold with exact zero residual") {
    for (int K = 1; K <= 4; ++K) {
        for (int n = -3; n <= 3; ++n) {
            ModeComplex cyl = ModeComplex::cylinder(K, n);
            ModeComplex tor = ModeComplex::torus(K, n);
            check_homotopy(cyl.A);
            check_homotopy(cyl.B);
            check_homotopy(tor.A);
            check_homotopy(tor.B);
            check_homotopy(cyl.fluct_a());
            check_homotopy(cyl.fluct_b());
        }
    }
}

TEST_CASE("fluctuation difference operators are invertible") {
    for (int K = 1; K <= 4; ++K) {
        ModeComplex cyl = ModeComplex::cylinder(K, 0);
        CHECK(rank(cyl.fluct_a().D0t) == K);
        CHECK(rank(cyl.fluct_b().D0t) == K);
    }
}

TEST_CASE("torus harmonics pair nondegenerately across the two sides") {
    for (int K = 1; K <= 4; ++K) {
        ModeComplex tor = ModeComplex::torus(K, 0);
        HodgeData ha = hodge(tor.A), hb = hodge(tor.B);
        // Degree pairing couples primal degree p with dual degree 2 - p,
        // matching slots diagonally (dt against dphi in degree one).
        auto pair_02 = [](const CMat& hA0, const CMat& hB2) {
            CMat m(hB2.cols(), hA0.cols());
            for (int r = 0; r < hB2.cols(); ++r)
                for (int c = 0; c < hA0.cols(); ++c) {
                    CRat s;
                    for (int i = 0; i < hA0.rows(); ++i)
                        s = s + hB2(i, r) * hA0(i, c);
                    m(r, c) = s;
                }
            return m;
        };
        CMat p0 = pair_02(ha.H0, hb.H2);
        CMat p2 = pair_02(ha.H2, hb.H0);
        CHECK(rank(p0) == 1);
        CHECK(rank(p2) == 1);
        // Degree one: dt slots of one side meet dphi slots of the other.
        CMat p1(hb.H1.cols(), ha.H1.cols());
        int at = tor.A.n1t, bt = tor.B.n1t;
        for (int r = 0; r < hb.H1.cols(); ++r)
            for (int c = 0; c < ha.H1.cols(); ++c) {
                CRat s;
                for (int i = 0; i < tor.A.n1t; ++i)
                    s = s + ha.H1(i, c) * hb.H1(bt + i, r);
                for (int i = 0; i < tor.A.n1f; ++i)
                    s = s + ha.H1(at + i, c) * hb.H1(i, r);
                p1(r, c) = s;
            }
        CHECK(rank(p1) == 2);
    }
}

#include "bvlab/mode_complex.hpp"

#include "bvlab/errors.hpp"

namespace bvlab {

namespace {

// Primal difference: edge e gets x[e+1] - x[e] (cyclically on the torus).
CMat primal_difference(int K, bool closed) {
    int nodes = closed ? K : K + 1;
    CMat d(K, nodes);
    for (int e = 0; e < K; ++e) {
        d(e, e) = d(e, e) - CRat(1);
        d(e, (e + 1) % nodes) = d(e, (e + 1) % nodes) + CRat(1);
    }
    return d;
}

// Dual difference: the dual edge sitting at primal node j gets y[j] - y[j-1]
// over midpoint values y. Across each cylinder end the dual field is
// extended by its nearest value, so the two end rows vanish.
CMat dual_difference(int K, bool closed) {
    if (closed) {
        CMat d(K, K);
        for (int j = 0; j < K; ++j) {
            d(j, j) = d(j, j) + CRat(1);
            d(j, (j + K - 1) % K) = d(j, (j + K - 1) % K) - CRat(1);
        }
        return d;
    }
    CMat d(K + 1, K);
    for (int j = 1; j < K; ++j) {
        d(j, j) = CRat(1);
        d(j, j - 1) = CRat(-1);
    }
    return d;
}

CMat scaled_identity(int n, const CRat& s) { return CMat::identity(n) * s; }

std::vector<CRat> uniform_mass(int n, const Rat& value) {
    return std::vector<CRat>(static_cast<size_t>(n), CRat(value));
}

GradedComplex make_side(int K, bool closed, int mode, bool dual) {
    GradedComplex X;
    CRat im = CRat::i(mode);
    Rat h = Rat(1) / K;
    if (dual) {
        X.n0 = K;
        X.n1t = closed ? K : K + 1;
        X.n1f = K;
        X.n2 = X.n1t;
        X.D0t = dual_difference(K, closed);
        X.D0f = scaled_identity(K, im);
        X.D1t = scaled_identity(X.n1t, -im);
        X.D1f = dual_difference(K, closed);
        X.m0 = uniform_mass(K, h);
        X.m1f = X.m0;
        // Interior dual edges span midpoint to midpoint; on the cylinder the
        // two end dual edges are half length.
        X.m1t = uniform_mass(X.n1t, 1 / h);
        if (!closed) {
            X.m1t.front() = CRat(2 / h);
            X.m1t.back() = CRat(2 / h);
        }
        X.m2 = X.m1t;
    } else {
        X.n0 = closed ? K : K + 1;
        X.n1t = K;
        X.n1f = X.n0;
        X.n2 = K;
        X.D0t = primal_difference(K, closed);
        X.D0f = scaled_identity(X.n0, im);
        X.D1t = scaled_identity(K, -im);
        X.D1f = primal_difference(K, closed);
        X.m0 = uniform_mass(X.n0, h);
        if (!closed) {
            X.m0.front() = CRat(h / 2);
            X.m0.back() = CRat(h / 2);
        }
        X.m1f = X.m0;
        X.m1t = uniform_mass(K, 1 / h);
        X.m2 = X.m1t;
    }
    X.check_complex();
    return X;
}

// Average the values of the slots adjacent to each support point of the
// coarser family; a cylinder end node sees only its single adjacent edge.
CMat primal_average(int K, bool closed) {
    int nodes = closed ? K : K + 1;
    CMat a(nodes, K);
    Rat half(1, 2);
    if (closed) {
        for (int v = 0; v < K; ++v) {
            a(v, v) = a(v, v) + CRat(half);
            a(v, (v + K - 1) % K) = a(v, (v + K - 1) % K) + CRat(half);
        }
        return a;
    }
    a(0, 0) = CRat(1);
    a(K, K - 1) = CRat(1);
    for (int v = 1; v < K; ++v) {
        a(v, v - 1) = CRat(half);
        a(v, v) = CRat(half);
    }
    return a;
}

CMat dual_average(int K, bool closed) {
    int edges = closed ? K : K + 1;
    CMat a(K, edges);
    Rat half(1, 2);
    for (int c = 0; c < K; ++c) {
        a(c, c) = a(c, c) + CRat(half);
        a(c, (c + 1) % edges) = a(c, (c + 1) % edges) + CRat(half);
    }
    return a;
}

CMat vstack(const CMat& top, const CMat& bottom) {
    if (top.cols() != bottom.cols()) throw StructureError("vstack: column mismatch");
    CMat r(top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) r(i, j) = top(i, j);
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < bottom.cols(); ++j) r(top.rows() + i, j) = bottom(i, j);
    return r;
}

CMat hstack(const CMat& left, const CMat& right) {
    if (left.rows() != right.rows()) throw StructureError("hstack: row mismatch");
    CMat r(left.rows(), left.cols() + right.cols());
    for (int i = 0; i < left.rows(); ++i) {
        for (int j = 0; j < left.cols(); ++j) r(i, j) = left(i, j);
        for (int j = 0; j < right.cols(); ++j) r(i, left.cols() + j) = right(i, j);
    }
    return r;
}

CMat drop_column(const CMat& m, int col) {
    CMat r(m.rows(), m.cols() - 1);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0, k = 0; j < m.cols(); ++j)
            if (j != col) r(i, k++) = m(i, j);
    return r;
}

CMat drop_row(const CMat& m, int row) {
    CMat r(m.rows() - 1, m.cols());
    for (int i = 0, k = 0; i < m.rows(); ++i) {
        if (i == row) continue;
        for (int j = 0; j < m.cols(); ++j) r(k, j) = m(i, j);
        ++k;
    }
    return r;
}

std::vector<CRat> drop_entry(std::vector<CRat> v, size_t at) {
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(at));
    return v;
}

// Projector onto the column span of H, orthogonal for the hermitian form
// given by the diagonal mass M.
CMat span_projector(const CMat& H, const CMat& M) {
    if (H.cols() == 0) return CMat(H.rows(), H.rows());
    CMat Ht = H.conj_transpose();
    CMat gram = Ht * M * H;
    return H * inverse(gram) * Ht * M;
}

}  // namespace

CMat GradedComplex::d0() const { return vstack(D0t, D0f); }

CMat GradedComplex::d1() const { return hstack(D1t, D1f); }

CMat GradedComplex::mass0() const { return diagonal(m0); }

CMat GradedComplex::mass1() const {
    std::vector<CRat> m = m1t;
    m.insert(m.end(), m1f.begin(), m1f.end());
    return diagonal(m);
}

CMat GradedComplex::mass2() const { return diagonal(m2); }

void GradedComplex::check_complex() const {
    if (!(d1() * d0()).is_zero())
        throw StructureError("graded complex: d^2 != 0");
}

HodgeData hodge(const GradedComplex& X) {
    CMat d0 = X.d0(), d1 = X.d1();
    CMat M0 = X.mass0(), M1 = X.mass1(), M2 = X.mass2();
    CMat ds0 = inverse(M0) * d0.conj_transpose() * M1;  // C^1 -> C^0
    CMat ds1 = inverse(M1) * d1.conj_transpose() * M2;  // C^2 -> C^1

    CMat L0 = ds0 * d0;
    CMat L1 = d0 * ds0 + ds1 * d1;
    CMat L2 = d1 * ds1;

    HodgeData hd;
    hd.H0 = kernel_basis(L0);
    hd.H1 = kernel_basis(L1);
    hd.H2 = kernel_basis(L2);
    hd.P0 = span_projector(hd.H0, M0);
    hd.P1 = span_projector(hd.H1, M1);
    hd.P2 = span_projector(hd.H2, M2);

    // Green's operators: L + P is invertible, commutes with L and P, and
    // (L + P)^{-1} - P inverts L away from the harmonics on both sides.
    CMat G0 = inverse(L0 + hd.P0) - hd.P0;
    CMat G1 = inverse(L1 + hd.P1) - hd.P1;
    CMat G2 = inverse(L2 + hd.P2) - hd.P2;

    hd.eta0 = G0 * ds0;
    hd.eta1 = G1 * ds1;

    CMat I0 = CMat::identity(d0.cols());
    CMat I1 = CMat::identity(d1.cols());
    CMat I2 = CMat::identity(d1.rows());
    if (!(hd.eta0 * d0 == I0 - hd.P0) ||
        !(d0 * hd.eta0 + hd.eta1 * d1 == I1 - hd.P1) ||
        !(d1 * hd.eta1 == I2 - hd.P2))
        throw StructureError("hodge: homotopy identity failed");
    if (!(d1 * G1 == G2 * d1) || !(d0 * G0 == G1 * d0))
        throw StructureError("hodge: Green's operator does not commute with d");
    return hd;
}

std::vector<int> HodgeData::betti() const {
    return {H0.cols(), H1.cols(), H2.cols()};
}

static ModeComplex make_mode(int K, int n, bool closed) {
    if (K < 1) throw StructureError("mode complex needs at least one segment");
    ModeComplex mc;
    mc.K = K;
    mc.n = n;
    mc.closed = closed;
    mc.A = make_side(K, closed, n, false);
    mc.B = make_side(K, closed, -n, true);
    mc.A_avg = primal_average(K, closed);
    mc.B_avg = dual_average(K, closed);
    return mc;
}

ModeComplex ModeComplex::cylinder(int K, int n) { return make_mode(K, n, false); }

ModeComplex ModeComplex::torus(int K, int n) { return make_mode(K, n, true); }

GradedComplex ModeComplex::fluct_a() const {
    if (closed) throw UnsupportedModelError("fluctuation complex: no boundary on a closed surface");
    GradedComplex X;
    X.n0 = K;
    X.n1t = K;
    X.n1f = K;
    X.n2 = K;
    X.D0t = drop_column(A.D0t, 0);
    X.D0f = scaled_identity(K, CRat::i(n));
    X.D1t = scaled_identity(K, -CRat::i(n));
    X.D1f = drop_column(A.D1f, 0);
    X.m0 = drop_entry(A.m0, 0);
    X.m1t = A.m1t;
    X.m1f = drop_entry(A.m1f, 0);
    X.m2 = A.m2;
    X.check_complex();
    return X;
}

GradedComplex ModeComplex::fluct_b() const {
    if (closed) throw UnsupportedModelError("fluctuation complex: no boundary on a closed surface");
    // Drop the first-end dual slots; the far-end extrapolation row now reads
    // an external source, whose fluctuation part is minus the last midpoint.
    CMat D = drop_row(B.D0t, 0);
    D(K - 1, K - 1) = CRat(-1);
    GradedComplex X;
    X.n0 = K;
    X.n1t = K;
    X.n1f = K;
    X.n2 = K;
    X.D0t = D;
    X.D0f = scaled_identity(K, -CRat::i(n));
    X.D1t = scaled_identity(K, CRat::i(n));
    X.D1f = D;
    X.m0 = B.m0;
    X.m1t = drop_entry(B.m1t, 0);
    X.m1f = B.m1f;
    X.m2 = drop_entry(B.m2, 0);
    X.check_complex();
    return X;
}

}  // namespace bvlab

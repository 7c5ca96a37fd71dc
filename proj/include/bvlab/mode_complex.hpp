#pragma once

#include "bvlab/linalg.hpp"

#include <vector>

namespace bvlab {

// ---------------------------------------------------------------------------
// Per-mode cochain complexes on a segmented cylinder or torus
// ---------------------------------------------------------------------------
//
// The surface is a product of a K-segment axial mesh (an interval for the
// cylinder, a circle for the torus) with a transverse circle resolved into
// Fourier modes. For a fixed mode the transverse derivative is the scalar
// i*mode and a three-term complex remains, with one-forms split into an
// axial (dt) and a transverse (dphi) slot family:
//
//   C^0 --(D, i*mode)--> C^1 = (dt, dphi) --(D on dphi - i*mode on dt)--> C^2
//
// D is the mesh difference operator of the slot family's support.

struct GradedComplex {
    int n0 = 0, n1t = 0, n1f = 0, n2 = 0;
    CMat D0t;  // C^0 -> dt slots
    CMat D0f;  // C^0 -> dphi slots
    CMat D1t;  // dt slots -> C^2
    CMat D1f;  // dphi slots -> C^2
    std::vector<CRat> m0, m1t, m1f, m2;  // diagonal masses, all positive

    int n1() const { return n1t + n1f; }
    CMat d0() const;  // n0 -> n1 (dt block stacked over dphi block)
    CMat d1() const;  // n1 -> n2
    CMat mass0() const;
    CMat mass1() const;
    CMat mass2() const;
    void check_complex() const;  // d1 d0 = 0
};

// Exact Hodge package: harmonic bases, projectors and the chain homotopy
// eta with d eta + eta d = id - P per degree. The adjoint is sesquilinear
// (conjugate transpose against the masses), which keeps the Laplacians
// definite on the orthogonal complement of the harmonics for every mode.
struct HodgeData {
    CMat H0, H1, H2;     // harmonic bases (columns)
    CMat P0, P1, P2;     // projectors onto harmonics
    CMat eta0, eta1;     // C^1 -> C^0 and C^2 -> C^1
    std::vector<int> betti() const;
};

HodgeData hodge(const GradedComplex& X);

// The two dual complexes of one mode. The primal side carries mode n on the
// primal mesh (nodes/edges); the dual side carries mode -n on the dual mesh
// (midpoints/dual edges). On the cylinder the dual difference operator
// extends the dual field by its nearest value across each end, producing
// zero boundary rows; on the torus both meshes are periodic.
struct ModeComplex {
    int K = 0;
    int n = 0;
    bool closed = false;
    GradedComplex A;  // primal, mode n
    GradedComplex B;  // dual, mode -n
    CMat A_avg;       // axial contraction: edge values to nodes
    CMat B_avg;       // axial contraction: dual edge values to midpoints

    static ModeComplex cylinder(int K, int n);
    static ModeComplex torus(int K, int n);

    // Fluctuation complexes entering the boundary splitting: the primal side
    // drops the first-end slots (Dirichlet), the dual side drops its
    // first-end dual slots and couples the last extrapolation row to an
    // external source, leaving a square invertible-bidiagonal difference.
    GradedComplex fluct_a() const;
    GradedComplex fluct_b() const;
};

}  // namespace bvlab

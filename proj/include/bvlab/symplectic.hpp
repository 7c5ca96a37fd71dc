#pragma once

#include "bvlab/derivation.hpp"

#include <map>
#include <vector>

namespace bvlab {

// ---------------------------------------------------------------------------
// Constant Darboux structures
// ---------------------------------------------------------------------------
//
// A symplectic structure of degree k - 1 in pairing normal form:
//
//   omega = sum_i  c_i d(m_i) d(b_i)
//
// with constant invertible coefficients c_i (monomials in parameters). The
// ghost numbers of each pair satisfy gh(b) + gh(m) = k - 1, and every pair
// variable appears in exactly one pair.

struct DarbouxPair {
    int base = -1;
    int mom = -1;
    GradedPoly coeff;  // constant invertible; empty means 1
};

struct DarbouxStructure {
    TablePtr tbl;
    int k = 0;  // ghost number of the action; gh(omega) = k - 1
    std::vector<DarbouxPair> pairs;

    GradedPoly omega() const;
    void validate() const;
    bool is_pair_var(int v) const;
    std::vector<int> pair_vars() const;  // bases then momenta, pair order
};

// Inverse of a single-term constant polynomial (rationals times parameter
// monomials whose generators all carry square relations, e.g. -2*i).
GradedPoly coefficient_inverse(const GradedPoly& c);

// Writes a one-form as sum_v C_v d(v) with coefficients on the left.
// Throws GradingError unless every term has exactly one delta factor.
std::map<int, GradedPoly> right_normal_form(const GradedPoly& one_form);

// Solves iota_X omega = rhs for X. The right hand side must be a one-form
// supported on the pair variables; the solve is exact and verified.
VectorField solve_contraction(const GradedPoly& rhs, const DarbouxStructure& D);

// Hamiltonian vector field of f: iota_{X_f} omega = d(f).
VectorField hamiltonian_vf(const GradedPoly& f, const DarbouxStructure& D);

// Graded bracket (f, g) = (-1)^{|f|} X_f(g). For k even this is the odd
// (anti)bracket, for k odd the even Poisson bracket; both share the solve.
GradedPoly sym_bracket(const GradedPoly& f, const GradedPoly& g,
                       const DarbouxStructure& D);

// Odd Laplacian: sum_i c_i^{-1} dL/db_i dL/dm_i.
GradedPoly bv_laplacian(const GradedPoly& f, const DarbouxStructure& D);

// Graded divergence sum_v (-1)^{|v|} dL/dv X^v over field variables.
GradedPoly divergence(const VectorField& X);

// Recovers S from an exact one-form d(S) = phi using the Euler weights:
// on the u^j coefficient the total ghost weight is total_ghost - 2j, and
// S_j = iota_E(phi_j) / (total_ghost - 2j). Verified by re-differentiating;
// throws UnsupportedModelError when some weight vanishes, StructureError
// when phi is not exact.
GradedPoly euler_reconstruct(const GradedPoly& phi, int total_ghost);

}  // namespace bvlab

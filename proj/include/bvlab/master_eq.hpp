#pragma once

#include "bvlab/symplectic.hpp"

#include <string>
#include <vector>

namespace bvlab {

// Outcome of one verification step. `residual` carries the rendered
// left-minus-right polynomial whenever the step computed one.
struct CheckOutcome {
    std::string check;
    std::string identity;
    std::string status;  // "pass" | "fail" | "skip"
    std::string residual;
    std::string note;

    bool passed() const { return status == "pass"; }

    static CheckOutcome of(std::string check, std::string identity,
                           const GradedPoly& residual, std::string note = "");
    static CheckOutcome skip(std::string check, std::string identity, std::string note);
};

// A finite-dimensional model with Hamiltonian cohomological vector field.
struct BvModel {
    std::string name;
    TablePtr tbl;
    DarbouxStructure D;
    GradedPoly S;
    VectorField Q;  // Hamiltonian vector field of S

    static BvModel make(std::string name, TablePtr tbl, DarbouxStructure D, GradedPoly S);
};

// (S, S) = 0.
CheckOutcome check_cme(const BvModel& m);

// T = (1/2)(S,S) - i hbar Laplacian(S): the quantum master obstruction.
GradedPoly compute_T(const GradedPoly& S, const DarbouxStructure& D);

// (1/2)(S,S) - i hbar Laplacian(S) = 0.
CheckOutcome check_qme(const BvModel& m);

// Structure checks that stay meaningful when Q only weakly preserves the
// symplectic form. The vector field may differ from the Hamiltonian one.
//  - iota_Q omega = d(S)
//  - L_{[Q,Q]} omega = 0
//  - exactness of iota_{[Q,Q]} omega, certified per u-order via the Euler
//    contraction H_j = iota_E(phi_j), d(H_j) = (k - 2j + 1) phi_j
std::vector<CheckOutcome> check_weak_bv(const DarbouxStructure& D, const GradedPoly& S,
                                        const VectorField& Q);

// The contraction-commutator chain [L_Q, iota_Q] = iota_{[Q,Q]}, evaluated on
// every field generator, every delta generator, and on omega itself; followed
// by (1/2) iota_Q iota_Q omega = T and (1/2) iota_{[Q,Q]} omega = -d(T) when
// Q is Hamiltonian with T = (1/2)(S,S) - i hbar Laplacian(S).
std::vector<CheckOutcome> check_lemma_chain(const DarbouxStructure& D, const GradedPoly& S,
                                            const VectorField& Q);

}  // namespace bvlab

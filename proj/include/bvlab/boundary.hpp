#pragma once

#include "bvlab/bf_model.hpp"

namespace bvlab {

// ---------------------------------------------------------------------------
// End reduction of a cylinder model
// ---------------------------------------------------------------------------
//
// On the cylinder the lifted differential is not Hamiltonian; its defect
// alpha = iota_Q omega - d(S) is a one-form supported on the end slots.
// Differentiating it yields an exact symplectic structure on the end
// variables (ghost one instead of zero: the induced bracket is even), the
// lift restricts to those variables, and the end action is recovered from
// the Euler weights. The end obstruction is defined by the end master
// equation; the flow of the bulk obstruction must then reproduce it.

struct BoundaryModel {
    TablePtr tbl;           // shared with the bulk model
    GradedPoly alpha;       // end one-form (the bulk defect)
    GradedPoly omega;       // d(alpha)
    DarbouxStructure D;     // end pairs, k one above the bulk (empty if shared)
    std::vector<DarbouxPair> rows;  // pairing rows of omega; on a single
                                    // segment one dual slot serves both ends
    bool paired = true;     // false when a momentum slot is shared
    VectorField Q;          // restriction of the bulk lift
    GradedPoly S;           // end action
    GradedPoly T;           // end obstruction (1/2)(S,S)
    std::vector<int> vars;  // end variables, pair order
};

// Throws UnsupportedModelError when the defect is not supported on the end
// slots (non-tangent sweep).
BoundaryModel boundary_reduce(const BfModel& m);

// Hamiltonian vector field for the end two-form. When the pairing is shared
// (single segment) the two-form is degenerate; the solve then requires f to
// be basic, picks one representative, and verifies it exactly.
VectorField end_hamiltonian_vf(const BoundaryModel& b, const GradedPoly& f);

// End bracket (f, g) = (-1)^{|f|} X_f(g), defined through the representative
// solve so that it also covers the degenerate single-segment pairing.
GradedPoly end_bracket(const BoundaryModel& b, const GradedPoly& f,
                       const GradedPoly& g);

// The full relation sheet between a bulk cylinder model and its end
// reduction: end structure and master equations, restriction of the lift,
// the double contraction and obstruction flow, and the corrected bulk
// equations. Every residual is an exact polynomial.
std::vector<CheckOutcome> check_boundary_summary(const BfModel& m,
                                                 const BoundaryModel& b);

}  // namespace bvlab

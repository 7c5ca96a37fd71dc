#pragma once

#include "bvlab/master_eq.hpp"
#include "bvlab/mode_complex.hpp"
#include "bvlab/symplectic.hpp"

#include <string>
#include <vector>

namespace bvlab {

// ---------------------------------------------------------------------------
// First-order two-field models on a mode complex
// ---------------------------------------------------------------------------
//
// Each slot of the two dual complexes becomes a field variable. The primal
// side carries the superfield (c, At dt + Af dphi, Bp dtdphi) with ghosts
// (1, 0, -1); the dual side carries (B, Apt dt + Apf dphi, cp dtdphi) with
// ghosts (0, -1, -2). Conjugate slots pair diagonally: (c, cp), (At, Apf),
// (Af, Apt), (Bp, B).
//
// The action is the transgressed kinetic pairing of the dual field against
// the lifted mesh differential of the primal field, optionally extended by
// u times the pairing against a sweep contraction. The cohomological vector
// field is the lift of the differential itself (plus u times the contraction
// lift), not the Hamiltonian field of S: on a closed surface the two agree,
// on the cylinder their mismatch is the boundary one-form alpha_bar.

enum class SweepVector { rotation, axial };

// Sign conventions entering the pairing and the action. The defaults are
// fixed by requiring the Hamiltonian field of the action to coincide with
// the lifted differential on the closed geometry; tests verify the choice
// and its sharpness.
struct BfSigns {
    int s_c = 1, s_At = 1, s_Af = -1, s_Bp = 1;  // pairing coefficients in omega
    int p0 = 1, p1 = -1, p2 = 1;                 // degree-block signs of <B-side, ->
    int w = -1;                                  // relative dt/dphi sign inside degree one
};

struct BfFamilies {
    std::vector<int> c, At, Af, Bp;  // primal slots
    std::vector<int> B, Apt, Apf, cp;  // dual slots
};

// Families as polynomial slot vectors. Substituting an entry rebuilds every
// structure touching that slot; a zero entry silently drops its pairings,
// which is how the end splitting removes slots from the action.
struct PrimalPolys {
    std::vector<GradedPoly> c, At, Af, Bp;
};

struct DualPolys {
    std::vector<GradedPoly> B, Apt, Apf, cp;
};

// Slot values of a degree-graded expression on the primal side.
struct PairedValues {
    std::vector<GradedPoly> v0, v1t, v1f, v2;
};

PrimalPolys primal_polys(const TablePtr& tbl, const BfFamilies& fam);
DualPolys dual_polys(const TablePtr& tbl, const BfFamilies& fam);

// Values of the lifted mesh differential of the primal superfield.
PairedValues differential_values(const TablePtr& tbl, const PrimalPolys& x,
                                 const GradedComplex& A);

// Values of the sweep contraction and of the sweep derivative of the primal
// superfield.
PairedValues contraction_values(const TablePtr& tbl, const PrimalPolys& x,
                                const ModeComplex& mc, SweepVector vec);
PairedValues lie_values(const TablePtr& tbl, const PrimalPolys& x,
                        const ModeComplex& mc, SweepVector vec);

// Pairing of the dual-side slot polynomials against primal-side slot values,
// one diagonal block per degree, with the relative dt/dphi sign inside
// degree one taken from the convention table. Degree-preserving insertions
// (the sweep derivative) pair with an extra minus on the middle degree
// relative to degree-shifting ones (the differential and the contraction).
GradedPoly paired_form(const TablePtr& tbl, const DualPolys& y,
                       const PairedValues& v, const BfSigns& sg,
                       bool flip_mid = false);

struct BfModel {
    std::string name;
    TablePtr tbl;
    DarbouxStructure D;
    GradedPoly S;  // action, including the u term when equivariant
    GradedPoly T;  // sweep obstruction u<B-side, L_v primal>; zero otherwise
    VectorField Q;  // lifted differential (+ u * contraction lift)
    ModeComplex mc;
    BfFamilies fam;
    bool equivariant = false;
    SweepVector vec = SweepVector::rotation;
    BfSigns signs;

    // iota_Q omega - delta S: zero on a closed surface, a boundary one-form
    // on the cylinder.
    GradedPoly alpha_bar() const;

    // Variables allowed to carry the deltas of alpha_bar: the end values of
    // the primal scalar and dphi slots.
    std::vector<int> boundary_primal_vars() const;
};

BfModel make_bf_model(const ModeComplex& mc, bool equivariant, SweepVector vec,
                      std::string name, const BfSigns& signs = {});

// Bulk verdicts. On a closed surface: the Hamiltonian/lift match, the weak
// master equation (1/2)(S,S) = T, Lap S = 0 and the combined quantum
// version. On a cylinder: sweep tangency (no u part in alpha_bar) and
// boundary support of alpha_bar.
std::vector<CheckOutcome> check_bf_bulk(const BfModel& m);

}  // namespace bvlab

#pragma once

#include "bvlab/algebra.hpp"

#include <map>

namespace bvlab {

// A graded derivation of the free algebra, determined by its images on
// generators and its parity:
//
//   D(fg) = D(f) g + (-1)^{|D||f|} f D(g).
//
// Generators without an image map to zero. The ghost shift is bookkeeping
// used for validity checks by callers.
struct Derivation {
    TablePtr tbl;
    int parity = 0;  // 0 even, 1 odd
    int ghost = 0;
    std::map<int, GradedPoly> images;

    GradedPoly apply(const GradedPoly& f) const;
    GradedPoly image_of(int var) const;
};

// Graded commutator [a, b] = a b - (-1)^{|a||b|} b a, again a derivation.
Derivation commutator(const Derivation& a, const Derivation& b);

// A (polynomial) vector field on the graded space: components X^v per
// generator, X = sum X^v d/dv. Acting on functions it is the derivation with
// those images on field generators and zero on the delta generators.
struct VectorField {
    TablePtr tbl;
    int parity = 0;
    int ghost = 0;
    std::map<int, GradedPoly> comps;

    GradedPoly component(int var) const;
    Derivation as_derivation() const;
    GradedPoly apply(const GradedPoly& f) const { return as_derivation().apply(f); }
};

VectorField commutator(const VectorField& a, const VectorField& b);

// The de Rham differential on variational forms: v -> d(v), d(v) -> 0.
Derivation delta(TablePtr tbl);

// Contraction with a vector field: d(v) -> X^v, functions -> 0.
Derivation iota(const VectorField& x);

// Lie derivative, the graded commutator [iota_X, delta]. On functions it
// reproduces X itself.
Derivation lie(const VectorField& x);

// The Euler vector field E(v) = gh(v) v, including the ghost-2 weight of the
// equivariant parameter u (so that it measures the total internal degree).
VectorField euler_field(TablePtr tbl);

// Thin wrapper asserting homogeneous form degree (number of delta factors).
struct FieldForm {
    GradedPoly value;
    int degree = 0;

    static FieldForm wrap(GradedPoly p);  // throws GradingError when mixed
};

}  // namespace bvlab

#include "bvlab/derivation.hpp"

namespace bvlab {

GradedPoly Derivation::image_of(int var) const {
    auto it = images.find(var);
    if (it != images.end()) return it->second;
    return GradedPoly::zero(tbl);
}

GradedPoly Derivation::apply(const GradedPoly& f) const {
    GradedPoly r(tbl);
    for (const auto& [m, c] : f.terms()) {
        // Leibniz over the canonical word g1^e1 ... gk^ek: position j picks up
        // the parity of the strict prefix.
        int prefix_parity = 0;
        for (size_t j = 0; j < m.factors.size(); ++j) {
            auto [v, e] = m.factors[j];
            const VarInfo& vi = tbl->info(v);
            auto it = images.find(v);
            if (it != images.end() && !it->second.is_zero()) {
                // prefix monomial including g_j^{e-1}
                Monomial pre;
                pre.factors.assign(m.factors.begin(),
                                   m.factors.begin() + static_cast<long>(j));
                if (e > 1) pre.factors.emplace_back(v, e - 1);
                Monomial suf;
                suf.factors.assign(m.factors.begin() + static_cast<long>(j) + 1,
                                   m.factors.end());
                Rat coeff = c * e;
                if (parity && prefix_parity) coeff = -coeff;
                GradedPoly term(tbl);
                term.add_term(pre, coeff);
                term *= it->second;
                GradedPoly tail(tbl);
                tail.add_term(suf, Rat(1));
                term *= tail;
                r += term;
            }
            if (vi.odd) prefix_parity ^= (e & 1);
        }
    }
    return r;
}

Derivation commutator(const Derivation& a, const Derivation& b) {
    Derivation r;
    r.tbl = a.tbl;
    r.parity = (a.parity + b.parity) & 1;
    r.ghost = a.ghost + b.ghost;
    int sign = (a.parity && b.parity) ? -1 : 1;
    for (int v = 0; v < a.tbl->size(); ++v) {
        GradedPoly img = a.apply(b.image_of(v)) - Rat(sign) * b.apply(a.image_of(v));
        if (!img.is_zero()) r.images.emplace(v, std::move(img));
    }
    return r;
}

GradedPoly VectorField::component(int var) const {
    auto it = comps.find(var);
    if (it != comps.end()) return it->second;
    return GradedPoly::zero(tbl);
}

Derivation VectorField::as_derivation() const {
    Derivation d;
    d.tbl = tbl;
    d.parity = parity;
    d.ghost = ghost;
    d.images = comps;
    return d;
}

VectorField commutator(const VectorField& a, const VectorField& b) {
    VectorField r;
    r.tbl = a.tbl;
    r.parity = (a.parity + b.parity) & 1;
    r.ghost = a.ghost + b.ghost;
    Derivation da = a.as_derivation(), db = b.as_derivation();
    int sign = (a.parity && b.parity) ? -1 : 1;
    for (int v = 0; v < a.tbl->size(); ++v) {
        if (a.tbl->info(v).kind == VarKind::Delta) continue;
        GradedPoly img = da.apply(b.component(v)) - Rat(sign) * db.apply(a.component(v));
        if (!img.is_zero()) r.comps.emplace(v, std::move(img));
    }
    return r;
}

Derivation delta(TablePtr tbl) {
    if (!tbl->deltas_enabled())
        throw StructureError("delta requires a table with delta generators");
    Derivation d;
    d.tbl = tbl;
    d.parity = 1;
    d.ghost = 0;
    for (int v = 0; v < tbl->size(); ++v) {
        const VarInfo& vi = tbl->info(v);
        if (vi.kind == VarKind::Field && vi.delta_id >= 0)
            d.images.emplace(v, GradedPoly::variable(tbl, vi.delta_id));
    }
    return d;
}

Derivation iota(const VectorField& x) {
    const TablePtr& tbl = x.tbl;
    if (!tbl->deltas_enabled())
        throw StructureError("iota requires a table with delta generators");
    Derivation d;
    d.tbl = tbl;
    d.parity = (x.parity + 1) & 1;
    d.ghost = x.ghost;
    for (const auto& [v, img] : x.comps) {
        int did = tbl->info(v).delta_id;
        if (did >= 0 && !img.is_zero()) d.images.emplace(did, img);
    }
    return d;
}

Derivation lie(const VectorField& x) {
    Derivation L = commutator(iota(x), delta(x.tbl));
    L.ghost = x.ghost;
    return L;
}

VectorField euler_field(TablePtr tbl) {
    VectorField e;
    e.tbl = tbl;
    e.parity = 0;
    e.ghost = 0;
    for (int v = 0; v < tbl->size(); ++v) {
        const VarInfo& vi = tbl->info(v);
        if (vi.kind == VarKind::Delta) continue;
        if (vi.square) continue;  // relation parameters carry no weight
        if (vi.ghost == 0) continue;
        e.comps.emplace(v, GradedPoly::variable(tbl, v) * Rat(vi.ghost));
    }
    return e;
}

FieldForm FieldForm::wrap(GradedPoly p) {
    FieldForm f;
    f.degree = p.delta_degree();
    f.value = std::move(p);
    return f;
}

}  // namespace bvlab

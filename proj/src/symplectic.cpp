#include "bvlab/symplectic.hpp"

#include <set>

namespace bvlab {

GradedPoly DarbouxStructure::omega() const {
    GradedPoly w(tbl);
    for (const auto& p : pairs) {
        GradedPoly c = p.coeff.is_zero() ? GradedPoly::constant(tbl, 1) : p.coeff;
        int db = tbl->info(p.base).delta_id;
        int dm = tbl->info(p.mom).delta_id;
        w += c * GradedPoly::variable(tbl, dm) * GradedPoly::variable(tbl, db);
    }
    return w;
}

bool DarbouxStructure::is_pair_var(int v) const {
    for (const auto& p : pairs)
        if (p.base == v || p.mom == v) return true;
    return false;
}

std::vector<int> DarbouxStructure::pair_vars() const {
    std::vector<int> out;
    for (const auto& p : pairs) out.push_back(p.base);
    for (const auto& p : pairs) out.push_back(p.mom);
    return out;
}

void DarbouxStructure::validate() const {
    std::set<int> seen;
    for (const auto& p : pairs) {
        const VarInfo& b = tbl->info(p.base);
        const VarInfo& m = tbl->info(p.mom);
        if (b.kind != VarKind::Field || m.kind != VarKind::Field)
            throw StructureError("pairing must be between fields");
        if (b.ghost + m.ghost != k - 1)
            throw GradingError("pair (" + b.name + ", " + m.name +
                               ") has ghost sum " + std::to_string(b.ghost + m.ghost) +
                               ", expected " + std::to_string(k - 1));
        if (!seen.insert(p.base).second || !seen.insert(p.mom).second)
            throw StructureError("variable appears in more than one pair");
        if (!p.coeff.is_zero()) coefficient_inverse(p.coeff);  // throws if bad
    }
}

GradedPoly coefficient_inverse(const GradedPoly& c) {
    if (c.terms().size() != 1)
        throw StructureError("pairing coefficient is not a single term: " + c.render());
    const auto& [m, q] = *c.terms().begin();
    const TablePtr& tbl = c.table();
    GradedPoly inv = GradedPoly::constant(tbl, Rat(1) / q);
    for (const auto& [v, e] : m.factors) {
        const VarInfo& vi = tbl->info(v);
        if (!vi.square)
            throw StructureError("pairing coefficient contains a non-invertible factor: " +
                                 vi.name);
        // v^2 = s  =>  v^{-1} = v / s
        GradedPoly f = GradedPoly::variable(tbl, v) * (Rat(1) / *vi.square);
        inv *= f.pow(e);
    }
    return inv;
}

std::map<int, GradedPoly> right_normal_form(const GradedPoly& phi) {
    const TablePtr& tbl = phi.table();
    std::map<int, GradedPoly> out;
    for (const auto& [m, c] : phi.terms()) {
        int delta_pos = -1, deltas = 0;
        for (size_t j = 0; j < m.factors.size(); ++j) {
            if (tbl->info(m.factors[j].first).kind == VarKind::Delta) {
                deltas += m.factors[j].second;
                delta_pos = static_cast<int>(j);
            }
        }
        if (deltas != 1)
            throw GradingError("not a one-form: " + phi.render());
        int dvar = m.factors[static_cast<size_t>(delta_pos)].first;
        // move the delta factor to the right end of the word
        int suffix_parity = 0;
        for (size_t j = static_cast<size_t>(delta_pos) + 1; j < m.factors.size(); ++j) {
            auto [v, e] = m.factors[j];
            if (tbl->info(v).odd) suffix_parity ^= (e & 1);
        }
        Rat coeff = c;
        if (tbl->info(dvar).odd && suffix_parity) coeff = -coeff;
        Monomial rest;
        for (size_t j = 0; j < m.factors.size(); ++j)
            if (j != static_cast<size_t>(delta_pos)) rest.factors.push_back(m.factors[j]);
        int field = tbl->info(dvar).delta_of;
        auto it = out.find(field);
        if (it == out.end()) it = out.emplace(field, GradedPoly(tbl)).first;
        it->second.add_term(rest, coeff);
    }
    return out;
}

VectorField solve_contraction(const GradedPoly& rhs, const DarbouxStructure& D) {
    const TablePtr& tbl = D.tbl;
    VectorField X;
    X.tbl = tbl;
    if (rhs.is_zero()) return X;
    // parity(iota_X omega) = |X| + 1 + |omega| with |omega| = k - 1 mod 2
    X.parity = (((rhs.parity() + D.k) % 2) + 2) % 2;
    X.ghost = rhs.is_ghost_homogeneous() ? rhs.ghost_number() - (D.k - 1) : 0;

    auto coeffs = right_normal_form(rhs);
    std::set<int> paired;
    for (const auto& p : D.pairs) {
        paired.insert(p.base);
        paired.insert(p.mom);
    }
    for (const auto& [v, c] : coeffs)
        if (!paired.count(v) && !c.is_zero())
            throw StructureError("one-form has a component outside the pairing: " +
                                 tbl->info(v).name);

    auto coeff_of = [&](int v) {
        auto it = coeffs.find(v);
        return it == coeffs.end() ? GradedPoly::zero(tbl) : it->second;
    };

    for (const auto& p : D.pairs) {
        GradedPoly cinv = p.coeff.is_zero() ? GradedPoly::constant(tbl, 1)
                                            : coefficient_inverse(p.coeff);
        GradedPoly xm = coeff_of(p.base) * cinv;
        GradedPoly xb = coeff_of(p.mom) * cinv;
        // sign from commuting the contraction through the pairing normal form
        int mb = tbl->info(p.mom).odd ? 1 : 0;
        int bb = tbl->info(p.base).odd ? 1 : 0;
        if (((mb + 1) * (1 + bb)) & 1) xb = -xb;
        if (!xm.is_zero()) X.comps.emplace(p.mom, std::move(xm));
        if (!xb.is_zero()) X.comps.emplace(p.base, std::move(xb));
    }

    // exactness of the solve is part of the contract
    if (!(iota(X).apply(D.omega()) == rhs))
        throw StructureError("contraction solve failed to reproduce the one-form");
    return X;
}

VectorField hamiltonian_vf(const GradedPoly& f, const DarbouxStructure& D) {
    return solve_contraction(delta(f.table()).apply(f), D);
}

GradedPoly sym_bracket(const GradedPoly& f, const GradedPoly& g,
                       const DarbouxStructure& D) {
    if (f.is_zero() || g.is_zero()) return GradedPoly::zero(D.tbl);
    VectorField xf = hamiltonian_vf(f, D);
    GradedPoly r = xf.apply(g);
    if (f.parity() & 1) r = -r;
    return r;
}

GradedPoly bv_laplacian(const GradedPoly& f, const DarbouxStructure& D) {
    GradedPoly r(D.tbl);
    for (const auto& p : D.pairs) {
        GradedPoly cinv = p.coeff.is_zero() ? GradedPoly::constant(D.tbl, 1)
                                            : coefficient_inverse(p.coeff);
        r += cinv * f.left_derivative(p.mom).left_derivative(p.base);
    }
    return r;
}

GradedPoly divergence(const VectorField& X) {
    GradedPoly r(X.tbl);
    for (const auto& [v, comp] : X.comps) {
        GradedPoly d = comp.left_derivative(v);
        if (X.tbl->info(v).odd && ((X.parity + 1) & 1)) d = -d;
        r += d;
    }
    return r;
}

GradedPoly euler_reconstruct(const GradedPoly& phi, int total_ghost) {
    const TablePtr& tbl = phi.table();
    if (phi.is_zero()) return GradedPoly::zero(tbl);
    Derivation iE = iota(euler_field(tbl));
    GradedPoly contracted = iE.apply(phi);
    int u = tbl->equiv_u();
    int nmax = contracted.max_power(u);
    GradedPoly s(tbl);
    GradedPoly upow = GradedPoly::constant(tbl, 1);
    GradedPoly uvar = GradedPoly::variable(tbl, u);
    for (int j = 0; j <= nmax; ++j) {
        GradedPoly cj = contracted.coefficient_of_power(u, j);
        if (!cj.is_zero()) {
            int w = total_ghost - 2 * j;
            if (w == 0)
                throw UnsupportedModelError(
                    "Euler reconstruction at vanishing weight (ghost " +
                    std::to_string(total_ghost) + ", order " + std::to_string(j) + ")");
            s += upow * cj * (Rat(1) / w);
        }
        upow *= uvar;
    }
    if (!(delta(tbl).apply(s) == phi))
        throw StructureError("one-form is not exact; Euler reconstruction failed");
    return s;
}

}  // namespace bvlab

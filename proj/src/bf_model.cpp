#include "bvlab/bf_model.hpp"

#include "bvlab/derivation.hpp"
#include "bvlab/errors.hpp"

namespace bvlab {

namespace {

using Polys = std::vector<GradedPoly>;

Polys family_polys(const TablePtr& tbl, const std::vector<int>& ids) {
    Polys p;
    p.reserve(ids.size());
    for (int id : ids) p.push_back(GradedPoly::variable(tbl, id));
    return p;
}

Polys zeros(const TablePtr& tbl, size_t n) {
    return Polys(n, GradedPoly::zero(tbl));
}

Polys scale(const Polys& v, const GradedPoly& s) {
    Polys out;
    out.reserve(v.size());
    for (const GradedPoly& p : v) out.push_back(s * p);
    return out;
}

void add_images(VectorField& Q, const std::vector<int>& targets, const Polys& vals) {
    for (size_t r = 0; r < targets.size(); ++r) {
        auto it = Q.comps.find(targets[r]);
        if (it == Q.comps.end())
            Q.comps.emplace(targets[r], vals[r]);
        else
            it->second = it->second + vals[r];
    }
}

}  // namespace

PrimalPolys primal_polys(const TablePtr& tbl, const BfFamilies& fam) {
    return {family_polys(tbl, fam.c), family_polys(tbl, fam.At),
            family_polys(tbl, fam.Af), family_polys(tbl, fam.Bp)};
}

DualPolys dual_polys(const TablePtr& tbl, const BfFamilies& fam) {
    return {family_polys(tbl, fam.B), family_polys(tbl, fam.Apt),
            family_polys(tbl, fam.Apf), family_polys(tbl, fam.cp)};
}

PairedValues differential_values(const TablePtr& tbl, const PrimalPolys& x,
                                 const GradedComplex& A) {
    PairedValues v;
    v.v0 = zeros(tbl, x.c.size());
    v.v1t = mat_apply(tbl, A.D0t, x.c);
    v.v1f = mat_apply(tbl, A.D0f, x.c);
    v.v2 = mat_apply(tbl, A.D1t, x.At);
    Polys df = mat_apply(tbl, A.D1f, x.Af);
    for (size_t e = 0; e < v.v2.size(); ++e) v.v2[e] = v.v2[e] + df[e];
    return v;
}

PairedValues contraction_values(const TablePtr& tbl, const PrimalPolys& x,
                                const ModeComplex& mc, SweepVector vec) {
    PairedValues v;
    if (vec == SweepVector::rotation) {
        v.v0 = x.Af;
        v.v1t = scale(x.Bp, GradedPoly::constant(tbl, Rat(-1)));
        v.v1f = zeros(tbl, x.Af.size());
        v.v2 = zeros(tbl, x.Bp.size());
    } else {
        v.v0 = mat_apply(tbl, mc.A_avg, x.At);
        v.v1t = zeros(tbl, x.At.size());
        v.v1f = mat_apply(tbl, mc.A_avg, x.Bp);
        v.v2 = zeros(tbl, x.Bp.size());
    }
    return v;
}

PairedValues lie_values(const TablePtr& tbl, const PrimalPolys& x,
                        const ModeComplex& mc, SweepVector vec) {
    PairedValues v;
    if (vec == SweepVector::rotation) {
        GradedPoly in = CRat::i(mc.n).to_poly(tbl);
        v.v0 = scale(x.c, in);
        v.v1t = scale(x.At, in);
        v.v1f = scale(x.Af, in);
        v.v2 = scale(x.Bp, in);
    } else {
        const GradedComplex& A = mc.A;
        v.v0 = mat_apply(tbl, mc.A_avg, mat_apply(tbl, A.D0t, x.c));
        v.v1t = mat_apply(tbl, A.D0t, mat_apply(tbl, mc.A_avg, x.At));
        v.v1f = mat_apply(tbl, mc.A_avg, mat_apply(tbl, A.D1f, x.Af));
        v.v2 = mat_apply(tbl, A.D1f, mat_apply(tbl, mc.A_avg, x.Bp));
    }
    return v;
}

GradedPoly paired_form(const TablePtr& tbl, const DualPolys& y,
                       const PairedValues& v, const BfSigns& sg, bool flip_mid) {
    if (y.cp.size() != v.v0.size() || y.Apt.size() != v.v1f.size() ||
        y.Apf.size() != v.v1t.size() || y.B.size() != v.v2.size())
        throw StructureError("paired form: slot values do not fit the dual side");
    GradedPoly s = GradedPoly::zero(tbl);
    Rat p0(sg.p0), p1(sg.p1 * (flip_mid ? -1 : 1)), p2(sg.p2), w(sg.w);
    for (size_t a = 0; a < v.v0.size(); ++a)
        s = s + GradedPoly::constant(tbl, p0) * y.cp[a] * v.v0[a];
    for (size_t a = 0; a < v.v1f.size(); ++a)
        s = s + GradedPoly::constant(tbl, p1) * y.Apt[a] * v.v1f[a];
    for (size_t e = 0; e < v.v1t.size(); ++e)
        s = s + GradedPoly::constant(tbl, p1 * w) * y.Apf[e] * v.v1t[e];
    for (size_t e = 0; e < v.v2.size(); ++e)
        s = s + GradedPoly::constant(tbl, p2) * y.B[e] * v.v2[e];
    return s;
}

BfModel make_bf_model(const ModeComplex& mc, bool equivariant, SweepVector vec,
                      std::string name, const BfSigns& signs) {
    auto tbl_mut = std::make_shared<VariableTable>();
    BfFamilies fam;
    auto add_family = [&](std::vector<int>& ids, const char* prefix, int count,
                          int ghost, int formdeg) {
        for (int r = 0; r < count; ++r)
            ids.push_back(tbl_mut->add_field(prefix + std::to_string(r), ghost, formdeg));
    };
    add_family(fam.c, "c", mc.A.n0, 1, 0);
    add_family(fam.At, "At", mc.A.n1t, 0, 1);
    add_family(fam.Af, "Af", mc.A.n1f, 0, 1);
    add_family(fam.Bp, "Bp", mc.A.n2, -1, 2);
    add_family(fam.B, "B", mc.B.n0, 0, 0);
    add_family(fam.Apt, "Apt", mc.B.n1t, -1, 1);
    add_family(fam.Apf, "Apf", mc.B.n1f, -1, 1);
    add_family(fam.cp, "cp", mc.B.n2, -2, 2);
    tbl_mut->enable_deltas();
    TablePtr tbl = tbl_mut;

    BfModel m;
    m.name = std::move(name);
    m.tbl = tbl;
    m.mc = mc;
    m.fam = fam;
    m.equivariant = equivariant;
    m.vec = vec;
    m.signs = signs;

    m.D.tbl = tbl;
    m.D.k = 0;
    auto add_pairs = [&](const std::vector<int>& base, const std::vector<int>& mom,
                         int sign) {
        for (size_t r = 0; r < base.size(); ++r)
            m.D.pairs.push_back({base[r], mom[r], GradedPoly::constant(tbl, Rat(sign))});
    };
    add_pairs(fam.c, fam.cp, signs.s_c);
    add_pairs(fam.At, fam.Apf, signs.s_At);
    add_pairs(fam.Af, fam.Apt, signs.s_Af);
    add_pairs(fam.Bp, fam.B, signs.s_Bp);
    m.D.validate();

    PrimalPolys x = primal_polys(tbl, fam);
    DualPolys y = dual_polys(tbl, fam);
    m.S = paired_form(tbl, y, differential_values(tbl, x, mc.A), signs);
    m.T = GradedPoly::zero(tbl);

    m.Q.tbl = tbl;
    m.Q.parity = 1;
    m.Q.ghost = 1;
    add_images(m.Q, fam.At, mat_apply(tbl, mc.A.D0t, x.c));
    add_images(m.Q, fam.Af, mat_apply(tbl, mc.A.D0f, x.c));
    {
        Polys v2 = mat_apply(tbl, mc.A.D1t, x.At);
        Polys df = mat_apply(tbl, mc.A.D1f, x.Af);
        for (size_t e = 0; e < v2.size(); ++e) v2[e] = v2[e] + df[e];
        add_images(m.Q, fam.Bp, v2);
    }
    add_images(m.Q, fam.Apt, mat_apply(tbl, mc.B.D0t, y.B));
    add_images(m.Q, fam.Apf, mat_apply(tbl, mc.B.D0f, y.B));
    {
        Polys v2 = mat_apply(tbl, mc.B.D1t, y.Apt);
        Polys df = mat_apply(tbl, mc.B.D1f, y.Apf);
        for (size_t j = 0; j < v2.size(); ++j) v2[j] = v2[j] + df[j];
        add_images(m.Q, fam.cp, v2);
    }

    if (equivariant) {
        GradedPoly u = GradedPoly::variable(tbl, tbl->equiv_u());
        m.S = m.S + u * paired_form(tbl, y, contraction_values(tbl, x, mc, vec), signs);
        m.T = u * paired_form(tbl, y, lie_values(tbl, x, mc, vec), signs, true);
        if (vec == SweepVector::rotation) {
            add_images(m.Q, fam.c, scale(x.Af, u));
            add_images(m.Q, fam.At,
                       scale(x.Bp, GradedPoly::constant(tbl, Rat(-1)) * u));
            add_images(m.Q, fam.B, scale(y.Apf, u));
            add_images(m.Q, fam.Apt,
                       scale(y.cp, GradedPoly::constant(tbl, Rat(-1)) * u));
        } else {
            add_images(m.Q, fam.c, scale(mat_apply(tbl, mc.A_avg, x.At), u));
            add_images(m.Q, fam.Af, scale(mat_apply(tbl, mc.A_avg, x.Bp), u));
            add_images(m.Q, fam.B, scale(mat_apply(tbl, mc.B_avg, y.Apt), u));
            add_images(m.Q, fam.Apf, scale(mat_apply(tbl, mc.B_avg, y.cp), u));
        }
    }
    return m;
}

GradedPoly BfModel::alpha_bar() const {
    return iota(Q).apply(D.omega()) - delta(tbl).apply(S);
}

std::vector<int> BfModel::boundary_primal_vars() const {
    if (mc.closed) return {};
    return {fam.c.front(), fam.c.back(), fam.Af.front(), fam.Af.back()};
}

std::vector<CheckOutcome> check_bf_bulk(const BfModel& m) {
    std::vector<CheckOutcome> out;
    GradedPoly alpha = m.alpha_bar();
    if (m.mc.closed) {
        out.push_back(CheckOutcome::of("bulk-hamiltonian", "iota_Q omega - d(S) = 0", alpha));
        GradedPoly half(m.tbl);
        half = GradedPoly::constant(m.tbl, Rat(1, 2)) * sym_bracket(m.S, m.S, m.D);
        out.push_back(CheckOutcome::of("bulk-weak-master", "1/2 (S,S) - T = 0", half - m.T));
        GradedPoly lap = bv_laplacian(m.S, m.D);
        out.push_back(CheckOutcome::of("bulk-laplacian", "Lap S = 0", lap));
        GradedPoly ih = GradedPoly::variable(m.tbl, m.tbl->imag()) *
                        GradedPoly::variable(m.tbl, m.tbl->hbar());
        out.push_back(CheckOutcome::of("bulk-quantum-master",
                                       "1/2 (S,S) - i hbar Lap S - T = 0",
                                       half - ih * lap - m.T));
    } else {
        GradedPoly u_part = alpha - alpha.coefficient_of_power(m.tbl->equiv_u(), 0);
        out.push_back(CheckOutcome::of(
            "sweep-tangency", "u part of (iota_Q omega - d(S)) = 0", u_part,
            m.equivariant ? "" : "model has no u term"));
        std::vector<int> allowed = m.boundary_primal_vars();
        GradedPoly off = GradedPoly::zero(m.tbl);
        for (const auto& [field, coeff] : right_normal_form(alpha)) {
            if (std::find(allowed.begin(), allowed.end(), field) == allowed.end())
                off = off + coeff * GradedPoly::variable(m.tbl, m.tbl->info(field).delta_id);
        }
        out.push_back(CheckOutcome::of(
            "boundary-support",
            "iota_Q omega - d(S) supported on end slot deltas", off));
    }
    return out;
}

}  // namespace bvlab

#include "bvlab/master_eq.hpp"

namespace bvlab {

CheckOutcome CheckOutcome::of(std::string check, std::string identity,
                              const GradedPoly& residual, std::string note) {
    CheckOutcome o;
    o.check = std::move(check);
    o.identity = std::move(identity);
    o.status = residual.is_zero() ? "pass" : "fail";
    o.residual = residual.render();
    o.note = std::move(note);
    return o;
}

CheckOutcome CheckOutcome::skip(std::string check, std::string identity, std::string note) {
    CheckOutcome o;
    o.check = std::move(check);
    o.identity = std::move(identity);
    o.status = "skip";
    o.note = std::move(note);
    return o;
}

BvModel BvModel::make(std::string name, TablePtr tbl, DarbouxStructure D, GradedPoly S) {
    D.validate();
    if (!S.is_zero() && S.ghost_number() != D.k)
        throw GradingError("action has ghost number " +
                           std::to_string(S.ghost_number()) + ", expected " +
                           std::to_string(D.k));
    BvModel m;
    m.name = std::move(name);
    m.tbl = tbl;
    m.D = std::move(D);
    m.Q = hamiltonian_vf(S, m.D);
    m.S = std::move(S);
    return m;
}

CheckOutcome check_cme(const BvModel& m) {
    return CheckOutcome::of("cme", "(S,S) = 0", sym_bracket(m.S, m.S, m.D));
}

GradedPoly compute_T(const GradedPoly& S, const DarbouxStructure& D) {
    const TablePtr& tbl = D.tbl;
    GradedPoly half_ss = sym_bracket(S, S, D) * Rat(1, 2);
    GradedPoly ihbar = GradedPoly::variable(tbl, tbl->imag()) *
                       GradedPoly::variable(tbl, tbl->hbar());
    return half_ss - ihbar * bv_laplacian(S, D);
}

CheckOutcome check_qme(const BvModel& m) {
    return CheckOutcome::of("qme", "(1/2)(S,S) - i*hbar*Lap(S) = 0",
                            compute_T(m.S, m.D));
}

std::vector<CheckOutcome> check_weak_bv(const DarbouxStructure& D, const GradedPoly& S,
                                        const VectorField& Q) {
    const TablePtr& tbl = D.tbl;
    std::vector<CheckOutcome> out;
    GradedPoly omega = D.omega();
    GradedPoly dS = delta(tbl).apply(S);

    out.push_back(CheckOutcome::of("weak_bv", "iota_Q omega = d(S)",
                                   iota(Q).apply(omega) - dS));

    VectorField QQ = commutator(Q, Q);
    GradedPoly phi = iota(QQ).apply(omega);
    out.push_back(CheckOutcome::of("weak_bv", "L_{[Q,Q]} omega = 0",
                                   lie(QQ).apply(omega)));

    // exactness certificate for iota_{[Q,Q]} omega, u-order by u-order
    Derivation iE = iota(euler_field(tbl));
    Derivation d = delta(tbl);
    int u = tbl->equiv_u();
    int nmax = phi.max_power(u);
    GradedPoly residual(tbl);
    GradedPoly upow = GradedPoly::constant(tbl, 1);
    for (int j = 0; j <= nmax; ++j) {
        GradedPoly pj = phi.coefficient_of_power(u, j);
        int w = D.k + 1 - 2 * j;
        residual += upow * (d.apply(iE.apply(pj)) - pj * Rat(w));
        upow *= GradedPoly::variable(tbl, u);
    }
    out.push_back(CheckOutcome::of(
        "weak_bv", "d(iota_E iota_{[Q,Q]} omega) = (k+1-2j) iota_{[Q,Q]} omega",
        residual));
    return out;
}

std::vector<CheckOutcome> check_lemma_chain(const DarbouxStructure& D, const GradedPoly& S,
                                            const VectorField& Q) {
    const TablePtr& tbl = D.tbl;
    std::vector<CheckOutcome> out;
    GradedPoly omega = D.omega();

    Derivation LQ = lie(Q);
    Derivation iQ = iota(Q);
    Derivation lhs = commutator(LQ, iQ);
    VectorField QQ = commutator(Q, Q);
    Derivation rhs = iota(QQ);

    GradedPoly gen_residual(tbl);
    for (int v = 0; v < tbl->size(); ++v) {
        if (tbl->info(v).kind == VarKind::Parameter) continue;
        gen_residual += lhs.image_of(v) - rhs.image_of(v);
    }
    out.push_back(CheckOutcome::of("lemma_chain",
                                   "[L_Q, iota_Q] = iota_{[Q,Q]} on generators",
                                   gen_residual));
    out.push_back(CheckOutcome::of("lemma_chain",
                                   "[L_Q, iota_Q] omega = iota_{[Q,Q]} omega",
                                   lhs.apply(omega) - rhs.apply(omega)));

    GradedPoly T = sym_bracket(S, S, D) * Rat(1, 2);
    std::string note;
    if (!bv_laplacian(S, D).is_zero())
        note = "Lap(S) nonzero; classical obstruction (1/2)(S,S) used";
    out.push_back(CheckOutcome::of("lemma_chain",
                                   "(1/2) iota_Q iota_Q omega = (1/2)(S,S)",
                                   iQ.apply(iQ.apply(omega)) * Rat(1, 2) - T, note));
    out.push_back(CheckOutcome::of(
        "lemma_chain", "(1/2) iota_{[Q,Q]} omega = -d((1/2)(S,S))",
        rhs.apply(omega) * Rat(1, 2) + delta(tbl).apply(T), note));
    return out;
}

}  // namespace bvlab

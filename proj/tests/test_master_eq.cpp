#include "bvlab/master_eq.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace bvlab;
using namespace bvlab::testing;

namespace {

struct MasterTable {
    std::shared_ptr<VariableTable> raw = std::make_shared<VariableTable>();
    int x, y, theta, eta;
    TablePtr tbl;
    DarbouxStructure D;

    MasterTable() {
        x = raw->add_field("x", 0);
        y = raw->add_field("y", 1);
        theta = raw->add_field("theta", -1);
        eta = raw->add_field("eta", -2);
        raw->enable_deltas();
        tbl = raw;
        D.tbl = tbl;
        D.k = 0;
        D.pairs.push_back({x, theta, GradedPoly()});
        D.pairs.push_back({y, eta, GradedPoly()});
        D.validate();
    }
    GradedPoly var(int id) const { return GradedPoly::variable(tbl, id); }
    std::vector<int> fields() const { return {x, y, theta, eta}; }
};

// Random action whose monomials are individually annihilated by the
// Laplacian (no base appears together with its own momentum), so that the
// quantum and classical obstructions coincide term by term.
GradedPoly random_laplacian_free_action(Rng& rng, const MasterTable& t) {
    GradedPoly S(t.tbl);
    int terms = rng.uniform(1, 4);
    int found = 0, attempts = 0;
    while (found < terms && attempts < 400) {
        ++attempts;
        Word w = random_word(rng, t.fields(), 4);
        auto nw = normalize_word(*t.tbl, w);
        if (!nw) continue;
        if (monomial_ghost(*t.tbl, nw->mono) != 0) continue;
        if (nw->mono.contains(t.x) && nw->mono.contains(t.theta)) continue;
        if (nw->mono.contains(t.y) && nw->mono.contains(t.eta)) continue;
        S.add_term(nw->mono, rng.coefficient() * nw->coeff);
        ++found;
    }
    return S;
}

}  // namespace

TEST_CASE("frozen master equation toys") {
    MasterTable t;
    GradedPoly x = t.var(t.x), y = t.var(t.y), theta = t.var(t.theta);

    // S = x^3 solves both master equations
    BvModel cubic = BvModel::make("cubic", t.tbl, t.D, x * x * x);
    CHECK(check_cme(cubic).status == "pass");
    CHECK(check_qme(cubic).status == "pass");

    // S = x y theta solves the classical equation; the Laplacian obstructs
    // the quantum one with T = i hbar y
    BvModel xyt = BvModel::make("xyt", t.tbl, t.D, x * y * theta);
    CHECK(check_cme(xyt).status == "pass");
    CheckOutcome qme = check_qme(xyt);
    CHECK(qme.status == "fail");
    GradedPoly ihbar = GradedPoly::variable(t.tbl, t.tbl->imag()) *
                       GradedPoly::variable(t.tbl, t.tbl->hbar());
    CHECK(compute_T(xyt.S, t.D) == ihbar * y);

    // S = x^3 + x y theta fails already classically
    BvModel mixed = BvModel::make("mixed", t.tbl, t.D, x * x * x + x * y * theta);
    CheckOutcome cme = check_cme(mixed);
    CHECK(cme.status == "fail");
    CHECK(sym_bracket(mixed.S, mixed.S, t.D) == Rat(-6) * x * x * x * y);
}

TEST_CASE("Hamiltonian vector fields of solutions square to zero") {
    MasterTable t;
    GradedPoly x = t.var(t.x);
    BvModel cubic = BvModel::make("cubic", t.tbl, t.D, x * x * x);
    VectorField QQ = commutator(cubic.Q, cubic.Q);
    for (const auto& [v, comp] : QQ.comps) REQUIRE(comp.is_zero());
}

TEST_CASE("weak structure checks hold for Hamiltonian models") {
    MasterTable t;
    Rng rng(808);
    int done = 0;
    for (int trial = 0; trial < 60 && done < 40; ++trial) {
        bool ok = false;
        GradedPoly S =
            random_ghost_homogeneous(rng, t.tbl, t.fields(), 3, 4, 0, &ok);
        if (!ok) continue;
        ++done;
        VectorField Q = hamiltonian_vf(S, t.D);
        for (const auto& o : check_weak_bv(t.D, S, Q)) {
            INFO(o.identity << " residual " << o.residual);
            REQUIRE(o.status == "pass");
        }
    }
    REQUIRE(done >= 40);
}

TEST_CASE("contraction commutator chain for Laplacian-free random actions") {
    MasterTable t;
    Rng rng(909);
    int done = 0;
    for (int trial = 0; trial < 80 && done < 50; ++trial) {
        GradedPoly S = random_laplacian_free_action(rng, t);
        if (S.is_zero()) continue;
        ++done;
        REQUIRE(bv_laplacian(S, t.D).is_zero());
        VectorField Q = hamiltonian_vf(S, t.D);
        for (const auto& o : check_lemma_chain(t.D, S, Q)) {
            INFO(o.identity << " residual " << o.residual);
            REQUIRE(o.status == "pass");
        }
    }
    REQUIRE(done >= 50);
}

TEST_CASE("model construction validates the ghost number of the action") {
    MasterTable t;
    CHECK_THROWS_AS(BvModel::make("bad", t.tbl, t.D, t.var(t.y)), GradingError);
}

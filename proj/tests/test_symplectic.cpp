#include "bvlab/symplectic.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace bvlab;
using namespace bvlab::testing;

namespace {

// Degree-zero pairing (odd bracket): pairs (x, theta) and (y, eta).
struct OddTable {
    std::shared_ptr<VariableTable> raw = std::make_shared<VariableTable>();
    int x, theta, y, eta;
    TablePtr tbl;
    DarbouxStructure D;

    OddTable() {
        x = raw->add_field("x", 0);
        theta = raw->add_field("theta", -1);
        y = raw->add_field("y", 1);
        eta = raw->add_field("eta", -2);
        raw->enable_deltas();
        tbl = raw;
        D.tbl = tbl;
        D.k = 0;
        D.pairs.push_back({x, theta, GradedPoly()});
        D.pairs.push_back({y, eta, GradedPoly()});
        D.validate();
    }
    std::vector<int> fields() const { return {x, theta, y, eta}; }
    GradedPoly var(int id) const { return GradedPoly::variable(tbl, id); }
};

// Degree-one pairing (even bracket): ghost sums are zero.
struct EvenTable {
    std::shared_ptr<VariableTable> raw = std::make_shared<VariableTable>();
    int c, p, e, f;
    TablePtr tbl;
    DarbouxStructure D;

    EvenTable() {
        c = raw->add_field("c", 1);
        p = raw->add_field("p", -1);
        e = raw->add_field("e", 2);
        f = raw->add_field("f", -2);
        raw->enable_deltas();
        tbl = raw;
        D.tbl = tbl;
        D.k = 1;
        D.pairs.push_back({c, p, GradedPoly()});
        D.pairs.push_back({e, f, GradedPoly()});
        D.validate();
    }
    std::vector<int> fields() const { return {c, p, e, f}; }
    GradedPoly var(int id) const { return GradedPoly::variable(tbl, id); }
};

}  // namespace

TEST_CASE("frozen pair brackets and Laplacian values") {
    OddTable t;
    GradedPoly x = t.var(t.x), theta = t.var(t.theta);
    GradedPoly one = GradedPoly::constant(t.tbl, 1);

    CHECK(sym_bracket(x, theta, t.D) == one);
    CHECK(sym_bracket(theta, x, t.D) == -one);
    // odd bases pick up a sign: (b, m) = (-1)^{|b|}
    CHECK(sym_bracket(t.var(t.y), t.var(t.eta), t.D) == -one);
    CHECK(sym_bracket(t.var(t.eta), t.var(t.y), t.D) == one);
    CHECK(sym_bracket(x, t.var(t.eta), t.D).is_zero());
    CHECK(bv_laplacian(x * theta, t.D) == one);
    CHECK(bv_laplacian(x * x * theta, t.D) == Rat(2) * x);
}

TEST_CASE("the contraction solve inverts the pairing exactly") {
    OddTable t;
    Rng rng(101);
    for (int trial = 0; trial < 80; ++trial) {
        VectorField X;
        X.tbl = t.tbl;
        X.parity = trial & 1;
        for (int v : t.fields()) {
            int want = (X.parity + (t.tbl->info(v).odd ? 1 : 0)) & 1;
            GradedPoly comp = random_homogeneous(rng, t.tbl, t.fields(), 2, 3, want);
            if (!comp.is_zero()) X.comps.emplace(v, comp);
        }
        GradedPoly rhs = iota(X).apply(t.D.omega());
        if (rhs.is_zero()) continue;
        VectorField back = solve_contraction(rhs, t.D);
        for (int v : t.fields()) REQUIRE(back.component(v) == X.component(v));
    }
}

TEST_CASE("one-forms outside the pairing are rejected") {
    OddTable t;
    // a table variable not in any pair
    auto raw = std::make_shared<VariableTable>();
    int x = raw->add_field("x", 0);
    int theta = raw->add_field("theta", -1);
    int loose = raw->add_field("loose", 0);
    raw->enable_deltas();
    TablePtr tbl = raw;
    DarbouxStructure D{tbl, 0, {{x, theta, GradedPoly()}}};
    D.validate();
    GradedPoly rhs = GradedPoly::variable(tbl, tbl->info(loose).delta_id);
    CHECK_THROWS_AS(solve_contraction(rhs, D), StructureError);
}

TEST_CASE("bracket antisymmetry, Leibniz and Jacobi for the odd bracket") {
    OddTable t;
    Rng rng(202);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 120; ++trial) {
        GradedPoly f = random_homogeneous(rng, t.tbl, t.fields(), 2, 3);
        GradedPoly g = random_homogeneous(rng, t.tbl, t.fields(), 2, 3);
        GradedPoly h = random_homogeneous(rng, t.tbl, t.fields(), 2, 3);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        ++done;
        int pf = f.parity(), pg = g.parity();

        // (f,g) = -(-1)^{(|f|+1)(|g|+1)} (g,f)
        Rat anti = ((pf + 1) * (pg + 1)) % 2 ? Rat(1) : Rat(-1);
        REQUIRE(sym_bracket(f, g, t.D) == anti * sym_bracket(g, f, t.D));

        // (f, gh) = (f,g) h + (-1)^{(|f|+1)|g|} g (f,h)
        Rat leib = ((pf + 1) * pg) % 2 ? Rat(-1) : Rat(1);
        REQUIRE(sym_bracket(f, g * h, t.D) ==
                sym_bracket(f, g, t.D) * h + leib * g * sym_bracket(f, h, t.D));

        // (f,(g,h)) = ((f,g),h) + (-1)^{(|f|+1)(|g|+1)} (g,(f,h))
        Rat jac = ((pf + 1) * (pg + 1)) % 2 ? Rat(-1) : Rat(1);
        REQUIRE(sym_bracket(f, sym_bracket(g, h, t.D), t.D) ==
                sym_bracket(sym_bracket(f, g, t.D), h, t.D) +
                    jac * sym_bracket(g, sym_bracket(f, h, t.D), t.D));
    }
    REQUIRE(done >= 120);
}

TEST_CASE("bracket antisymmetry, Leibniz and Jacobi for the even bracket") {
    EvenTable t;
    Rng rng(303);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 120; ++trial) {
        GradedPoly f = random_homogeneous(rng, t.tbl, t.fields(), 2, 3);
        GradedPoly g = random_homogeneous(rng, t.tbl, t.fields(), 2, 3);
        GradedPoly h = random_homogeneous(rng, t.tbl, t.fields(), 2, 3);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        ++done;
        int pf = f.parity(), pg = g.parity();

        Rat anti = (pf * pg) % 2 ? Rat(1) : Rat(-1);
        REQUIRE(sym_bracket(f, g, t.D) == anti * sym_bracket(g, f, t.D));

        Rat leib = (pf * pg) % 2 ? Rat(-1) : Rat(1);
        REQUIRE(sym_bracket(f, g * h, t.D) ==
                sym_bracket(f, g, t.D) * h + leib * g * sym_bracket(f, h, t.D));

        Rat jac = (pf * pg) % 2 ? Rat(-1) : Rat(1);
        REQUIRE(sym_bracket(f, sym_bracket(g, h, t.D), t.D) ==
                sym_bracket(sym_bracket(f, g, t.D), h, t.D) +
                    jac * sym_bracket(g, sym_bracket(f, h, t.D), t.D));
    }
    REQUIRE(done >= 120);
}

TEST_CASE("Laplacian squares to zero and satisfies the bracket Leibniz rule") {
    OddTable t;
    Rng rng(404);
    int done = 0;
    for (int trial = 0; trial < 260 && done < 200; ++trial) {
        GradedPoly f = random_homogeneous(rng, t.tbl, t.fields(), 2, 4);
        GradedPoly g = random_word_poly(rng, t.fields(), 2, 4).to_poly(t.tbl);
        if (f.is_zero()) continue;
        ++done;
        REQUIRE(bv_laplacian(bv_laplacian(f, t.D), t.D).is_zero());
        Rat s = f.parity() ? Rat(-1) : Rat(1);
        REQUIRE(bv_laplacian(f * g, t.D) ==
                bv_laplacian(f, t.D) * g + s * f * bv_laplacian(g, t.D) +
                    s * sym_bracket(f, g, t.D));
    }
    REQUIRE(done >= 200);
}

TEST_CASE("the Laplacian halves the divergence of the Hamiltonian field") {
    OddTable t;
    Rng rng(505);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 150; ++trial) {
        GradedPoly f = random_homogeneous(rng, t.tbl, t.fields(), 3, 4);
        if (f.is_zero()) continue;
        ++done;
        VectorField X = hamiltonian_vf(f, t.D);
        REQUIRE(bv_laplacian(f, t.D) == divergence(X) * Rat(1, 2));
    }
    REQUIRE(done >= 150);
}

TEST_CASE("Hamiltonian fields act as the bracket") {
    OddTable t;
    Rng rng(606);
    for (int trial = 0; trial < 80; ++trial) {
        GradedPoly S = random_homogeneous(rng, t.tbl, t.fields(), 3, 4, 0);
        GradedPoly g = random_word_poly(rng, t.fields(), 3, 4).to_poly(t.tbl);
        if (S.is_zero()) continue;
        VectorField Q = hamiltonian_vf(S, t.D);
        REQUIRE(Q.apply(g) == sym_bracket(S, g, t.D));
    }
}

TEST_CASE("pairing coefficients participate in solve, bracket and Laplacian") {
    auto raw = std::make_shared<VariableTable>();
    int x = raw->add_field("x", 0);
    int theta = raw->add_field("theta", -1);
    raw->enable_deltas();
    TablePtr tbl = raw;
    // omega = -2 i d(theta) d(x)
    GradedPoly coeff = GradedPoly::variable(tbl, tbl->imag()) * Rat(-2);
    DarbouxStructure D{tbl, 0, {{x, theta, coeff}}};
    D.validate();

    GradedPoly xv = GradedPoly::variable(tbl, x);
    GradedPoly tv = GradedPoly::variable(tbl, theta);
    GradedPoly i = GradedPoly::variable(tbl, tbl->imag());
    // (x, theta) = c^{-1} = 1/(-2i) = i/2
    CHECK(sym_bracket(xv, tv, D) == i * Rat(1, 2));
    CHECK(bv_laplacian(xv * tv, D) == i * Rat(1, 2));

    Rng rng(707);
    std::vector<int> fields = {x, theta};
    for (int trial = 0; trial < 40; ++trial) {
        GradedPoly f = random_homogeneous(rng, tbl, fields, 2, 3);
        if (f.is_zero()) continue;
        VectorField X = hamiltonian_vf(f, D);
        REQUIRE(iota(X).apply(D.omega()) == delta(tbl).apply(f));
    }
}

TEST_CASE("pairing validation rejects bad ghost sums and reused variables") {
    auto raw = std::make_shared<VariableTable>();
    int x = raw->add_field("x", 0);
    int theta = raw->add_field("theta", -1);
    int y = raw->add_field("y", 1);
    raw->enable_deltas();
    TablePtr tbl = raw;

    DarbouxStructure bad_ghost{tbl, 0, {{x, y, GradedPoly()}}};
    CHECK_THROWS_AS(bad_ghost.validate(), GradingError);

    DarbouxStructure reused{tbl, 0, {{x, theta, GradedPoly()}, {x, theta, GradedPoly()}}};
    CHECK_THROWS_AS(reused.validate(), StructureError);
    (void)y;
}

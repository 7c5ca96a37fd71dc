#include "bvlab/algebra.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace bvlab;
using namespace bvlab::testing;

namespace {

// x even, eta/theta odd; declaration order fixes the canonical word order.
struct ToyTable {
    std::shared_ptr<VariableTable> raw = std::make_shared<VariableTable>();
    int x, eta, theta, y;
    TablePtr tbl;

    ToyTable() {
        x = raw->add_field("x", 0);
        eta = raw->add_field("eta", -1);
        theta = raw->add_field("theta", -1);
        y = raw->add_field("y", 1);
        tbl = raw;
    }
    GradedPoly var(int id) const { return GradedPoly::variable(tbl, id); }
};

}  // namespace

TEST_CASE("canonical ordering and Koszul signs on frozen examples") {
    ToyTable t;
    GradedPoly x = t.var(t.x), eta = t.var(t.eta), theta = t.var(t.theta);

    CHECK(theta * x == x * theta);
    CHECK((theta * eta).render() == "-eta*theta");
    CHECK((theta * theta).is_zero());
    CHECK((eta * theta + theta * eta).is_zero());
    CHECK((x * x).render() == "x^2");
}

TEST_CASE("left derivatives on frozen examples") {
    ToyTable t;
    GradedPoly x = t.var(t.x), eta = t.var(t.eta), theta = t.var(t.theta);

    CHECK((x * theta).left_derivative(t.theta) == x);
    CHECK((eta * theta).left_derivative(t.theta) == -eta);
    CHECK((eta * theta).left_derivative(t.eta) == theta);
    CHECK((x * x).left_derivative(t.x).render() == "2*x");
    CHECK(x.left_derivative(t.theta).is_zero());
}

TEST_CASE("relation parameters reduce exactly") {
    ToyTable t;
    GradedPoly i = GradedPoly::variable(t.tbl, t.tbl->imag());
    GradedPoly one = GradedPoly::constant(t.tbl, 1);

    CHECK(i * i == -one);
    CHECK(i.pow(4) == one);
    CHECK((i.pow(3)).render() == "-i");
    GradedPoly u = GradedPoly::variable(t.tbl, t.tbl->equiv_u());
    CHECK((u * u).render() == "u^2");
}

TEST_CASE("ghost numbers, parity, homogeneity guards") {
    ToyTable t;
    GradedPoly x = t.var(t.x), theta = t.var(t.theta), y = t.var(t.y);

    CHECK((x * y * theta).ghost_number() == 0);
    CHECK((x * y * theta).parity() == 0);
    CHECK(theta.parity() == 1);
    GradedPoly u = GradedPoly::variable(t.tbl, t.tbl->equiv_u());
    CHECK(u.ghost_number() == 2);
    CHECK_THROWS_AS((x + theta).ghost_number(), GradingError);
    CHECK_THROWS_AS((x + theta).parity(), GradingError);
    CHECK(GradedPoly::zero(t.tbl).is_ghost_homogeneous());
}

TEST_CASE("product agrees with the word oracle on random input") {
    ToyTable t;
    std::vector<int> vars = {t.x, t.eta, t.theta, t.y, t.tbl->imag(), t.tbl->equiv_u()};
    Rng rng(20260814);
    for (int trial = 0; trial < 300; ++trial) {
        WordPoly wa = random_word_poly(rng, vars, 4, 5);
        WordPoly wb = random_word_poly(rng, vars, 4, 5);
        GradedPoly direct = wa.to_poly(t.tbl) * wb.to_poly(t.tbl);
        GradedPoly via_words = WordPoly::product(wa, wb).to_poly(t.tbl);
        REQUIRE(direct == via_words);
    }
}

TEST_CASE("product is associative and graded-commutative on random input") {
    ToyTable t;
    std::vector<int> vars = {t.x, t.eta, t.theta, t.y, t.tbl->imag()};
    Rng rng(4711);
    for (int trial = 0; trial < 200; ++trial) {
        GradedPoly a = random_word_poly(rng, vars, 3, 4).to_poly(t.tbl);
        GradedPoly b = random_word_poly(rng, vars, 3, 4).to_poly(t.tbl);
        GradedPoly c = random_word_poly(rng, vars, 3, 4).to_poly(t.tbl);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        GradedPoly ah = random_homogeneous(rng, t.tbl, vars, 3, 4);
        GradedPoly bh = random_homogeneous(rng, t.tbl, vars, 3, 4);
        if (ah.is_zero() || bh.is_zero()) continue;
        Rat sign = (ah.parity() && bh.parity()) ? -1 : 1;
        REQUIRE(ah * bh == (bh * ah) * sign);
    }
}

TEST_CASE("left derivative agrees with the word oracle and is a graded Leibniz map") {
    ToyTable t;
    std::vector<int> vars = {t.x, t.eta, t.theta, t.y};
    Rng rng(90210);
    for (int trial = 0; trial < 200; ++trial) {
        WordPoly wa = random_word_poly(rng, vars, 4, 5);
        int v = vars[static_cast<size_t>(rng.uniform(0, 3))];
        REQUIRE(wa.to_poly(t.tbl).left_derivative(v) ==
                wa.left_derivative(*t.tbl, v).to_poly(t.tbl));

        GradedPoly f = random_homogeneous(rng, t.tbl, vars, 3, 4);
        GradedPoly g = random_word_poly(rng, vars, 3, 4).to_poly(t.tbl);
        if (f.is_zero()) continue;
        GradedPoly lhs = (f * g).left_derivative(v);
        GradedPoly rhs = f.left_derivative(v) * g;
        GradedPoly fg = f * g.left_derivative(v);
        bool flip = t.tbl->info(v).odd && f.parity();
        rhs += flip ? -fg : fg;
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("substitution is a parity-checked homomorphism") {
    ToyTable t;
    GradedPoly x = t.var(t.x), eta = t.var(t.eta), theta = t.var(t.theta), y = t.var(t.y);

    // substitute x -> x + x^2, theta -> x*eta in x*theta
    std::map<int, GradedPoly> images = {{t.x, x + x * x}, {t.theta, x * eta}};
    GradedPoly subst = (x * theta).substitute(images);
    CHECK(subst == (x + x * x) * (x * eta));

    std::map<int, GradedPoly> bad = {{t.theta, x}};  // odd variable, even image
    CHECK_THROWS_AS((x * theta).substitute(bad), GradingError);

    // homomorphism property on random input
    std::vector<int> vars = {t.x, t.eta, t.theta, t.y};
    Rng rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
        GradedPoly f = random_word_poly(rng, vars, 3, 3).to_poly(t.tbl);
        GradedPoly g = random_word_poly(rng, vars, 3, 3).to_poly(t.tbl);
        std::map<int, GradedPoly> im = {{t.x, x * x}, {t.eta, theta + x * eta}};
        REQUIRE((f * g).substitute(im) == f.substitute(im) * g.substitute(im));
        REQUIRE((f + g).substitute(im) == f.substitute(im) + g.substitute(im));
    }
}

TEST_CASE("power coefficient extraction and truncation in the equivariant parameter") {
    ToyTable t;
    int u = t.tbl->equiv_u();
    GradedPoly up = GradedPoly::variable(t.tbl, u);
    GradedPoly x = t.var(t.x), theta = t.var(t.theta);

    GradedPoly p = x + up * theta * Rat(3) + up * up * x * x;
    CHECK(p.max_power(u) == 2);
    CHECK(p.coefficient_of_power(u, 0) == x);
    CHECK(p.coefficient_of_power(u, 1) == theta * Rat(3));
    CHECK(p.coefficient_of_power(u, 2) == x * x);
    CHECK(p.truncate_power(u, 1) == x + up * theta * Rat(3));
}

TEST_CASE("rendering is canonical and deterministic") {
    ToyTable t;
    GradedPoly p = t.var(t.theta) * t.var(t.eta) * Rat(2) + t.var(t.x) -
                   GradedPoly::constant(t.tbl, Rat(1) / 2);
    std::string r1 = p.render();
    std::string r2 = p.render();
    CHECK(r1 == r2);
    CHECK(GradedPoly::zero(t.tbl).render() == "0");
    CHECK(p.render() == "-1/2 + x - 2*eta*theta");
}

TEST_CASE("mismatched variable tables are rejected") {
    ToyTable a, b;
    CHECK_THROWS_AS(a.var(a.x) * b.var(b.x), StructureError);
    CHECK_THROWS_AS(a.var(a.x) + b.var(b.theta), StructureError);
}

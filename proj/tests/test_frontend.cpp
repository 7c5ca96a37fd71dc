#include "bvlab/model_file.hpp"

#include "bvlab/errors.hpp"
#include "bvlab/presets.hpp"
#include "bvlab/runner.hpp"

#include <doctest.h>

using namespace bvlab;

namespace {

std::string message_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

const ReportEntry* find_entry(const Report& rep, const std::string& check_id,
                              const std::string& model_id) {
    for (const auto& e : rep.entries)
        if (e.check_id == check_id && e.model_id == model_id) return &e;
    return nullptr;
}

}  // namespace

TEST_CASE("model files round-trip through the canonical renderer") {
    const std::string src =
        "# comment lines and inline trails are dropped\n"
        "param w ghost 0 relation w^2-4=0   # a square-root bookkeeping constant\n"
        "param lam ghost 2\n"
        "var x ghost 0\n"
        "var y ghost 1\n"
        "var psi ghost 0 formdeg 1\n"
        "var theta ghost -1\n"
        "var eta ghost -2\n"
        "var chi ghost -1 formdeg 2\n"
        "symplectic k 0\n"
        "pair x theta\n"
        "pair y eta\n"
        "pair psi chi\n"
        "equivariant u vector rotation\n"
        "action w*x^3 + lam*x*y*theta - 2*psi*chi\n"
        "check cme\n"
        "check weak_bv\n";
    ModelSpec first = parse_model(src, "rt");
    ModelSpec second = parse_model(render_model(first), "rt");
    CHECK(second == first);
    CHECK(render_model(second) == render_model(first));

    for (const auto& p : builtin_presets()) {
        if (!p.is_file) continue;
        ModelSpec a = parse_model(p.source, p.name);
        ModelSpec b = parse_model(render_model(a), p.name);
        INFO("preset ", p.name);
        CHECK(b == a);
    }
}

TEST_CASE("expressions expand exactly as the algebra does") {
    ModelSpec spec = parse_model(
        "var x ghost 0\nvar y ghost 1\nvar theta ghost -1\nvar eta ghost -2\n"
        "symplectic k 0\npair x theta\npair y eta\naction x\ncheck cme\n");
    const TablePtr& tbl = spec.tbl;
    GradedPoly x = GradedPoly::variable(tbl, "x");
    GradedPoly y = GradedPoly::variable(tbl, "y");
    GradedPoly theta = GradedPoly::variable(tbl, "theta");

    // odd squares drop: (y + theta)^2 has only the vanishing cross terms
    CHECK(parse_expression(tbl, "x*(y+theta)^2") == x * (y + theta).pow(2));
    CHECK(parse_expression(tbl, "x*(y+theta)^2").is_zero());

    CHECK(parse_expression(tbl, "(x+theta)^2") == x * x + Rat(2) * x * theta);
    CHECK(parse_expression(tbl, "(x+theta)^2").render() == "2*x*theta + x^2");

    CHECK(parse_expression(tbl, "1/2*x - x") == Rat(-1, 2) * x);
    CHECK(parse_expression(tbl, "-x^2") == -(x.pow(2)));
    CHECK(parse_expression(tbl, "x*y*theta - theta*y*x") ==
          x * y * theta - theta * y * x);

    // a square relation folds during expansion
    GradedPoly w2 = parse_expression(
        parse_model("param w ghost 0 relation w^2-4=0\nvar x ghost 0\n"
                    "var theta ghost -1\nsymplectic k 0\npair x theta\n"
                    "action x\ncheck cme\n")
            .tbl,
        "w^2");
    CHECK(w2.render() == "4");
}

TEST_CASE("parse failures carry their position and diagnosis") {
    const std::string base =
        "var x ghost 1\nvar theta ghost -1\nsymplectic k 0\n";

    std::string grading = message_of([&] {
        parse_model(base + "pair x theta\naction x\ncheck cme\n");
    });
    CHECK(grading.find("line 4") != std::string::npos);
    CHECK(grading.find("gh(x) + gh(theta) = 0") != std::string::npos);
    CHECK(grading.find("expected k - 1 = -1") != std::string::npos);

    std::string unknown = message_of([&] {
        parse_model("var x ghost 0\nvar theta ghost -1\nsymplectic k 0\n"
                    "pair x theta\naction x + qq\ncheck cme\n");
    });
    CHECK(unknown.find("line 5") != std::string::npos);
    CHECK(unknown.find("unknown name 'qq'") != std::string::npos);

    std::string dangling = message_of([&] {
        parse_model("var x ghost 0\nvar theta ghost -1\nsymplectic k 0\n"
                    "pair x theta\naction x +\ncheck cme\n");
    });
    CHECK(dangling.find("unexpected end of expression") != std::string::npos);

    CHECK_THROWS_AS(parse_model("var x ghost 0\naction x\ncheck nope\n"), ParseError);
    CHECK_THROWS_AS(parse_model("var x ghost 0\ncheck cme\n"), ParseError);
    CHECK_THROWS_AS(parse_model("frobnicate\naction x\n"), ParseError);
    CHECK_THROWS_AS(parse_model("var x ghost 0\nvar x ghost 1\naction x\n"),
                    ParseError);

    // reserved parameters only accept their fixed grading
    CHECK_THROWS_AS(parse_model("param u ghost 1\nvar x ghost 0\n"
                                "var theta ghost -1\nsymplectic k 0\n"
                                "pair x theta\naction x\ncheck cme\n"),
                    ParseError);
    CHECK_NOTHROW(parse_model("param u ghost 2\nparam i relation i^2+1=0\n"
                              "param hbar\nvar x ghost 0\nvar theta ghost -1\n"
                              "symplectic k 0\npair x theta\naction x\n"
                              "check cme\n"));
}

TEST_CASE("reports are byte-identical across runs") {
    for (const auto& p : builtin_presets()) {
        Report a = run_preset(p.name);
        Report b = run_preset(p.name);
        INFO("preset ", p.name);
        CHECK(a.render_json() == b.render_json());
        CHECK(a.render_human() == b.render_human());
    }
}

TEST_CASE("the toy presets report the frozen verdicts") {
    Report cubic = run_preset("cubic");
    CHECK(cubic.all_passed());
    CHECK(cubic.count("skipped") == 0);

    Report mixed = run_preset("mixed");
    CHECK(!mixed.all_passed());
    CHECK(mixed.count("fail") == 2);
    const ReportEntry* cme = find_entry(mixed, "cme", "mixed");
    REQUIRE(cme);
    CHECK(cme->residual == "-6*x^3*y");

    CHECK_THROWS_AS(run_preset("no-such-model"), ParseError);
}

TEST_CASE("surface checks on file models are reported as skipped") {
    ModelSpec spec = parse_model(
        "var x ghost 0\nvar theta ghost -1\nsymplectic k 0\npair x theta\n"
        "action x^3\ncheck all\n",
        "toy");
    Report rep = run_model_checks(spec);
    CHECK(rep.all_passed());
    CHECK(rep.count("skipped") == 3);
    for (const char* id : {"boundary", "summary", "quantum"}) {
        const ReportEntry* e = find_entry(rep, id, "toy");
        REQUIRE(e);
        CHECK(e->status == "skipped");
        CHECK(e->note.find("bf-cylinder") != std::string::npos);
    }
}

TEST_CASE("the axial sweep fails tangency and skips the end chain") {
    BfRunOptions opt;
    opt.segments = 2;
    opt.modes = 1;
    opt.vec = SweepVector::axial;
    opt.quantize = true;
    Report rep = run_bf(opt);
    CHECK(!rep.all_passed());
    for (int n : {-1, 0, 1}) {
        std::string id = "cylinder-k2-n" + std::to_string(n);
        const ReportEntry* tang = find_entry(rep, "sweep-tangency", id);
        REQUIRE(tang);
        CHECK(tang->status == "fail");
        CHECK(tang->residual.find("u*") != std::string::npos);
        const ReportEntry* red = find_entry(rep, "boundary-reduction", id);
        REQUIRE(red);
        CHECK(red->status == "skipped");
        const ReportEntry* qu = find_entry(rep, "end-quantization", id);
        REQUIRE(qu);
        CHECK(qu->status == "skipped");
    }
}

TEST_CASE("the full cylinder chain passes for every preset mode") {
    Report rep = run_preset("cylinder");
    CHECK(rep.all_passed());
    CHECK(rep.count("skipped") == 0);
    // three modes, each: 2 bulk + 11 summary + 5 split + 8 quantum
    CHECK(rep.entries.size() == 3 * 26);

    Report torus = run_preset("torus");
    CHECK(torus.all_passed());
    CHECK(torus.count("skipped") == 3);  // no ends to reduce
}

#include "bvlab/conventions.hpp"
#include "bvlab/errors.hpp"
#include "bvlab/presets.hpp"
#include "bvlab/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

int emit(const bvlab::Report& rep, const std::string& json_path) {
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return 2;
        }
        out << rep.render_json();
    }
    std::cout << rep.render_human();
    return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bvlab: exact verification of graded symplectic models"};
    app.require_subcommand(1);

    std::string input, json_path;
    std::uint64_t seed = 0;
    bool timings = false;

    CLI::App* check = app.add_subcommand(
        "check", "run the checks declared in a model file (or preset:<name>)");
    check->add_option("input", input, "model file path or preset:<name>")->required();
    check->add_option("--json", json_path, "also write the report as JSON");
    check->add_option("--seed", seed, "seed recorded in the report");
    check->add_flag("--timings", timings, "record wall times (breaks byte determinism)");

    bvlab::BfRunOptions opt;
    std::string vec = "rotation";
    bool classical = false;
    CLI::App* bf = app.add_subcommand(
        "bf-cylinder", "run the segmented-cylinder pipeline mode by mode");
    bf->add_option("--segments", opt.segments, "number of segments K")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bf->add_option("--modes", opt.modes, "sweep modes n = -modes..modes")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    bf->add_option("--vector", vec, "sweep vector field")
        ->check(CLI::IsMember({"rotation", "axial"}))
        ->capture_default_str();
    bf->add_option("--order", opt.order, "u-order of the effective master check")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    bf->add_flag("--quantize", opt.quantize, "append the end-polarization chain");
    bf->add_flag("--classical", classical, "drop the equivariant term (u = 0)");
    bf->add_option("--json", json_path, "also write the report as JSON");
    bf->add_option("--seed", seed, "seed recorded in the report");
    bf->add_flag("--timings", timings, "record wall times (breaks byte determinism)");

    CLI::App* conv =
        app.add_subcommand("conventions", "print the frozen sign table");

    CLI::App* presets = app.add_subcommand("presets", "list the built-in models");

    CLI11_PARSE(app, argc, argv);

    try {
        if (conv->parsed()) {
            std::cout << bvlab::conventions_text();
            return 0;
        }
        if (presets->parsed()) {
            for (const auto& p : bvlab::builtin_presets())
                std::cout << p.name << "\n    " << p.description << "\n";
            return 0;
        }
        if (check->parsed()) {
            bvlab::Report rep;
            if (input.rfind("preset:", 0) == 0)
                rep = bvlab::run_preset(input.substr(7), seed, timings);
            else
                rep = bvlab::run_model_checks(bvlab::parse_model_file(input), seed,
                                              timings);
            return emit(rep, json_path);
        }
        opt.vec = vec == "axial" ? bvlab::SweepVector::axial
                                 : bvlab::SweepVector::rotation;
        opt.equivariant = !classical;
        return emit(bvlab::run_bf(opt, seed, timings), json_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

#include "bvlab/conventions.hpp"
#include "bvlab/presets.hpp"
#include "bvlab/runner.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

py::dict to_dict(const bvlab::Report& rep) {
    py::list entries;
    for (const auto& e : rep.entries) {
        py::dict d;
        d["check_id"] = e.check_id;
        d["model_id"] = e.model_id;
        d["status"] = e.status;
        d["residual"] = e.residual;
        d["identity"] = e.identity;
        d["note"] = e.note;
        entries.append(d);
    }
    py::dict out;
    out["seed"] = rep.seed;
    out["entries"] = entries;
    out["all_passed"] = rep.all_passed();
    py::dict counts;
    counts["pass"] = rep.count("pass");
    counts["fail"] = rep.count("fail");
    counts["skipped"] = rep.count("skipped");
    out["counts"] = counts;
    return out;
}

bvlab::SweepVector vec_of(const std::string& name) {
    if (name == "rotation") return bvlab::SweepVector::rotation;
    if (name == "axial") return bvlab::SweepVector::axial;
    throw py::value_error("vector must be 'rotation' or 'axial'");
}

}  // namespace

PYBIND11_MODULE(_bvlab, m) {
    m.doc() = "exact verification of graded symplectic models";
    m.attr("__version__") = bvlab::kVersion;

    m.def(
        "check_file",
        [](const std::string& path, std::uint64_t seed) {
            return to_dict(bvlab::run_model_checks(bvlab::parse_model_file(path), seed));
        },
        py::arg("path"), py::arg("seed") = 0,
        "run the checks declared in a model file");

    m.def(
        "check_source",
        [](const std::string& source, const std::string& name, std::uint64_t seed) {
            return to_dict(bvlab::run_model_checks(bvlab::parse_model(source, name), seed));
        },
        py::arg("source"), py::arg("name") = "model", py::arg("seed") = 0,
        "run the checks declared in model-file text");

    m.def(
        "check_preset",
        [](const std::string& name, std::uint64_t seed) {
            return to_dict(bvlab::run_preset(name, seed));
        },
        py::arg("name"), py::arg("seed") = 0, "run a built-in preset");

    m.def(
        "bf_cylinder",
        [](int segments, int modes, const std::string& vector, int order,
           bool quantize, bool classical, std::uint64_t seed) {
            bvlab::BfRunOptions opt;
            opt.segments = segments;
            opt.modes = modes;
            opt.vec = vec_of(vector);
            opt.order = order;
            opt.quantize = quantize;
            opt.equivariant = !classical;
            return to_dict(bvlab::run_bf(opt, seed));
        },
        py::arg("segments") = 2, py::arg("modes") = 2,
        py::arg("vector") = "rotation", py::arg("order") = 3,
        py::arg("quantize") = false, py::arg("classical") = false,
        py::arg("seed") = 0, "run the segmented-cylinder pipeline");

    m.def("preset_names", [] {
        std::vector<std::string> names;
        for (const auto& p : bvlab::builtin_presets()) names.push_back(p.name);
        return names;
    });

    m.def("conventions_table", &bvlab::conventions_text,
          "the frozen sign and normalization table");
}

#include "bvlab/presets.hpp"

namespace bvlab {

namespace {

Preset file_preset(std::string name, std::string description, std::string source) {
    Preset p;
    p.name = std::move(name);
    p.description = std::move(description);
    p.is_file = true;
    p.source = std::move(source);
    return p;
}

Preset surface_preset(std::string name, std::string description, BfRunOptions opt) {
    Preset p;
    p.name = std::move(name);
    p.description = std::move(description);
    p.surface = opt;
    return p;
}

std::vector<Preset> make_presets() {
    std::vector<Preset> v;

    v.push_back(file_preset("cubic", "one even coordinate, cubic solution of both master equations",
                            "var x ghost 0\n"
                            "var theta ghost -1\n"
                            "symplectic k 0\n"
                            "pair x theta\n"
                            "action x^3\n"
                            "check cme\n"
                            "check qme\n"
                            "check weak_bv\n"
                            "check lemma_chain\n"));

    v.push_back(file_preset("xyt", "two pairs; solves the classical master equation "
                            "while the quantum obstruction survives",
                            "var x ghost 0\n"
                            "var y ghost 1\n"
                            "var theta ghost -1\n"
                            "var eta ghost -2\n"
                            "symplectic k 0\n"
                            "pair x theta\n"
                            "pair y eta\n"
                            "action x*y*theta\n"
                            "check cme\n"
                            "check weak_bv\n"
                            "check lemma_chain\n"));

    v.push_back(file_preset("mixed", "deliberate non-solution: the report carries "
                            "the exact residual of both master equations",
                            "var x ghost 0\n"
                            "var y ghost 1\n"
                            "var theta ghost -1\n"
                            "var eta ghost -2\n"
                            "symplectic k 0\n"
                            "pair x theta\n"
                            "pair y eta\n"
                            "action x^3+x*y*theta\n"
                            "check cme\n"
                            "check qme\n"));

    {
        BfRunOptions opt;
        opt.segments = 2;
        opt.modes = 1;
        opt.quantize = true;
        v.push_back(surface_preset("cylinder", "equivariant rotation cylinder, two segments, "
                                   "modes -1..1, full chain through quantization", opt));
    }
    {
        BfRunOptions opt;
        opt.segments = 2;
        opt.modes = 1;
        opt.equivariant = false;
        opt.quantize = true;
        v.push_back(surface_preset("cylinder-classical", "the same cylinder without the "
                                   "equivariant extension (u = 0 chain)", opt));
    }
    {
        BfRunOptions opt;
        opt.segments = 2;
        opt.modes = 1;
        opt.vec = SweepVector::axial;
        v.push_back(surface_preset("cylinder-axial", "axial sweep: the tangency check fails "
                                   "with a boundary-supported residual and the end "
                                   "chain is skipped", opt));
    }
    {
        BfRunOptions opt;
        opt.segments = 3;
        opt.modes = 1;
        opt.closed = true;
        v.push_back(surface_preset("torus", "closed geometry: bulk checks only", opt));
    }
    return v;
}

}  // namespace

const std::vector<Preset>& builtin_presets() {
    static const std::vector<Preset> v = make_presets();
    return v;
}

const Preset* find_preset(std::string_view name) {
    for (const auto& p : builtin_presets())
        if (p.name == name) return &p;
    return nullptr;
}

}  // namespace bvlab

#include "bvlab/runner.hpp"

#include "bvlab/boundary.hpp"
#include "bvlab/errors.hpp"
#include "bvlab/presets.hpp"
#include "bvlab/quantization.hpp"

#include <chrono>

namespace bvlab {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<std::string> expand(const std::vector<std::string>& checks) {
    std::vector<std::string> out;
    for (const auto& c : checks) {
        if (c == "all")
            out.insert(out.end(), all_check_names().begin(), all_check_names().end());
        else
            out.push_back(c);
    }
    return out;
}

}  // namespace

Report run_model_checks(const ModelSpec& spec, std::uint64_t seed, bool timings) {
    Report rep;
    rep.seed = seed;
    rep.timings = timings;

    BvModel model = BvModel::make(spec.name, spec.tbl, spec.D, spec.action);
    for (const std::string& name : expand(spec.checks)) {
        auto t0 = std::chrono::steady_clock::now();
        if (name == "cme") {
            rep.add(spec.name, check_cme(model), ms_since(t0));
        } else if (name == "qme") {
            rep.add(spec.name, check_qme(model), ms_since(t0));
        } else if (name == "weak_bv") {
            auto cs = check_weak_bv(spec.D, spec.action, model.Q);
            rep.append(spec.name, cs, ms_since(t0));
        } else if (name == "lemma_chain") {
            auto cs = check_lemma_chain(spec.D, spec.action, model.Q);
            rep.append(spec.name, cs, ms_since(t0));
        } else {
            rep.add_skip(spec.name, name, "surface pipeline",
                         "this check needs the cylinder builtin; run bf-cylinder");
        }
    }
    return rep;
}

Report run_bf(const BfRunOptions& opt, std::uint64_t seed, bool timings) {
    Report rep;
    rep.seed = seed;
    rep.timings = timings;

    for (int n = -opt.modes; n <= opt.modes; ++n) {
        std::string id = (opt.closed ? "torus-k" : "cylinder-k") +
                         std::to_string(opt.segments) + "-n" + std::to_string(n);
        ModeComplex mc = opt.closed ? ModeComplex::torus(opt.segments, n)
                                    : ModeComplex::cylinder(opt.segments, n);
        BfModel m = make_bf_model(mc, opt.equivariant, opt.vec,
                                  opt.closed ? "t" : "c");

        auto t0 = std::chrono::steady_clock::now();
        rep.append(id, check_bf_bulk(m), ms_since(t0));

        if (opt.closed) {
            rep.add_skip(id, "boundary-reduction", "end reduction",
                         "the surface has no ends");
            if (opt.quantize)
                rep.add_skip(id, "end-quantization",
                             "end polarization and effective chain",
                             "the surface has no ends");
            continue;
        }

        t0 = std::chrono::steady_clock::now();
        try {
            BoundaryModel b = boundary_reduce(m);
            rep.append(id, check_boundary_summary(m, b), ms_since(t0));
        } catch (const UnsupportedModelError& e) {
            rep.add_skip(id, "boundary-reduction", "end reduction", e.what());
        }

        if (opt.quantize) {
            t0 = std::chrono::steady_clock::now();
            try {
                SplitModel sm = split(m);
                EffectiveState st = effective_action(sm, opt.order);
                auto cs = check_split(sm);
                auto qs = check_quantum(sm, st);
                cs.insert(cs.end(), qs.begin(), qs.end());
                rep.append(id, cs, ms_since(t0));
            } catch (const UnsupportedModelError& e) {
                rep.add_skip(id, "end-quantization",
                             "end polarization and effective chain", e.what());
            }
        }
    }
    return rep;
}

Report run_preset(const std::string& name, std::uint64_t seed, bool timings) {
    const Preset* p = find_preset(name);
    if (!p) {
        std::string names;
        for (const auto& q : builtin_presets())
            names += (names.empty() ? "" : ", ") + q.name;
        throw ParseError("unknown preset '" + name + "' (available: " + names + ")");
    }
    if (p->is_file)
        return run_model_checks(parse_model(p->source, p->name), seed, timings);
    return run_bf(p->surface, seed, timings);
}

}  // namespace bvlab

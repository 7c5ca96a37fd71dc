#pragma once

#include "bvlab/runner.hpp"

#include <string_view>

namespace bvlab {

// ---------------------------------------------------------------------------
// Built-in models
// ---------------------------------------------------------------------------
//
// Named presets let every pipeline run without input files: the toy Darboux
// models ship as model-file sources (exercising the parser), the surface
// models as flag bundles for the cylinder builtin.

struct Preset {
    std::string name;
    std::string description;
    bool is_file = false;
    std::string source;   // model-file text when is_file
    BfRunOptions surface; // builtin flags otherwise
};

const std::vector<Preset>& builtin_presets();
const Preset* find_preset(std::string_view name);  // nullptr when unknown

}  // namespace bvlab

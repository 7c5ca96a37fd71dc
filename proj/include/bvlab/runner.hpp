#pragma once

#include "bvlab/bf_model.hpp"
#include "bvlab/model_file.hpp"
#include "bvlab/report.hpp"

namespace bvlab {

// ---------------------------------------------------------------------------
// Check execution
// ---------------------------------------------------------------------------

// Flags of the cylinder builtin. `modes` selects the sweep n = -modes..modes;
// every mode is a separate model entry in the report.
struct BfRunOptions {
    int segments = 2;
    int modes = 2;
    SweepVector vec = SweepVector::rotation;
    bool equivariant = true;
    bool closed = false;   // torus geometry: bulk checks only
    bool quantize = false; // append the end-polarization and effective chain
    int order = 3;         // u-order for the effective master check
};

// Runs the checks declared in a parsed model file (`check all` expands in the
// fixed order of all_check_names()). Checks that need the cylinder builtin
// are reported as skipped on file models.
Report run_model_checks(const ModelSpec& spec, std::uint64_t seed = 0,
                        bool timings = false);

// Runs the surface pipeline mode by mode: bulk checks, end reduction and
// summary sheet (skipped with the reason when the reduction is unsupported),
// and optionally the quantization chain.
Report run_bf(const BfRunOptions& opt, std::uint64_t seed = 0,
              bool timings = false);

// Dispatches "preset:<name>" inputs; throws ParseError for unknown names.
Report run_preset(const std::string& name, std::uint64_t seed = 0,
                  bool timings = false);

}  // namespace bvlab

#pragma once

#include "bvlab/symplectic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bvlab {

// ---------------------------------------------------------------------------
// Declarative model files
// ---------------------------------------------------------------------------
//
// A model file is line oriented; `#` starts a comment. Directives:
//
//   param <name> [ghost <int>] [relation <name>^2<+|-><rat>=0]
//   var <name> ghost <int> [formdeg <int>]
//   pair <base> <momentum>
//   symplectic k <int>
//   action <expression>
//   equivariant u vector <rotation|axial>
//   check <cme|qme|weak_bv|lemma_chain|boundary|summary|quantum|all>
//
// Expressions use + - * ^ and parentheses; coefficients are integers or
// rationals p/q. The reserved parameters hbar, i (i^2 = -1) and u (ghost 2)
// exist in every model; declaring them is allowed only with their fixed
// grading. Every pair must satisfy gh(base) + gh(momentum) = k - 1, checked
// with a grading diagnostic. Parsing failures raise ParseError with the line
// (and column, for expressions) of the offence.

struct ParamDecl {
    std::string name;
    int ghost = 0;
    std::optional<Rat> square;  // value of name^2 under the declared relation
    bool operator==(const ParamDecl&) const = default;
};

struct VarDecl {
    std::string name;
    int ghost = 0;
    int formdeg = 0;
    bool operator==(const VarDecl&) const = default;
};

struct PairDecl {
    std::string base;
    std::string mom;
    bool operator==(const PairDecl&) const = default;
};

struct ModelSpec {
    std::string name = "model";  // not part of the file format

    std::vector<ParamDecl> params;
    std::vector<VarDecl> vars;
    std::vector<PairDecl> pairs;
    int k = 0;
    bool equivariant = false;
    std::string vector_kind;  // "rotation" | "axial" when equivariant
    std::string action_text;  // normalized rendering of the action
    std::vector<std::string> checks;

    // Workspace handles built during parsing.
    TablePtr tbl;
    DarbouxStructure D;
    GradedPoly action;

    // File-content identity: the declarations above, not the handles.
    bool operator==(const ModelSpec& o) const;
};

ModelSpec parse_model(const std::string& source, std::string name = "model");
ModelSpec parse_model_file(const std::string& path);

// Canonical renderer; parse(render_model(spec)) == spec.
std::string render_model(const ModelSpec& spec);

// Expression parser over an existing table (used by the model parser and
// exposed for tests). `line` and `col0` seed the error positions.
GradedPoly parse_expression(const TablePtr& tbl, const std::string& text,
                            int line = 0, int col0 = 0);

// The fixed order in which `check all` expands.
const std::vector<std::string>& all_check_names();

}  // namespace bvlab

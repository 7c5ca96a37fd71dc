#pragma once

#include <stdexcept>
#include <string>

namespace bvlab {

// Raised when an operation would violate the grading rules (parity mismatch
// in a substitution, non-homogeneous input where homogeneity is required...).
struct GradingError : std::runtime_error {
    explicit GradingError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a structural precondition fails: mismatched variable tables,
// a two-form that is not in pairing normal form, a singular linear system.
struct StructureError : std::runtime_error {
    explicit StructureError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by the model-language frontend on malformed input.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a request is well-formed but outside what the engine supports
// (for example quantization of a model without a boundary splitting).
struct UnsupportedModelError : std::runtime_error {
    explicit UnsupportedModelError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bvlab

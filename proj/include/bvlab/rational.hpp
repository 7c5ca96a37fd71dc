#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bvlab {

// Exact rational scalars. All verification is exact: there is no floating
// point anywhere in the engine, and "residual is zero" always means
// identically zero as a polynomial with these coefficients.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline std::string to_string(const Rat& r) {
    return r.str();
}

}  // namespace bvlab

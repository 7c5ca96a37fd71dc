#pragma once

#include <string>

namespace bvlab {

// The frozen sign and normalization table. Every choice here is pinned by a
// test; the same text backs the `conventions` CLI subcommand.
std::string conventions_text();

}  // namespace bvlab

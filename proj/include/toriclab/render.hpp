#pragma once

#include <string>

#include "toriclab/config.hpp"

// Deterministic SVG rendering of the lattice, the cone pair, the
// scaffold, and a worked canonical form. All coordinates are integers
// after scaling, so identical configs produce byte-identical files.

namespace toric {

// what: "lattice" | "cones" | "scaffold" | "canonical-form"
std::string render_svg(const Config& cfg, const std::string& what);

}  // namespace toric

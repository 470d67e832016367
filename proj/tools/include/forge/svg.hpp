#pragma once

#include <string>

#include "forge/fanpoly.hpp"

namespace forge::svg {

struct RenderOptions {
  double unit = 20.0;  // pixels per lattice unit
  bool labels = true;
};

// Deterministic SVG of a marked fan: axes, rays as segments to the marked
// points, the polygon through the marked points, and "(x,y)" labels.
// Identical input yields byte-identical output (fixed float formatting).
std::string render_fan(const fanpoly::AugmentedFan& fan, const RenderOptions& opts = {});

// Deterministic SVG of a polytope Sigma_h; an empty polytope renders as axes
// only.
std::string render_polytope(const fanpoly::RationalPolytope& poly,
                            const RenderOptions& opts = {});

}  // namespace forge::svg

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyplace/geometry.hpp"

namespace polyplace {

struct SvgScene {
    OrthoPolygon container;
    std::optional<OrthoPolygon> placed;  // already transformed
    std::vector<std::string> legend;
    double width_px = 800;
};

// Axis-true rendering (uniform scale, y up) fitted into a square of side
// width_px. Output depends only on the scene, so repeated runs are
// byte-identical.
std::string render_svg(const SvgScene& scene);

}  // namespace polyplace

#pragma once

#include <string>

#include "thinlab/packing/packing.hpp"

namespace thinlab {

struct SvgOptions {
  bool labels = false;      // curvature text on every circle with |b| >= 1
  bool mirrors = true;      // draw the mirror circles in red
  bool timestamp = false;   // generation time in a header comment
  double size = 800.0;      // width and height in pixels
};

// One element with class "orbit" per orbit circle (<circle>, or <line> for b = 0) and one
// with class "mirror" per mirror. The y axis points up.
std::string render_svg(const PackingOrbit& orbit, const SvgOptions& options = {});

}  // namespace thinlab

#pragma once

#include <string>

#include "rect/model.hpp"

namespace rect {

struct RenderOptions {
    int scale = 40;      // pixels per unit
    bool labels = true;  // draw point labels
};

// Deterministic SVG in the style of the figures: B as the outer rectangle,
// segments as lines, points as labeled dots. The y-axis is flipped so
// larger y renders upward. Identical input and options give byte-identical
// output.
std::string render_svg(const Rectangulation& r, const RenderOptions& opts = {});

}  // namespace rect

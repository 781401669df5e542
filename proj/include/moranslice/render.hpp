#pragma once

#include <optional>
#include <string>

#include "moranslice/slicing.hpp"

namespace moran {

struct RenderOptions {
    int depth = 1;
    int canvas = 800;
    std::size_t element_cap = 20'000;
    std::optional<Rational> intercept;  // draw the line and mark hits
};

struct RenderStats {
    std::size_t rect_count = 0;
    std::size_t hit_count = 0;
};

// Deterministic SVG: one rect per level-n cell, hits in a distinct fill
// class, one clipped line segment when an intercept is given. The unit
// square maps to the canvas with y inverted (screen convention).
// Throws ElementCapExceeded when the cell count exceeds the cap.
std::string render_svg(const MoranSequence& sigma, const Slope& slope,
                       const RenderOptions& opts, RenderStats* stats = nullptr);

}  // namespace moran

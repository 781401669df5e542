#include "moranslice/render.hpp"

#include <cstdio>
#include <sstream>

#include "moranslice/errors.hpp"

namespace moran {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

void emit_cells(std::ostringstream& os, const MoranSequence& sigma, const Slope& slope,
                const RenderOptions& opts, const Rect& rect, int level, RenderStats& stats) {
    if (level == opts.depth) {
        const bool hit =
            opts.intercept && line_cell_intersects(rect, slope, *opts.intercept);
        const double c = opts.canvas;
        // y inverted: unit-square y maps to canvas (1 - y).
        os << "<rect class=\"" << (hit ? "hit" : "cell") << "\" x=\""
           << fmt(to_double(rect.x_lo) * c) << "\" y=\"" << fmt((1.0 - to_double(rect.y_hi)) * c)
           << "\" width=\"" << fmt(to_double(rect.side()) * c) << "\" height=\""
           << fmt(to_double(rect.side()) * c) << "\"/>\n";
        ++stats.rect_count;
        if (hit) ++stats.hit_count;
        return;
    }
    const int tag = sigma.at(static_cast<std::size_t>(level) + 1);
    const Rational side = rect.side() / level_base(tag);
    for (const Digit& d : digit_set(tag)) {
        Rect child;
        child.x_lo = rect.x_lo + d.d1 * side;
        child.x_hi = child.x_lo + side;
        child.y_lo = rect.y_lo + d.d2 * side;
        child.y_hi = child.y_lo + side;
        emit_cells(os, sigma, slope, opts, child, level + 1, stats);
    }
}

}  // namespace

std::string render_svg(const MoranSequence& sigma, const Slope& slope,
                       const RenderOptions& opts, RenderStats* stats_out) {
    if (opts.depth < 0) throw std::invalid_argument("render depth must be nonnegative");
    const BigInt cells = cell_count(sigma, opts.depth);
    if (cells > opts.element_cap)
        throw ElementCapExceeded("render would emit " + cells.str() + " rectangles, cap " +
                                 std::to_string(opts.element_cap));

    std::ostringstream os;
    const int c = opts.canvas;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<!-- unit square mapped to a " << c << "x" << c
       << " canvas, y axis inverted (screen convention) -->\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c << "\" height=\"" << c
       << "\" viewBox=\"0 0 " << c << " " << c << "\">\n"
       << "<style>.cell{fill:#2b5d8a;stroke:#ffffff;stroke-width:0.3}"
       << ".hit{fill:#d1495b;stroke:#ffffff;stroke-width:0.3}"
       << ".line{stroke:#222222;stroke-width:1.5}</style>\n";

    RenderStats stats;
    emit_cells(os, sigma, slope, opts, Rect{0, 1, 0, 1}, 0, stats);

    if (opts.intercept) {
        // Clip y = (M/N)x + a to the unit square.
        const Rational a = *opts.intercept;
        const Rational t = slope.tangent();
        Rational x0 = 0, x1 = 1;
        if (t != 0) {
            const Rational at_zero = -a / t;        // x where y = 0
            const Rational at_one = (1 - a) / t;    // x where y = 1
            x0 = std::max(x0, std::min(at_zero, at_one));
            x1 = std::min(x1, std::max(at_zero, at_one));
        }
        if (x0 <= x1) {
            const double y0 = to_double(t * x0 + a);
            const double y1 = to_double(t * x1 + a);
            os << "<line class=\"line\" x1=\"" << fmt(to_double(x0) * c) << "\" y1=\""
               << fmt((1.0 - y0) * c) << "\" x2=\"" << fmt(to_double(x1) * c) << "\" y2=\""
               << fmt((1.0 - y1) * c) << "\"/>\n";
        }
    }

    os << "</svg>\n";
    if (stats_out) *stats_out = stats;
    return os.str();
}

}  // namespace moran

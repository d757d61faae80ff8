#pragma once

// Pictures of arc diagrams.
//
// Points 1..n+1 sit on a unit-spaced baseline. An arc runs through its
// interior points offset by 0.4 units above or below the baseline, joined by
// cubic segments with horizontal tangents; an arc between adjacent points is
// a straight baseline segment. Green arcs are solid, red arcs dashed.

#include <string>

#include "arcbrick/arc.hpp"

namespace arcbrick {

/// Standalone SVG 1.1 document.
std::string render_svg(const ColoredDiagram& d);
std::string render_svg(const NoncrossingDiagram& g);

/// tikzpicture fragment: named nodes 1..n+1 and one \draw per arc, green
/// solid and red dotted, with rounded corners.
std::string render_tikz(const ColoredDiagram& d);
std::string render_tikz(const NoncrossingDiagram& g);

}  // namespace arcbrick

#pragma once

#include <string>

#include "outdeg1/graph.hpp"

namespace outdeg1::svg {

/// Draws a configuration as SVG 1.1: window frame, germs as dots. When a
/// solution is supplied, realized segments / navigation edges become solid
/// lines, loop edges get their own stroke class and censored points a
/// dashed ray out to the window edge. Output is byte-stable for identical
/// inputs.
std::string render(const Configuration& config, const SegmentSolution* segment,
                   const NavigationSolution* navigation);

}  // namespace outdeg1::svg

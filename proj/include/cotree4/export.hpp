#pragma once

#include <iosfwd>

#include "cotree4/cotree.hpp"

namespace cotree4 {

/// Wood arcs as a DOT digraph with red/green/blue color attributes; tree edges
/// (when given) are drawn bold.
void write_dot(std::ostream& out, const Suspension& s, const SchnyderWood& w,
               const TreePair* pair);

/// Self-contained SVG: straight-line layout by barycentric relaxation with the
/// outer boundary fixed on a regular polygon. Tree edges highlighted, co-tree
/// edges dashed between face centroids.
void write_svg(std::ostream& out, const Suspension& s, const SchnyderWood* w,
               const TreePair* pair);

}  // namespace cotree4

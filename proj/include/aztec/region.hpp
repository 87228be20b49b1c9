#pragma once

#include "aztec/graph.hpp"

namespace aztec {

enum class Sweep { right_to_left, left_to_right };

Graph induced_subgraph(const LatticeSpec& lat, const Polyline& region);
Graph induced_subgraph(const LatticeSpec& lat, const ContourSpec& spec);

Graph strip_side_vertices(const Graph& g, SideRef side);
Graph apply_zigzag_trim(const Graph& g, SideRef side, Sweep sweep);

// Removes every vertex strictly beyond the horizontal line at half-unit height y_line
// (keeping the side named by keep_below), then removes every 4th vertex of the row
// next to the line, counted from the sweep-start end beginning at offset.
Graph horizontal_cut(const Graph& g, int y_line, bool keep_below, Sweep sweep, int offset);

} // namespace aztec

#pragma once

#include "aztec/types.hpp"

#include <array>
#include <utility>
#include <vector>

namespace aztec {

enum class LatticeKind { FullGrid, GridB };

struct LatticeSpec {
    LatticeKind kind = LatticeKind::FullGrid;
    // Edges of one cross, relative to its center, in half units. Endpoints ordered.
    std::vector<std::pair<HalfPoint, HalfPoint>> cross_table;
    std::array<Point, 2> period_vectors{};
    HalfPoint anchor{};  // a cross center

    static LatticeSpec full_grid();
    static LatticeSpec grid_b();

    bool is_cross_center(HalfPoint c) const;
    // Cross center whose diamond (|dx|+|dy| < 4 half units) contains h.
    HalfPoint owner(HalfPoint h) const;
};

bool edge_exists(const LatticeSpec& lat, Point p, Point q);

enum class Compass { E, W, NE, NW, SE, SW };
enum class ContourFamily { C1, C2, C3 };

struct Side {
    Compass dir = Compass::E;
    int length = 0;  // unit steps (diagonal steps for diagonal sides)
};

struct ContourSpec {
    ContourFamily family = ContourFamily::C1;
    HalfPoint start{};
    std::vector<Side> sides;
};

// Closed polyline: corners.front() == corners.back().
struct Polyline {
    std::vector<HalfPoint> corners;
};

HalfPoint step(Compass dir);
Polyline trace_contour(const ContourSpec& spec);

bool on_segment(HalfPoint a, HalfPoint b, HalfPoint p);
bool inside_or_on(const Polyline& poly, HalfPoint p);

} // namespace aztec

#include "aztec/region.hpp"

#include <algorithm>
#include <climits>

namespace aztec {

namespace {

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
int ceil_div(int a, int b) { return -floor_div(-a, b); }

const Region& region_of(const Graph& g) {
    if (!g.region) throw Error(ErrorCode::InvalidParams, "graph carries no contour");
    return *g.region;
}

// Offset of the first removed vertex, indexed by [bottom][left_to_right][obtuse].
// An obtuse start corner is one where the row continues past the corner.
constexpr int kZigzagOffset[2][2][2] = {
    {{0, 1}, {2, 3}},  // top side: R->L, L->R
    {{0, 1}, {2, 3}},  // bottom side: R->L, L->R
};

std::vector<Point> every_fourth(std::vector<Point> row, Sweep sweep, int offset) {
    std::sort(row.begin(), row.end());
    if (sweep == Sweep::right_to_left) std::reverse(row.begin(), row.end());
    std::vector<Point> out;
    for (std::size_t k = 0; k < row.size(); ++k)
        if (static_cast<int>(k % 4) == offset) out.push_back(row[k]);
    return out;
}

} // namespace

Graph induced_subgraph(const LatticeSpec& lat, const Polyline& region) {
    std::vector<Point> pts;
    if (region.corners.empty()) return lattice_graph(lat, pts);
    int x0 = INT_MAX, x1 = INT_MIN, y0 = INT_MAX, y1 = INT_MIN;
    for (HalfPoint c : region.corners) {
        x0 = std::min(x0, c.x);
        x1 = std::max(x1, c.x);
        y0 = std::min(y0, c.y);
        y1 = std::max(y1, c.y);
    }
    for (int x = ceil_div(x0, 2); x <= floor_div(x1, 2); ++x)
        for (int y = ceil_div(y0, 2); y <= floor_div(y1, 2); ++y)
            if (inside_or_on(region, doubled(Point{x, y}))) pts.push_back({x, y});
    Graph g = lattice_graph(lat, std::move(pts));
    g.region = Region{region, {}, 0};
    return g;
}

Graph induced_subgraph(const LatticeSpec& lat, const ContourSpec& spec) {
    Graph g = induced_subgraph(lat, trace_contour(spec));
    g.region->sides = spec.sides;
    return g;
}

Graph strip_side_vertices(const Graph& g, SideRef side) {
    const Region& r = region_of(g);
    auto i = static_cast<std::size_t>(side);
    HalfPoint a = r.contour.corners.at(i), b = r.contour.corners.at(i + 1);
    std::vector<Point> drop;
    for (Point p : g.vertices)
        if (on_segment(a, b, doubled(p))) drop.push_back(p);
    return g.without(drop);
}

Graph apply_zigzag_trim(const Graph& g, SideRef side, Sweep sweep) {
    const Region& r = region_of(g);
    auto i = static_cast<std::size_t>(side);
    HalfPoint a = r.contour.corners.at(i), b = r.contour.corners.at(i + 1);
    if (a.y != b.y) throw Error(ErrorCode::NotHorizontalSide, "zigzag trims need a horizontal side");
    if (a == b || (r.trimmed >> i & 1u)) return g;

    const bool top = b.x < a.x;  // contours run counterclockwise
    const int lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
    const int row_y = a.y + (top ? -1 : 1);
    const bool ltr = sweep == Sweep::left_to_right;
    bool obtuse = false;
    std::vector<Point> row;
    for (Point p : g.vertices) {
        HalfPoint h = doubled(p);
        if (h.y != row_y) continue;
        if (ltr ? h.x < lo : h.x > hi) obtuse = true;
        if (lo < h.x && h.x < hi) row.push_back(p);
    }
    int offset = kZigzagOffset[top ? 0 : 1][ltr ? 1 : 0][obtuse ? 1 : 0];
    Graph out = g.without(every_fourth(std::move(row), sweep, offset));
    out.region->trimmed |= 1u << i;
    return out;
}

Graph horizontal_cut(const Graph& g, int y_line, bool keep_below, Sweep sweep, int offset) {
    std::vector<Point> keep;
    for (Point p : g.vertices) {
        int y = 2 * p.y;
        if (keep_below ? y < y_line : y > y_line) keep.push_back(p);
    }
    Graph kept = g.induced(keep);
    const int row_y = keep_below ? y_line - 1 : y_line + 1;
    std::vector<Point> row;
    for (Point p : kept.vertices)
        if (2 * p.y == row_y) row.push_back(p);
    return kept.without(every_fourth(std::move(row), sweep, offset));
}

} // namespace aztec

#include "aztec/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace aztec {

namespace {

std::pair<HalfPoint, HalfPoint> ordered(HalfPoint p, HalfPoint q) {
    return p < q ? std::make_pair(p, q) : std::make_pair(q, p);
}

long long cross(HalfPoint o, HalfPoint a, HalfPoint b) {
    return static_cast<long long>(a.x - o.x) * (b.y - o.y) -
           static_cast<long long>(a.y - o.y) * (b.x - o.x);
}

int sgn(long long v) { return (v > 0) - (v < 0); }

bool segments_touch(HalfPoint a, HalfPoint b, HalfPoint c, HalfPoint d) {
    int d1 = sgn(cross(c, d, a)), d2 = sgn(cross(c, d, b));
    int d3 = sgn(cross(a, b, c)), d4 = sgn(cross(a, b, d));
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    return on_segment(c, d, a) || on_segment(c, d, b) || on_segment(a, b, c) ||
           on_segment(a, b, d);
}

} // namespace

LatticeSpec LatticeSpec::full_grid() { return LatticeSpec{}; }

LatticeSpec LatticeSpec::grid_b() {
    LatticeSpec lat;
    lat.kind = LatticeKind::GridB;
    lat.period_vectors = {Point{4, 0}, Point{2, 2}};
    lat.anchor = {3, 1};
    // Window of the order-2 Aztec diamond around the center; the two central
    // vertical edges are absent, everything else is present.
    std::vector<HalfPoint> pts;
    for (int x : {-3, -1, 1, 3})
        for (int y : {-3, -1, 1, 3})
            if (std::abs(x) + std::abs(y) <= 4) pts.push_back({x, y});
    for (auto p : pts)
        for (auto q : pts) {
            if (!(p < q) || std::abs(p.x - q.x) + std::abs(p.y - q.y) != 2) continue;
            bool central_vertical = p.x == q.x && std::abs(p.x) == 1 && p.y == -1 && q.y == 1;
            if (!central_vertical) lat.cross_table.push_back({p, q});
        }
    return lat;
}

bool LatticeSpec::is_cross_center(HalfPoint c) const {
    int rx = c.x - anchor.x, ry = c.y - anchor.y;
    if (ry % 4 != 0) return false;
    int j = ry / 4;
    return (rx - 4 * j) % 8 == 0;
}

HalfPoint LatticeSpec::owner(HalfPoint h) const {
    for (int dx = -3; dx <= 3; ++dx)
        for (int dy = -3; dy <= 3; ++dy) {
            if (std::abs(dx) + std::abs(dy) >= 4) continue;
            HalfPoint c{h.x + dx, h.y + dy};
            if (is_cross_center(c)) return c;
        }
    throw Error(ErrorCode::NotGridB, "no cross owns the given position");
}

bool edge_exists(const LatticeSpec& lat, Point p, Point q) {
    if (std::abs(p.x - q.x) + std::abs(p.y - q.y) != 1) return false;
    if (lat.kind == LatticeKind::FullGrid) return true;
    HalfPoint mid{p.x + q.x, p.y + q.y};
    HalfPoint c = lat.owner(mid);
    HalfPoint rp{2 * p.x - c.x, 2 * p.y - c.y};
    HalfPoint rq{2 * q.x - c.x, 2 * q.y - c.y};
    auto key = ordered(rp, rq);
    return std::find(lat.cross_table.begin(), lat.cross_table.end(), key) !=
           lat.cross_table.end();
}

HalfPoint step(Compass dir) {
    switch (dir) {
    case Compass::E: return {1, 0};
    case Compass::W: return {-1, 0};
    case Compass::NE: return {1, 1};
    case Compass::NW: return {-1, 1};
    case Compass::SE: return {1, -1};
    case Compass::SW: return {-1, -1};
    }
    return {0, 0};
}

Polyline trace_contour(const ContourSpec& spec) {
    Polyline out;
    HalfPoint cur = spec.start;
    out.corners.push_back(cur);
    for (const Side& s : spec.sides) {
        if (s.length < 0) throw Error(ErrorCode::NonClosing, "negative side length");
        HalfPoint d = step(s.dir);
        cur = {cur.x + 2 * s.length * d.x, cur.y + 2 * s.length * d.y};
        out.corners.push_back(cur);
    }
    if (cur != spec.start) throw Error(ErrorCode::NonClosing, "side vectors do not sum to zero");

    std::vector<std::pair<HalfPoint, HalfPoint>> segs;
    for (std::size_t i = 0; i + 1 < out.corners.size(); ++i)
        if (out.corners[i] != out.corners[i + 1])
            segs.push_back({out.corners[i], out.corners[i + 1]});
    if (segs.size() < 3) throw Error(ErrorCode::SelfIntersecting, "degenerate contour");
    const std::size_t n = segs.size();
    for (std::size_t i = 0; i < n; ++i) {
        // consecutive sides must not fold back onto each other
        auto [a, b] = segs[i];
        auto [c, d] = segs[(i + 1) % n];
        if (cross(a, b, d) == 0) {
            long long dot = static_cast<long long>(b.x - a.x) * (d.x - c.x) +
                            static_cast<long long>(b.y - a.y) * (d.y - c.y);
            if (dot < 0) throw Error(ErrorCode::SelfIntersecting, "contour folds back");
        }
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (segments_touch(segs[i].first, segs[i].second, segs[j].first, segs[j].second))
                throw Error(ErrorCode::SelfIntersecting, "contour sides intersect");
        }
    }
    return out;
}

bool on_segment(HalfPoint a, HalfPoint b, HalfPoint p) {
    return cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool inside_or_on(const Polyline& poly, HalfPoint p) {
    const auto& c = poly.corners;
    bool in = false;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        HalfPoint a = c[i], b = c[i + 1];
        if (on_segment(a, b, p)) return true;
        if ((a.y > p.y) != (b.y > p.y)) {
            // crossing x > p.x, compared without division
            long long lhs = static_cast<long long>(p.y - a.y) * (b.x - a.x);
            long long rhs = static_cast<long long>(p.x - a.x) * (b.y - a.y);
            bool right = (b.y > a.y) ? lhs > rhs : lhs < rhs;
            if (right) in = !in;
        }
    }
    return in;
}

} // namespace aztec

#include "aztec/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>

namespace aztec {

namespace {

std::string triple(int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

Graph aztec_rectangle_at(const LatticeSpec& lat, HalfPoint e, int p, int q) {
    Polyline poly;
    poly.corners = {e, {e.x - 2 * p, e.y + 2 * p}, {e.x - 2 * p - 2 * q, e.y + 2 * p - 2 * q},
                    {e.x - 2 * q, e.y - 2 * q}, e};
    Graph g = induced_subgraph(lat, poly);
    g.region.reset();
    return g;
}

// One extra square to the left of each row of complete squares.
Graph augment_rows(const LatticeSpec& lat, const Graph& g) {
    std::set<Point> have(g.vertices.begin(), g.vertices.end());
    std::map<int, int> leftmost;  // square row (lower y) -> lower-left x
    for (Point p : g.vertices) {
        if (have.count({p.x + 1, p.y}) && have.count({p.x, p.y + 1}) &&
            have.count({p.x + 1, p.y + 1})) {
            auto it = leftmost.find(p.y);
            if (it == leftmost.end() || p.x < it->second) leftmost[p.y] = p.x;
        }
    }
    std::vector<Point> pts = g.vertices;
    for (auto [y, x] : leftmost)
        for (Point s : {Point{x - 1, y}, Point{x, y}, Point{x - 1, y + 1}, Point{x, y + 1}})
            pts.push_back(s);
    return lattice_graph(lat, pts);
}

Graph trimmed_rectangle(const LatticeSpec& lat, HalfPoint e, int p, int q, int h1, int h2) {
    Graph g = aztec_rectangle_at(lat, e, p, q);
    const int top = e.y + 2 * p, bottom = e.y - 2 * q;
    g = horizontal_cut(g, top - 2 * h1, true, Sweep::right_to_left, 3);
    return horizontal_cut(g, bottom + 2 * h2, false, Sweep::left_to_right, 3);
}

} // namespace

bool valid_params(int a, int b, int c) {
    return a >= 0 && c >= 0 && b >= 2 && 2 * b - a - 2 * c >= 0 && 3 * b - 2 * a - 2 * c >= 0;
}

FamilyParams derive_params(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw Error(ErrorCode::InvalidParams, "negative parameter " + triple(a, b, c));
    if (b < 2) throw Error(ErrorCode::InvalidParams, "b < 2 in " + triple(a, b, c));
    FamilyParams p;
    p.a = a;
    p.b = b;
    p.c = c;
    p.d = 2 * b - a - 2 * c;
    p.e = 3 * b - 2 * a - 2 * c;
    if (p.d < 0) throw Error(ErrorCode::InvalidParams, "d < 0 in " + triple(a, b, c));
    if (p.e < 0) throw Error(ErrorCode::InvalidParams, "e < 0 in " + triple(a, b, c));
    p.f = std::abs(2 * a - 2 * b + c);
    p.perimeter = a + b + c + p.d + p.e + p.f;
    p.case_tall = a > c + p.d;
    return p;
}

bool valid_trim_params(const TrimRectParams& p) {
    if (p.m < 1 || p.n < p.m || p.h1 < 0 || p.h2 < 0) return false;
    if ((p.h1 + 1) / 2 + (p.h2 + 1) / 2 != 2 * (p.n - p.m)) return false;
    const int side = p.variant == TrimVariant::TA ? 2 * p.m : 2 * p.m - 1;
    return p.h1 < side && p.h2 < side;
}

HalfPoint east_corner(const LatticeSpec& lat, CrossAlignment alignment) {
    if (lat.kind == LatticeKind::FullGrid) return {1, 1};
    // The cross's tips are 3 half units from its center; the rectangle's east-most
    // vertical edge sits one half unit west of its east corner.
    HalfPoint c = lat.anchor;
    if (alignment == CrossAlignment::EastmostEdgeOfCross) return {c.x + 4 - 8, c.y};
    return {c.x - 2, c.y};
}

HalfPoint contour_origin(const LatticeSpec& lat) {
    if (lat.kind == LatticeKind::FullGrid) return {1, 1};
    return {lat.anchor.x - 2, lat.anchor.y};
}

Graph build_aztec_rectangle(const LatticeSpec& lat, int m, int n, CrossAlignment alignment) {
    if (m < 1 || n < 1) throw Error(ErrorCode::InvalidParams, "rectangle sides must be positive");
    return aztec_rectangle_at(lat, east_corner(lat, alignment), m, n);
}

Graph build_augmented_aztec(const LatticeSpec& lat, int m, int n, CrossAlignment alignment) {
    return augment_rows(lat, build_aztec_rectangle(lat, m, n, alignment));
}

Graph build_TR(int a, int b) {
    if (a < 1 || b < 2 * a)
        throw Error(ErrorCode::InvalidParams, "TR needs a >= 1 and b >= 2a");
    const LatticeSpec lat = LatticeSpec::grid_b();
    const HalfPoint e = east_corner(lat, CrossAlignment::EastmostEdgeOfCross);
    Graph g = build_augmented_aztec(lat, 2 * b + 2 * a - 2, 2 * b + 4 * a - 2,
                                    CrossAlignment::EastmostEdgeOfCross);
    g = horizontal_cut(g, e.y + 2 * (2 * a - 1) + 2, true, Sweep::right_to_left, 0);
    return horizontal_cut(g, e.y - 2 * (4 * a - 1) - 2, false, Sweep::right_to_left, 0);
}

Graph build_TA(const TrimRectParams& p) {
    TrimRectParams q = p;
    q.variant = TrimVariant::TA;
    if (!valid_trim_params(q)) throw Error(ErrorCode::InvalidParams, "TA parameters out of range");
    const LatticeSpec lat = LatticeSpec::grid_b();
    return trimmed_rectangle(lat, east_corner(lat, CrossAlignment::EastmostEdgeOfCross), 2 * p.m,
                             2 * p.n, p.h1, p.h2);
}

Graph build_TB(const TrimRectParams& p) {
    TrimRectParams q = p;
    q.variant = TrimVariant::TB;
    if (!valid_trim_params(q)) throw Error(ErrorCode::InvalidParams, "TB parameters out of range");
    const LatticeSpec lat = LatticeSpec::grid_b();
    return trimmed_rectangle(lat, east_corner(lat, CrossAlignment::WestmostEdgeOfCross),
                             2 * p.m - 1, 2 * p.n - 1, p.h1, p.h2);
}

ContourSpec family_contour(int i, int a, int b, int c, HalfPoint start) {
    FamilyParams fp = derive_params(a, b, c);
    const bool tall = 2 * a - 2 * b + c > 0;
    const int d = fp.d, e = fp.e, f = fp.f;
    ContourSpec s;
    s.start = start;
    using C = Compass;
    switch (i) {
    case 1:
        s.family = ContourFamily::C1;
        s.sides = {{C::SE, 2 * a}, {C::NE, 2 * b}, {C::W, 4 * c},
                   {C::NW, 2 * d}, {C::SW, 2 * e}, {tall ? C::W : C::E, 4 * f}};
        break;
    case 2:
        s.family = ContourFamily::C2;
        s.sides = {{C::SW, 2 * a}, {C::E, 4 * b}, {C::NW, 2 * c},
                   {C::NE, 2 * d}, {C::W, 4 * e}, {tall ? C::NW : C::SE, 2 * f}};
        break;
    case 3:
        s.family = ContourFamily::C3;
        s.sides = {{C::E, 4 * a}, {C::NW, 2 * b}, {C::SW, 2 * c},
                   {C::W, 4 * d}, {C::SE, 2 * e}, {tall ? C::SW : C::NE, 2 * f}};
        break;
    default:
        throw Error(ErrorCode::InvalidParams, "family index must be 1, 2 or 3");
    }
    return s;
}

Graph build_region(int i, int a, int b, int c) {
    const LatticeSpec lat = LatticeSpec::grid_b();
    return induced_subgraph(lat, family_contour(i, a, b, c, contour_origin(lat)));
}

Graph build_family(FamilyKind kind, int i, int a, int b, int c) {
    FamilyParams fp = derive_params(a, b, c);
    const bool tall = fp.case_tall;
    using S = SideRef;
    std::vector<S> strip;
    std::pair<S, Sweep> trims[2];
    const Sweep rtl = Sweep::right_to_left, ltr = Sweep::left_to_right;
    switch (i) {
    case 1:
        if (kind == FamilyKind::A) strip = {S::a_side, S::b_side, S::d_side, S::e_side};
        trims[0] = {S::c_side, rtl};
        trims[1] = {S::f_side, ltr};
        break;
    case 2:
        if (kind == FamilyKind::F) {
            strip = {S::a_side, S::d_side};
            if (tall) strip.push_back(S::f_side);
        } else {
            strip = {S::c_side};
            if (!tall) strip.push_back(S::f_side);
        }
        trims[0] = {S::b_side, ltr};
        trims[1] = {S::e_side, rtl};
        break;
    case 3:
        if (kind == FamilyKind::F) {
            strip = {S::b_side, S::c_side, S::e_side};
            if (!tall) strip.push_back(S::f_side);
        } else if (tall) {
            strip = {S::f_side};
        }
        trims[0] = {S::a_side, rtl};
        trims[1] = {S::d_side, ltr};
        break;
    default:
        throw Error(ErrorCode::InvalidParams, "family index must be 1, 2 or 3");
    }
    Graph g = build_region(i, a, b, c);
    for (S s : strip) g = strip_side_vertices(g, s);
    for (auto [s, sweep] : trims) g = apply_zigzag_trim(g, s, sweep);
    return g;
}

namespace {

Compass mirror(Compass d, Axis axis) {
    using C = Compass;
    if (axis == Axis::vertical) {
        switch (d) {
        case C::E: return C::W;
        case C::W: return C::E;
        case C::NE: return C::NW;
        case C::NW: return C::NE;
        case C::SE: return C::SW;
        case C::SW: return C::SE;
        }
    }
    switch (d) {
    case C::NE: return C::SE;
    case C::SE: return C::NE;
    case C::NW: return C::SW;
    case C::SW: return C::NW;
    default: return d;
    }
}

} // namespace

Graph reflect(const Graph& g, Axis axis) {
    std::vector<Point> mirrored;
    for (Point p : g.vertices)
        mirrored.push_back(axis == Axis::vertical ? Point{-p.x, p.y} : Point{p.x, -p.y});
    std::vector<int> order(mirrored.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int l, int r) { return mirrored[l] < mirrored[r]; });
    std::vector<int> where(order.size());
    Graph out;
    for (std::size_t k = 0; k < order.size(); ++k) {
        where[order[k]] = static_cast<int>(k);
        out.vertices.push_back(mirrored[order[k]]);
    }
    std::vector<std::pair<std::pair<int, int>, Rat>> es;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        int i = where[g.edges[e].first], j = where[g.edges[e].second];
        es.push_back({{std::min(i, j), std::max(i, j)}, g.weight(e)});
    }
    std::sort(es.begin(), es.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    for (auto& [e, w] : es) {
        out.edges.push_back(e);
        if (g.weighted()) out.weights.push_back(w);
    }
    if (g.lattice) {
        LatticeSpec lat = *g.lattice;
        // the cross pattern is symmetric under both reflections through its center
        if (axis == Axis::vertical) lat.anchor.x = -lat.anchor.x;
        else lat.anchor.y = -lat.anchor.y;
        out.lattice = lat;
    }
    if (g.region) {
        Region r = *g.region;
        for (HalfPoint& h : r.contour.corners) (axis == Axis::vertical ? h.x : h.y) *= -1;
        for (Side& s : r.sides) s.dir = mirror(s.dir, axis);
        out.region = r;
    }
    return out;
}

bool is_translate(const Graph& g, const Graph& h) {
    if (g.vertices.size() != h.vertices.size() || g.edges.size() != h.edges.size()) return false;
    if (g.vertices.empty()) return true;
    const int dx = h.vertices[0].x - g.vertices[0].x, dy = h.vertices[0].y - g.vertices[0].y;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        if (h.vertices[i] != Point{g.vertices[i].x + dx, g.vertices[i].y + dy}) return false;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (g.edges[e] != h.edges[e] || g.weight(e) != h.weight(e)) return false;
    return true;
}

CrossWeight cross_weight_class(const LatticeSpec& lat, Point p, Point q) {
    if (lat.kind != LatticeKind::GridB) throw Error(ErrorCode::NotGridB, "cross weights need grid B");
    HalfPoint mid{p.x + q.x, p.y + q.y};
    HalfPoint c = lat.owner(mid);
    const int rx = mid.x - c.x, ry = mid.y - c.y;
    if (rx == 0 && std::abs(ry) == 1) return CrossWeight::x;
    if (std::abs(rx) == 3 || std::abs(ry) == 3) return CrossWeight::one;
    return rx > 0 ? CrossWeight::y : CrossWeight::z;
}

Graph assign_cross_weights(const Graph& g, const WeightPoint& w) {
    if (!g.lattice || g.lattice->kind != LatticeKind::GridB)
        throw Error(ErrorCode::NotGridB, "cross weights need a grid-B graph");
    Graph out = g;
    out.weights.assign(g.edges.size(), Rat(1));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        Rat base = g.weight(e);
        switch (cross_weight_class(*g.lattice, g.vertices[g.edges[e].first],
                                   g.vertices[g.edges[e].second])) {
        case CrossWeight::one: out.weights[e] = base; break;
        case CrossWeight::x: out.weights[e] = base * w.x; break;
        case CrossWeight::y: out.weights[e] = base * w.y; break;
        case CrossWeight::z: out.weights[e] = base * w.z; break;
        }
    }
    return out;
}

} // namespace aztec

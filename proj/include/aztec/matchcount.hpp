#pragma once

#include "aztec/graph.hpp"

#include <array>
#include <functional>
#include <vector>

namespace aztec {

struct ForcedReduction {
    Graph reduced;
    Rat multiplier{1};
};

ForcedReduction reduce_forced(const Graph& g);

constexpr int kDefaultBruteCap = 44;
constexpr int kDefaultFktCap = 700;

Rat count_brute(const Graph& g, int cap = kDefaultBruteCap);

// A face is a closed walk of half-edges; half-edge 2e runs edges[e].first -> second,
// half-edge 2e+1 the other way. Bounded faces are walked counterclockwise.
struct FaceSet {
    std::vector<std::vector<int>> faces;
    std::vector<bool> unbounded;  // per face: the outer face of its component
};

FaceSet compute_faces(const Graph& g);

struct OrientedGraph {
    Graph graph;
    std::vector<bool> forward;  // edge e points edges[e].first -> edges[e].second
};

OrientedGraph pfaffian_orientation(const Graph& g);
// Number of edges of the face walk oriented clockwise.
int clockwise_edges(const OrientedGraph& og, const std::vector<int>& face);

Rat count_fkt(const Graph& g, int cap = kDefaultFktCap);

// Exact determinant of an integer matrix (row-major, n x n).
Int exact_determinant(const std::vector<Int>& a, int n);

using Counter = std::function<Rat(const Graph&)>;

struct KuoReport {
    Rat lhs, rhs;
    bool equal = false;
    // M(G), M(G-uvwt), M(G-uv), M(G-wt), M(G-tu), M(G-vw)
    std::array<Rat, 6> counts;
};

// u, w in one class, v, t in the other, appearing in this cyclic order on a face.
bool kuo_vertices_valid(const Graph& g, Point u, Point v, Point w, Point t);
KuoReport kuo_check(const Graph& g, Point u, Point v, Point w, Point t, const Counter& count = {});

struct SplitReport {
    Rat m_g, m_h, m_rest;
    bool separating = false;
    bool balancing = false;
    bool equal = false;
};

SplitReport split_check(const Graph& g, const std::vector<Point>& h_vertices, const Counter& count = {});

} // namespace aztec

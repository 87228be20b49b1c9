#pragma once

#include "aztec/lattice.hpp"
#include "aztec/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aztec {

enum class SideRef { a_side, b_side, c_side, d_side, e_side, f_side };

struct Region {
    Polyline contour;
    std::vector<Side> sides;
    unsigned trimmed = 0;  // bit per side already zigzag-trimmed
};

struct Graph {
    std::vector<Point> vertices;             // sorted lexicographically
    std::vector<std::pair<int, int>> edges;  // i < j, sorted
    std::vector<Rat> weights;                // parallel to edges; empty means all 1
    std::optional<LatticeSpec> lattice;
    std::optional<Region> region;

    int index_of(Point p) const;
    bool contains(Point p) const { return index_of(p) >= 0; }
    bool weighted() const { return !weights.empty(); }
    Rat weight(std::size_t e) const { return weights.empty() ? Rat(1) : weights[e]; }
    std::size_t size() const { return vertices.size(); }
    std::vector<std::vector<int>> adjacency() const;
    std::pair<int, int> class_sizes() const;
    bool balanced() const;

    // Subgraph induced by the kept vertices; weights, lattice and region carried over.
    Graph induced(const std::vector<Point>& keep) const;
    Graph without(const std::vector<Point>& drop) const;
};

// Graph on the given points with every lattice edge between them.
Graph lattice_graph(const LatticeSpec& lat, std::vector<Point> pts);

Graph disjoint_union(const Graph& g, const Graph& h);

// Canonical JSON: {"vertices":[[x,y],...],"edges":[[i,j],...]} (+ "weights" when weighted).
std::string to_json(const Graph& g);
std::uint64_t graph_hash(const Graph& g);
std::string graph_hash_hex(const Graph& g);

} // namespace aztec

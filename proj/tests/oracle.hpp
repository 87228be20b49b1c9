#pragma once

// Independent reference routines for the tests. Nothing here calls the counting code.

#include "aztec/graph.hpp"

#include <vector>

namespace oracle {

// Plain recursion: match the first free vertex to each free neighbour in turn.
inline aztec::Rat naive_matchings(const aztec::Graph& g) {
    const int n = static_cast<int>(g.size());
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, edge)
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        adj[g.edges[e].first].push_back({g.edges[e].second, static_cast<int>(e)});
        adj[g.edges[e].second].push_back({g.edges[e].first, static_cast<int>(e)});
    }
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self) -> aztec::Rat {
        int v = 0;
        while (v < n && used[v]) ++v;
        if (v == n) return 1;
        aztec::Rat total = 0;
        used[v] = 1;
        for (auto [w, e] : adj[v]) {
            if (used[w]) continue;
            used[w] = 1;
            total += g.weight(e) * self(self);
            used[w] = 0;
        }
        used[v] = 0;
        return total;
    };
    return rec(rec);
}

// Lattice paths from (0,0) to (m,n) with N, NE and E steps, counted recursively.
inline long delannoy_paths(int m, int n) {
    if (m < 0 || n < 0) return 0;
    if (m == 0 || n == 0) return 1;
    return delannoy_paths(m - 1, n) + delannoy_paths(m, n - 1) + delannoy_paths(m - 1, n - 1);
}

// Fraction-free Bareiss elimination.
inline aztec::Int bareiss_det(std::vector<aztec::Int> a, int n) {
    aztec::Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k * n + k] == 0) {
            int r = k + 1;
            while (r < n && a[r * n + k] == 0) ++r;
            if (r == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
        prev = a[k * n + k];
    }
    return n == 0 ? aztec::Int(1) : aztec::Int(sign * a[n * n - 1]);
}

} // namespace oracle

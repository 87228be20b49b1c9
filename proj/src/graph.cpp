#include "aztec/graph.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace aztec {

int Graph::index_of(Point p) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
    if (it == vertices.end() || *it != p) return -1;
    return static_cast<int>(it - vertices.begin());
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(vertices.size());
    for (auto [i, j] : edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    return adj;
}

std::pair<int, int> Graph::class_sizes() const {
    int zero = 0;
    for (Point p : vertices) zero += color(p) == 0;
    return {zero, static_cast<int>(vertices.size()) - zero};
}

bool Graph::balanced() const {
    auto [a, b] = class_sizes();
    return a == b;
}

Graph Graph::induced(const std::vector<Point>& keep) const {
    std::vector<char> kept(vertices.size(), 0);
    for (Point p : keep) {
        int i = index_of(p);
        if (i >= 0) kept[i] = 1;
    }
    Graph out;
    out.lattice = lattice;
    out.region = region;
    std::vector<int> remap(vertices.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (kept[i]) {
            remap[i] = static_cast<int>(out.vertices.size());
            out.vertices.push_back(vertices[i]);
        }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [i, j] = edges[e];
        if (remap[i] < 0 || remap[j] < 0) continue;
        out.edges.push_back({remap[i], remap[j]});
        if (weighted()) out.weights.push_back(weights[e]);
    }
    return out;
}

Graph Graph::without(const std::vector<Point>& drop) const {
    std::vector<char> gone(vertices.size(), 0);
    for (Point p : drop) {
        int i = index_of(p);
        if (i >= 0) gone[i] = 1;
    }
    std::vector<Point> keep;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (!gone[i]) keep.push_back(vertices[i]);
    return induced(keep);
}

Graph lattice_graph(const LatticeSpec& lat, std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Graph g;
    g.vertices = std::move(pts);
    g.lattice = lat;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        Point p = g.vertices[i];
        for (Point q : {Point{p.x + 1, p.y}, Point{p.x, p.y + 1}}) {
            int j = g.index_of(q);
            if (j >= 0 && edge_exists(lat, p, q)) g.edges.push_back({static_cast<int>(i), j});
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::map<Point, int> where;
    Graph out;
    std::vector<Point> all = g.vertices;
    all.insert(all.end(), h.vertices.begin(), h.vertices.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw Error(ErrorCode::InvalidParams, "disjoint_union of overlapping graphs");
    out.vertices = all;
    std::vector<std::pair<std::pair<int, int>, Rat>> es;
    for (const Graph* src : {&g, &h})
        for (std::size_t e = 0; e < src->edges.size(); ++e) {
            int i = out.index_of(src->vertices[src->edges[e].first]);
            int j = out.index_of(src->vertices[src->edges[e].second]);
            es.push_back({{std::min(i, j), std::max(i, j)}, src->weight(e)});
        }
    std::sort(es.begin(), es.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    bool w = g.weighted() || h.weighted();
    for (auto& [e, wt] : es) {
        out.edges.push_back(e);
        if (w) out.weights.push_back(wt);
    }
    return out;
}

std::string to_json(const Graph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (Point p : g.vertices) j["vertices"].push_back({p.x, p.y});
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : g.edges) j["edges"].push_back({a, b});
    if (g.weighted()) {
        j["weights"] = nlohmann::json::array();
        for (const Rat& w : g.weights) j["weights"].push_back(w.get_str());
    }
    return j.dump();
}

std::uint64_t graph_hash(const Graph& g) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : to_json(g)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string graph_hash_hex(const Graph& g) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(graph_hash(g)));
    return buf;
}

} // namespace aztec

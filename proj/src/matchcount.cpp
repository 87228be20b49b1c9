#include "aztec/matchcount.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace aztec {

namespace {

struct Incidence {
    int to;
    int edge;
};

std::vector<std::vector<Incidence>> incidence(const Graph& g) {
    std::vector<std::vector<Incidence>> inc(g.vertices.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [i, j] = g.edges[e];
        inc[i].push_back({j, static_cast<int>(e)});
        inc[j].push_back({i, static_cast<int>(e)});
    }
    return inc;
}

std::vector<std::vector<int>> components(const Graph& g) {
    auto adj = g.adjacency();
    std::vector<int> comp(g.vertices.size(), -1);
    std::vector<std::vector<int>> out;
    for (std::size_t s = 0; s < g.vertices.size(); ++s) {
        if (comp[s] >= 0) continue;
        out.emplace_back();
        std::vector<int> stack{static_cast<int>(s)};
        comp[s] = static_cast<int>(out.size()) - 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (int u : adj[v])
                if (comp[u] < 0) {
                    comp[u] = comp[s];
                    stack.push_back(u);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

// Counterclockwise angular order of direction vectors.
bool angle_less(Point a, Point b) {
    auto half = [](Point p) { return (p.y > 0 || (p.y == 0 && p.x > 0)) ? 0 : 1; };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return static_cast<long long>(a.x) * b.y - static_cast<long long>(a.y) * b.x > 0;
}

int tail(const Graph& g, int he) {
    const auto& e = g.edges[he / 2];
    return he % 2 == 0 ? e.first : e.second;
}

int head(const Graph& g, int he) {
    const auto& e = g.edges[he / 2];
    return he % 2 == 0 ? e.second : e.first;
}

} // namespace

ForcedReduction reduce_forced(const Graph& g) {
    const std::size_t n = g.vertices.size();
    auto inc = incidence(g);
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);
    std::deque<int> queue;
    ForcedReduction out;
    auto zero = [&]() {
        out.reduced = g.induced({});
        out.multiplier = 0;
        return out;
    };
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(inc[v].size());
        if (deg[v] == 0) return zero();
        if (deg[v] == 1) queue.push_back(static_cast<int>(v));
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (!alive[v]) continue;
        if (deg[v] == 0) return zero();
        if (deg[v] != 1) continue;
        int u = -1, e = -1;
        for (auto [to, edge] : inc[v])
            if (alive[to]) {
                u = to;
                e = edge;
            }
        out.multiplier *= g.weight(static_cast<std::size_t>(e));
        alive[v] = alive[u] = 0;
        for (auto [x, edge] : inc[u]) {
            if (!alive[x]) continue;
            if (--deg[x] == 0) return zero();
            if (deg[x] == 1) queue.push_back(x);
        }
    }
    std::vector<Point> keep;
    for (std::size_t v = 0; v < n; ++v)
        if (alive[v]) keep.push_back(g.vertices[v]);
    out.reduced = g.induced(keep);
    return out;
}

Rat count_brute(const Graph& g, int cap) {
    const int n = static_cast<int>(g.vertices.size());
    if (n > cap || n > 64) throw Error(ErrorCode::TooLarge, "brute force limited to " + std::to_string(std::min(cap, 64)) + " vertices");
    if (n % 2 || !g.balanced()) return 0;
    using Mask = std::uint64_t;
    auto inc = incidence(g);
    std::vector<Mask> nbr(n, 0);
    for (int v = 0; v < n; ++v)
        for (auto [u, e] : inc[v]) nbr[v] |= Mask{1} << u;
    std::unordered_map<Mask, Rat> memo;
    std::function<Rat(Mask)> rec = [&](Mask rem) -> Rat {
        if (!rem) return 1;
        auto it = memo.find(rem);
        if (it != memo.end()) return it->second;
        int best = -1, best_deg = 65;
        for (Mask m = rem; m; m &= m - 1) {
            int v = __builtin_ctzll(m);
            int d = __builtin_popcountll(nbr[v] & rem);
            if (d < best_deg) {
                best_deg = d;
                best = v;
            }
        }
        Rat total = 0;
        if (best_deg > 0)
            for (auto [u, e] : inc[best])
                if (rem >> u & 1)
                    total += g.weight(static_cast<std::size_t>(e)) *
                             rec(rem & ~(Mask{1} << best) & ~(Mask{1} << u));
        memo.emplace(rem, total);
        return total;
    };
    Mask all = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
    return rec(all);
}

FaceSet compute_faces(const Graph& g) {
    const std::size_t n = g.vertices.size();
    const int halves = static_cast<int>(2 * g.edges.size());
    std::vector<std::vector<int>> out_he(n);
    for (int he = 0; he < halves; ++he) out_he[tail(g, he)].push_back(he);
    std::vector<int> pos(halves);
    for (std::size_t v = 0; v < n; ++v) {
        auto& lst = out_he[v];
        auto dir = [&](int he) {
            Point a = g.vertices[tail(g, he)], b = g.vertices[head(g, he)];
            return Point{b.x - a.x, b.y - a.y};
        };
        std::sort(lst.begin(), lst.end(), [&](int l, int r) { return angle_less(dir(l), dir(r)); });
        for (std::size_t k = 0; k < lst.size(); ++k) pos[lst[k]] = static_cast<int>(k);
    }
    auto next = [&](int he) {
        const auto& lst = out_he[head(g, he)];
        int k = pos[he ^ 1];
        return lst[(k + static_cast<int>(lst.size()) - 1) % lst.size()];
    };
    FaceSet fs;
    std::vector<char> seen(halves, 0);
    std::vector<long long> area;
    for (int s = 0; s < halves; ++s) {
        if (seen[s]) continue;
        std::vector<int> walk;
        long long a2 = 0;
        for (int he = s; !seen[he]; he = next(he)) {
            seen[he] = 1;
            walk.push_back(he);
            Point p = g.vertices[tail(g, he)], q = g.vertices[head(g, he)];
            a2 += static_cast<long long>(p.x) * q.y - static_cast<long long>(q.x) * p.y;
        }
        fs.faces.push_back(std::move(walk));
        area.push_back(a2);
    }
    // one unbounded face per component: the one with the smallest signed area
    std::vector<int> comp_of(n, -1);
    auto comps = components(g);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    std::vector<int> outer(comps.size(), -1);
    for (std::size_t f = 0; f < fs.faces.size(); ++f) {
        int c = comp_of[tail(g, fs.faces[f][0])];
        if (outer[c] < 0 || area[f] < area[outer[c]]) outer[c] = static_cast<int>(f);
    }
    fs.unbounded.assign(fs.faces.size(), false);
    for (int f : outer)
        if (f >= 0) fs.unbounded[f] = true;
    return fs;
}

int clockwise_edges(const OrientedGraph& og, const std::vector<int>& face) {
    int cw = 0;
    for (int he : face) cw += og.forward[he / 2] != (he % 2 == 0);
    return cw;
}

OrientedGraph pfaffian_orientation(const Graph& g) {
    OrientedGraph og{g, std::vector<bool>(g.edges.size(), true)};
    const std::size_t n = g.vertices.size();
    // spanning forest
    auto inc = incidence(g);
    std::vector<char> tree(g.edges.size(), 0), reached(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        if (reached[s]) continue;
        reached[s] = 1;
        std::deque<int> q{static_cast<int>(s)};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (auto [u, e] : inc[v])
                if (!reached[u]) {
                    reached[u] = 1;
                    tree[e] = 1;
                    q.push_back(u);
                }
        }
    }
    FaceSet fs = compute_faces(g);
    const std::size_t nf = fs.faces.size();
    std::vector<int> face_of(2 * g.edges.size());
    for (std::size_t f = 0; f < nf; ++f)
        for (int he : fs.faces[f]) face_of[he] = static_cast<int>(f);
    std::vector<std::vector<std::pair<int, int>>> dual(nf);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (tree[e]) continue;
        int f1 = face_of[2 * e], f2 = face_of[2 * e + 1];
        if (f1 == f2) throw Error(ErrorCode::NonPlanarEmbedding, "non-tree edge bounds a single face");
        dual[f1].push_back({f2, static_cast<int>(e)});
        dual[f2].push_back({f1, static_cast<int>(e)});
    }
    std::vector<int> parent_edge(nf, -1), order;
    std::vector<char> visited(nf, 0);
    for (std::size_t root = 0; root < nf; ++root) {
        if (!fs.unbounded[root]) continue;
        visited[root] = 1;
        std::deque<int> q{static_cast<int>(root)};
        while (!q.empty()) {
            int f = q.front();
            q.pop_front();
            order.push_back(f);
            for (auto [h, e] : dual[f])
                if (!visited[h]) {
                    visited[h] = 1;
                    parent_edge[h] = e;
                    q.push_back(h);
                }
        }
    }
    if (order.size() != nf) throw Error(ErrorCode::NonPlanarEmbedding, "dual graph is not a forest of faces");
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int f = *it;
        if (parent_edge[f] < 0) continue;
        if (clockwise_edges(og, fs.faces[f]) % 2 == 0) og.forward[parent_edge[f]] = !og.forward[parent_edge[f]];
    }
    return og;
}

Rat count_fkt(const Graph& g, int cap) {
    if (static_cast<int>(g.vertices.size()) > cap)
        throw Error(ErrorCode::TooLarge, "FKT limited to " + std::to_string(cap) + " vertices");
    ForcedReduction fr = reduce_forced(g);
    if (fr.multiplier == 0) return 0;
    Rat total = fr.multiplier;
    const Graph& red = fr.reduced;
    for (const auto& comp : components(red)) {
        if (comp.size() % 2) return 0;
        std::vector<Point> pts;
        for (int v : comp) pts.push_back(red.vertices[v]);
        Graph sub = red.induced(pts);
        if (!sub.balanced()) return 0;
        OrientedGraph og = pfaffian_orientation(sub);
        std::vector<int> idx(sub.vertices.size());
        int nb = 0, nw = 0;
        for (std::size_t v = 0; v < sub.vertices.size(); ++v)
            idx[v] = color(sub.vertices[v]) == 0 ? nb++ : nw++;
        const int k = nb;
        std::vector<Rat> entries(static_cast<std::size_t>(k) * k, Rat(0));
        for (std::size_t e = 0; e < sub.edges.size(); ++e) {
            auto [i, j] = sub.edges[e];
            const bool first_black = color(sub.vertices[i]) == 0;
            const int b = first_black ? idx[i] : idx[j];
            const int w = first_black ? idx[j] : idx[i];
            const bool b_to_w = og.forward[e] == first_black;
            Rat val = sub.weight(e);
            entries[static_cast<std::size_t>(b) * k + w] = b_to_w ? val : Rat(-val);
        }
        std::vector<Int> ints(entries.size());
        Rat scale = 1;
        for (int r = 0; r < k; ++r) {
            Int l = 1;
            for (int c = 0; c < k; ++c) {
                const Int& den = entries[static_cast<std::size_t>(r) * k + c].get_den();
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
            }
            for (int c = 0; c < k; ++c) {
                const Rat& q = entries[static_cast<std::size_t>(r) * k + c];
                ints[static_cast<std::size_t>(r) * k + c] = q.get_num() * (l / q.get_den());
            }
            scale *= l;
        }
        Int det = exact_determinant(ints, k);
        total *= Rat(abs(det)) / scale;
        if (total == 0) return 0;
    }
    total.canonicalize();
    return total;
}

namespace {

bool cyclic_on_face(const Graph& g, const std::vector<int>& face, const std::array<int, 4>& q) {
    std::array<int, 4> at{-1, -1, -1, -1};
    for (std::size_t k = 0; k < face.size(); ++k) {
        int v = tail(g, face[k]);
        for (int s = 0; s < 4; ++s)
            if (v == q[s] && at[s] < 0) at[s] = static_cast<int>(k);
    }
    for (int s = 0; s < 4; ++s)
        if (at[s] < 0) return false;
    std::array<int, 4> ord{0, 1, 2, 3};
    std::sort(ord.begin(), ord.end(), [&](int l, int r) { return at[l] < at[r]; });
    auto is_rotation = [&](std::array<int, 4> want) {
        for (int r = 0; r < 4; ++r) {
            bool ok = true;
            for (int s = 0; s < 4; ++s) ok = ok && ord[s] == want[(s + r) % 4];
            if (ok) return true;
        }
        return false;
    };
    return is_rotation({0, 1, 2, 3}) || is_rotation({3, 2, 1, 0});
}

Counter default_counter(const Counter& c) {
    if (c) return c;
    return [](const Graph& g) { return count_fkt(g); };
}

} // namespace

bool kuo_vertices_valid(const Graph& g, Point u, Point v, Point w, Point t) {
    std::array<int, 4> q{g.index_of(u), g.index_of(v), g.index_of(w), g.index_of(t)};
    for (int s = 0; s < 4; ++s)
        if (q[s] < 0) return false;
    if (color(u) != color(w) || color(v) != color(t) || color(u) == color(v)) return false;
    if (u == w || v == t) return false;
    FaceSet fs = compute_faces(g);
    for (const auto& face : fs.faces)
        if (cyclic_on_face(g, face, q)) return true;
    return false;
}

KuoReport kuo_check(const Graph& g, Point u, Point v, Point w, Point t, const Counter& count) {
    if (!g.balanced()) throw Error(ErrorCode::BadVertexSelection, "graph is not balanced");
    if (!kuo_vertices_valid(g, u, v, w, t))
        throw Error(ErrorCode::BadVertexSelection, "vertices are not class-alternating in cyclic order on a face");
    Counter m = default_counter(count);
    KuoReport rep;
    rep.counts = {m(g), m(g.without({u, v, w, t})), m(g.without({u, v})), m(g.without({w, t})),
                  m(g.without({t, u})), m(g.without({v, w}))};
    rep.lhs = rep.counts[0] * rep.counts[1];
    rep.rhs = rep.counts[2] * rep.counts[3] + rep.counts[4] * rep.counts[5];
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

SplitReport split_check(const Graph& g, const std::vector<Point>& h_vertices, const Counter& count) {
    std::vector<char> in_h(g.vertices.size(), 0);
    for (Point p : h_vertices) {
        int i = g.index_of(p);
        if (i < 0) throw Error(ErrorCode::ConditionsViolated, "H contains a vertex outside G");
        in_h[i] = 1;
    }
    SplitReport rep;
    int cls[2] = {0, 0};
    bool crosses[2] = {false, false};  // an H-vertex of this class touches G-H
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (in_h[v]) ++cls[color(g.vertices[v])];
    for (auto [i, j] : g.edges) {
        if (in_h[i] == in_h[j]) continue;
        int hv = in_h[i] ? i : j;
        crosses[color(g.vertices[hv])] = true;
    }
    rep.separating = !crosses[0] || !crosses[1];
    rep.balancing = cls[0] == cls[1];
    if (!rep.separating) throw Error(ErrorCode::ConditionsViolated, "separating condition fails");
    if (!rep.balancing) throw Error(ErrorCode::ConditionsViolated, "balancing condition fails");
    Counter m = default_counter(count);
    std::vector<Point> h, rest;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) (in_h[v] ? h : rest).push_back(g.vertices[v]);
    rep.m_g = m(g);
    rep.m_h = m(g.induced(h));
    rep.m_rest = m(g.induced(rest));
    rep.equal = rep.m_g == rep.m_h * rep.m_rest;
    return rep;
}

} // namespace aztec

#include "kix/corpus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

#include "kix/surgery.hpp"

namespace kix {

std::optional<std::vector<std::vector<int>>> find_planar_embedding(
    int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> incident(n);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        incident[edges[e].first].push_back(e);
        incident[edges[e].second].push_back(e);
    }
    std::vector<int> flippable;
    for (int v = 0; v < n; ++v) {
        if (incident[v].size() > 3) return std::nullopt;
        if (incident[v].size() == 3) flippable.push_back(v);
    }
    if (flippable.size() > 30) throw Error(ErrorCode::SizeLimit, "embedding search too large");
    const std::uint64_t total = 1ull << flippable.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<std::vector<int>> rot = incident;
        for (std::size_t i = 0; i < flippable.size(); ++i)
            if (mask & (1ull << i)) std::swap(rot[flippable[i]][1], rot[flippable[i]][2]);
        try {
            PlaneMultigraph::build(n, edges, rot);
            return rot;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NonPlanarEmbedding) throw;
        }
    }
    return std::nullopt;
}

std::optional<PlaneMultigraph> embed(int n, const std::vector<std::pair<int, int>>& edges) {
    auto rot = find_planar_embedding(n, edges);
    if (!rot) return std::nullopt;
    return PlaneMultigraph::build(n, edges, *rot);
}

PlaneMultigraph graph_from_faces(int n, const std::vector<std::vector<int>>& faces) {
    std::map<std::pair<int, int>, int> edge_of;
    std::vector<std::pair<int, int>> edges;
    auto edge_key = [](int a, int b) {
        return std::pair<int, int>(std::min(a, b), std::max(a, b));
    };
    for (const auto& f : faces)
        for (std::size_t i = 0; i < f.size(); ++i) {
            auto key = edge_key(f[i], f[(i + 1) % f.size()]);
            if (!edge_of.count(key)) {
                edge_of[key] = static_cast<int>(edges.size());
                edges.push_back(key);
            }
        }
    // Orient faces consistently: BFS over the face-adjacency forced by shared
    // edges, flipping so each edge is traversed once in each direction.
    std::vector<std::vector<int>> oriented(faces.size());
    std::vector<int> state(faces.size(), 0);  // 0 unvisited, 1 as-given, 2 reversed
    std::map<std::pair<int, int>, std::vector<int>> faces_at_edge;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi)
        for (std::size_t i = 0; i < faces[fi].size(); ++i)
            faces_at_edge[edge_key(faces[fi][i], faces[fi][(i + 1) % faces[fi].size()])]
                .push_back(fi);
    auto directed_uses = [&](int fi, int a, int b) {
        // Does face fi (in its chosen orientation) traverse a->b?
        const std::vector<int>& f = oriented[fi];
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i] == a && f[(i + 1) % f.size()] == b) return true;
        return false;
    };
    for (int root = 0; root < static_cast<int>(faces.size()); ++root) {
        if (state[root]) continue;
        state[root] = 1;
        oriented[root] = faces[root];
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int fi = stack.back();
            stack.pop_back();
            const std::vector<int>& f = oriented[fi];
            for (std::size_t i = 0; i < f.size(); ++i) {
                int a = f[i], b = f[(i + 1) % f.size()];
                for (int gj : faces_at_edge[edge_key(a, b)]) {
                    if (gj == fi) continue;
                    if (!state[gj]) {
                        oriented[gj] = faces[gj];
                        state[gj] = 1;
                        if (directed_uses(gj, a, b)) {
                            std::reverse(oriented[gj].begin(), oriented[gj].end());
                            state[gj] = 2;
                        }
                        stack.push_back(gj);
                    } else if (directed_uses(gj, a, b)) {
                        throw Error(ErrorCode::InvalidInput, "face list is not orientable");
                    }
                }
            }
        }
    }
    // Rotation at v: the face corner arriving via edge (p,v) departs via the
    // predecessor, so each corner (p -> v -> s) forces edge(vs) right before
    // edge(pv) in the rotation.
    std::vector<std::vector<int>> rot(n);
    std::vector<std::map<int, int>> succ(n);  // succ[v][before] = after
    for (const auto& f : oriented)
        for (std::size_t i = 0; i < f.size(); ++i) {
            int p = f[i], v = f[(i + 1) % f.size()], s = f[(i + 2) % f.size()];
            succ[v][edge_of[edge_key(v, s)]] = edge_of[edge_key(p, v)];
        }
    for (int v = 0; v < n; ++v) {
        if (succ[v].empty()) continue;
        int start = succ[v].begin()->first;
        int cur = start;
        do {
            rot[v].push_back(cur);
            cur = succ[v].at(cur);
        } while (cur != start && rot[v].size() <= succ[v].size());
    }
    return PlaneMultigraph::build(n, edges, rot);
}

namespace {

// --- exhaustive generation: grow by one vertex, dedup up to isomorphism ---

struct SmallGraph {
    int n = 0;
    std::vector<std::uint16_t> adj;  // bitmask rows

    int degree(int v) const { return __builtin_popcount(adj[v]); }
    bool has_edge(int a, int b) const { return adj[a] & (1u << b); }
    void add_edge(int a, int b) {
        adj[a] |= 1u << b;
        adj[b] |= 1u << a;
    }
    int edge_count() const {
        int m = 0;
        for (int v = 0; v < n; ++v) m += degree(v);
        return m / 2;
    }
};

// Invariant key for bucketing candidates before exact isomorphism tests.
std::vector<int> invariant_key(const SmallGraph& g) {
    std::vector<int> key{g.n, g.edge_count()};
    std::vector<std::vector<int>> per_vertex;
    int triangles = 0;
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> nd;
        for (int w = 0; w < g.n; ++w)
            if (g.has_edge(v, w)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        nd.insert(nd.begin(), g.degree(v));
        per_vertex.push_back(nd);
        for (int a = 0; a < g.n; ++a)
            for (int b = a + 1; b < g.n; ++b)
                if (g.has_edge(v, a) && g.has_edge(v, b) && g.has_edge(a, b)) ++triangles;
    }
    std::sort(per_vertex.begin(), per_vertex.end());
    key.push_back(triangles);
    for (const auto& pv : per_vertex) {
        key.push_back(-1);
        key.insert(key.end(), pv.begin(), pv.end());
    }
    return key;
}

bool isomorphic(const SmallGraph& a, const SmallGraph& b) {
    if (a.n != b.n) return false;
    std::vector<int> map_ab(a.n, -1), used(b.n, 0);
    auto dfs = [&](auto&& self, int v) -> bool {
        if (v == a.n) return true;
        for (int w = 0; w < b.n; ++w) {
            if (used[w] || a.degree(v) != b.degree(w)) continue;
            bool ok = true;
            for (int p = 0; p < v && ok; ++p)
                if (a.has_edge(v, p) != b.has_edge(w, map_ab[p])) ok = false;
            if (!ok) continue;
            map_ab[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            used[w] = 0;
            map_ab[v] = -1;
        }
        return false;
    };
    return dfs(dfs, 0);
}

bool small_connected(const SmallGraph& g) {
    if (g.n == 0) return false;
    std::vector<int> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < g.n; ++w)
            if (g.has_edge(v, w) && !seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.n;
}

class IsoSet {
  public:
    // Returns true when the graph was new.
    bool insert(const SmallGraph& g) {
        auto& bucket = buckets_[invariant_key(g)];
        for (const SmallGraph& h : bucket)
            if (isomorphic(g, h)) return false;
        bucket.push_back(g);
        order_.push_back(g);
        return true;
    }
    const std::vector<SmallGraph>& all() const { return order_; }

  private:
    std::map<std::vector<int>, std::vector<SmallGraph>> buckets_;
    std::vector<SmallGraph> order_;
};

}  // namespace

std::vector<PlaneMultigraph> exhaustive_corpus(int max_vertices, int* dropped) {
    if (max_vertices < 1 || max_vertices > 14)
        throw Error(ErrorCode::SizeLimit, "exhaustive mode supports 1..14 vertices");
    if (dropped) *dropped = 0;
    std::vector<PlaneMultigraph> out;
    // Level sets of all subcubic simple graphs up to isomorphism, including
    // disconnected ones: every graph on k vertices is some level-(k-1) graph
    // plus one vertex attached to <= 3 of its low-degree vertices.
    std::vector<SmallGraph> level{{1, {0}}};
    auto emit_level = [&](const std::vector<SmallGraph>& graphs) {
        for (const SmallGraph& g : graphs) {
            if (!small_connected(g)) continue;
            std::vector<std::pair<int, int>> edges;
            for (int v = 0; v < g.n; ++v)
                for (int w = v + 1; w < g.n; ++w)
                    if (g.has_edge(v, w)) edges.emplace_back(v, w);
            if (auto planar = embed(g.n, edges))
                out.push_back(std::move(*planar));
            else if (dropped)
                ++*dropped;
        }
    };
    emit_level(level);
    for (int k = 2; k <= max_vertices; ++k) {
        IsoSet next;
        for (const SmallGraph& g : level) {
            std::vector<int> low;
            for (int v = 0; v < g.n; ++v)
                if (g.degree(v) <= 2) low.push_back(v);
            const int nl = static_cast<int>(low.size());
            // All attachment subsets of size 0..3.
            std::vector<std::vector<int>> subsets{{}};
            for (int i = 0; i < nl; ++i) {
                subsets.push_back({low[i]});
                for (int j = i + 1; j < nl; ++j) {
                    subsets.push_back({low[i], low[j]});
                    for (int l = j + 1; l < nl; ++l) subsets.push_back({low[i], low[j], low[l]});
                }
            }
            for (const auto& subset : subsets) {
                SmallGraph h;
                h.n = g.n + 1;
                h.adj = g.adj;
                h.adj.push_back(0);
                for (int v : subset) h.add_edge(g.n, v);
                next.insert(h);
            }
        }
        level = next.all();
        emit_level(level);
    }
    return out;
}

PlaneMultigraph random_planar_multigraph(int max_vertices, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
    // Seed shape: a small cycle.
    int base = 3 + pick(std::max(1, std::min(4, max_vertices - 2)));
    base = std::min(base, std::max(3, max_vertices));
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rot(base);
    for (int i = 0; i < base; ++i) {
        edges.emplace_back(i, (i + 1) % base);
        rot[(i + 1) % base].push_back(i);
        rot[i].push_back(i);
    }
    PlaneMultigraph g = PlaneMultigraph::build(base, edges, rot);
    int ops = 2 * max_vertices;
    while (ops-- > 0) {
        int choice = pick(10);
        if (choice < 5 && g.vertex_count() < max_vertices) {
            // Subdivide a random edge.
            int e = pick(g.edge_count());
            int u = g.edge(e).u, v = g.edge(e).v;
            SurgeryGraph s(g);
            s.delete_edge(e);
            int w = s.add_vertex();
            s.insert_edges({{u, w}, {w, v}});
            g = s.finalize().graph;
        } else if (choice < 7 && g.vertex_count() < max_vertices) {
            // Pendant vertex at a low-degree vertex.
            std::vector<int> low;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.degree(v) <= 2) low.push_back(v);
            if (low.empty()) continue;
            int at = low[pick(static_cast<int>(low.size()))];
            SurgeryGraph s(g);
            int w = s.add_vertex();
            s.insert_edges({{w, at}});
            g = s.finalize().graph;
        } else {
            // New edge between two low-degree vertices (multiplicity <= 2).
            std::vector<int> low;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.degree(v) <= 2) low.push_back(v);
            if (low.size() < 2) continue;
            int a = low[pick(static_cast<int>(low.size()))];
            int b = low[pick(static_cast<int>(low.size()))];
            if (a == b || g.edges_between(a, b).size() >= 2) continue;
            SurgeryGraph s(g);
            if (!s.add_edge(a, b)) continue;
            g = s.finalize().graph;
        }
    }
    return g;
}

std::vector<PlaneMultigraph> random_corpus(int max_vertices, std::uint64_t seed, int count) {
    std::vector<PlaneMultigraph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back(random_planar_multigraph(max_vertices, seed * 1000003ull + i));
    return out;
}

}  // namespace kix

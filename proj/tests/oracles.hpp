#pragma once

// Independent brute-force oracles. These deliberately avoid the library's
// bitmask machinery: sets are std::set, checks walk the definitions.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "kix/coloring.hpp"
#include "kix/graph.hpp"

namespace kix::oracles {

inline std::set<int> used_set(const PlaneMultigraph& g, const std::vector<int>& color, int v) {
    std::set<int> s;
    for (int e : g.incident_edges(v))
        if (color[e] != 0) s.insert(color[e]);
    return s;
}

// The k-intersection definition, checked from scratch.
inline bool check_good_direct(const PlaneMultigraph& g, const std::vector<int>& color, int k) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident_edges(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                if (color[inc[i]] != 0 && color[inc[i]] == color[inc[j]]) return false;
    }
    for (const Edge& e : g.edges()) {
        std::set<int> su = used_set(g, color, e.u);
        std::set<int> sv = used_set(g, color, e.v);
        std::vector<int> inter;
        std::set_intersection(su.begin(), su.end(), sv.begin(), sv.end(),
                              std::back_inserter(inter));
        if (static_cast<int>(inter.size()) > k) return false;
    }
    return true;
}

// Strong edge-coloring: every color class an induced matching.
inline bool check_strong_direct(const PlaneMultigraph& g, const std::vector<int>& color) {
    for (const Edge& e : g.edges()) {
        for (const Edge& f : g.edges()) {
            if (e.id >= f.id || color[e.id] == 0 || color[e.id] != color[f.id]) continue;
            std::set<int> ends{e.u, e.v, f.u, f.v};
            if (ends.size() != 4) return false;
            for (int a : {e.u, e.v})
                for (int b : {f.u, f.v})
                    if (g.adjacent(a, b)) return false;
        }
    }
    return true;
}

inline bool check_proper_direct(const PlaneMultigraph& g, const std::vector<int>& color) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident_edges(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                if (color[inc[i]] != 0 && color[inc[i]] == color[inc[j]]) return false;
    }
    return true;
}

// Raw t^E enumeration (odometer, no pruning). Only for tiny edge counts.
inline std::optional<std::vector<int>> raw_enumerate_good(const PlaneMultigraph& g, int k, int t,
                                                          std::uint64_t* tried = nullptr) {
    const int m = g.edge_count();
    std::vector<int> color(m, 1);
    if (m == 0) {
        if (tried) *tried = 1;
        return color;
    }
    std::uint64_t count = 0;
    for (;;) {
        ++count;
        if (check_good_direct(g, color, k)) {
            if (tried) *tried = count;
            return color;
        }
        int i = 0;
        while (i < m && color[i] == t) color[i++] = 1;
        if (i == m) break;
        ++color[i];
    }
    if (tried) *tried = count;
    return std::nullopt;
}

// Complete search in edge-id order pruned only by the definition check; no
// ordering heuristics and no symmetry breaking. Independent of the solver.
template <typename Check>
inline bool definitional_exists(const PlaneMultigraph& g, int t, const Check& check,
                                std::vector<int>& color, int next_edge) {
    if (next_edge == g.edge_count()) return true;
    for (int c = 1; c <= t; ++c) {
        color[next_edge] = c;
        if (check(g, color) && definitional_exists(g, t, check, color, next_edge + 1))
            return true;
    }
    color[next_edge] = 0;
    return false;
}

inline std::optional<int> definitional_optimum_good(const PlaneMultigraph& g, int k, int max_t) {
    for (int t = g.edge_count() == 0 ? 0 : 1; t <= max_t; ++t) {
        std::vector<int> color(g.edge_count(), 0);
        auto check = [k](const PlaneMultigraph& gg, const std::vector<int>& cc) {
            return check_good_direct(gg, cc, k);
        };
        if (definitional_exists(g, t, check, color, 0)) return t;
    }
    return std::nullopt;
}

inline int strong_chromatic_index_oracle(const PlaneMultigraph& g) {
    for (int t = g.edge_count() == 0 ? 0 : 1;; ++t) {
        std::vector<int> color(g.edge_count(), 0);
        auto check = [](const PlaneMultigraph& gg, const std::vector<int>& cc) {
            return check_strong_direct(gg, cc);
        };
        if (definitional_exists(g, t, check, color, 0)) return t;
    }
}

inline int proper_chromatic_index_oracle(const PlaneMultigraph& g) {
    for (int t = g.edge_count() == 0 ? 0 : 1;; ++t) {
        std::vector<int> color(g.edge_count(), 0);
        auto check = [](const PlaneMultigraph& gg, const std::vector<int>& cc) {
            return check_proper_direct(gg, cc);
        };
        if (definitional_exists(g, t, check, color, 0)) return t;
    }
}

// All-pairs BFS oracle for distance checks.
inline std::vector<std::vector<int>> floyd_warshall(const PlaneMultigraph& g) {
    const int n = g.vertex_count();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
    return d;
}

}  // namespace kix::oracles

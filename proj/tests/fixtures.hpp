#pragma once

#include <utility>
#include <vector>

#include "kix/corpus.hpp"
#include "kix/graph.hpp"
#include "kix/surgery.hpp"

namespace kix::fixtures {

inline PlaneMultigraph from_edges(int n, std::vector<std::pair<int, int>> edges) {
    auto g = embed(n, edges);
    if (!g) throw Error(ErrorCode::NonPlanarEmbedding, "fixture is not planar");
    return *g;
}

inline PlaneMultigraph digon() { return from_edges(2, {{0, 1}, {0, 1}}); }

inline PlaneMultigraph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_edges(n, e);
}

inline PlaneMultigraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return from_edges(n, e);
}

inline PlaneMultigraph star3() { return from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }

// Edge order 01, 02, 03, 12, 13, 23 (matches the worked examples).
inline PlaneMultigraph k4() {
    return from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline PlaneMultigraph k4_subdivided() {
    // K4 with edge 2-3 subdivided by vertex 4.
    return from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {4, 3}});
}

inline PlaneMultigraph cube() {
    return graph_from_faces(8, {{0, 1, 2, 3},
                                {4, 5, 6, 7},
                                {0, 1, 5, 4},
                                {1, 2, 6, 5},
                                {2, 3, 7, 6},
                                {3, 0, 4, 7}});
}

inline PlaneMultigraph dodecahedron() {
    return graph_from_faces(20, {{0, 1, 2, 3, 4},
                                 {0, 1, 6, 10, 5},
                                 {1, 2, 7, 11, 6},
                                 {2, 3, 8, 12, 7},
                                 {3, 4, 9, 13, 8},
                                 {4, 0, 5, 14, 9},
                                 {5, 10, 15, 19, 14},
                                 {6, 11, 16, 15, 10},
                                 {7, 12, 17, 16, 11},
                                 {8, 13, 18, 17, 12},
                                 {9, 14, 19, 18, 13},
                                 {15, 16, 17, 18, 19}});
}

// Heptagon whose edges 01, 23, 45 each gain an outside path of length four
// (three 5-faces), plus a pendant at vertex 6 keeping every heptagon vertex
// at degree 3. The inner 7-face then touches exactly three 5-faces.
inline PlaneMultigraph heptagon_with_three_5faces() {
    std::vector<std::vector<int>> faces;
    faces.push_back({0, 1, 2, 3, 4, 5, 6});              // the 7-face
    faces.push_back({0, 7, 8, 9, 1});                    // 5-face over edge 01
    faces.push_back({2, 10, 11, 12, 3});                 // 5-face over edge 23
    faces.push_back({4, 13, 14, 15, 5});                 // 5-face over edge 45
    faces.push_back({0, 6, 16, 6, 5, 15, 14, 13, 4, 3, 12, 11, 10, 2, 1, 9, 8, 7});  // outer
    return graph_from_faces(17, faces);
}

inline std::vector<std::pair<int, int>> petersen_edges() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, 5 + (i + 2) % 5);
    }
    return e;
}

// Unvalidated embedded graph; intermediate duals exceed degree 3.
struct RawEmbedded {
    int n;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rot;
};

// Planar dual: one vertex per face, one edge per host edge, rotations read
// off the face walks.
inline RawEmbedded raw_dual(const PlaneMultigraph& g) {
    RawEmbedded out;
    out.n = static_cast<int>(g.faces().size());
    for (int e = 0; e < g.edge_count(); ++e)
        out.edges.emplace_back(g.face_of(Dart{e, 0}), g.face_of(Dart{e, 1}));
    out.rot.resize(out.n);
    for (int f = 0; f < out.n; ++f)
        for (const Dart& d : g.faces()[f].darts()) out.rot[f].push_back(d.edge);
    return out;
}

// Vertex truncation: one vertex per dart; each host edge keeps a connecting
// edge, and the darts leaving a host vertex close into a polygon. The result
// is cubic, so it builds as a PlaneMultigraph.
inline PlaneMultigraph truncate_raw(const RawEmbedded& g) {
    const int m = static_cast<int>(g.edges.size());
    // Dart leaving v along edge e gets id 2e + (0 if v is the edge's first
    // endpoint).
    auto leaving = [&](int v, int e) { return 2 * e + (g.edges[e].first == v ? 0 : 1); };
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < m; ++e) edges.emplace_back(2 * e, 2 * e + 1);
    std::vector<std::vector<int>> corner_edge_at(g.n);
    for (int v = 0; v < g.n; ++v) {
        const auto& rotv = g.rot[v];
        const int d = static_cast<int>(rotv.size());
        for (int i = 0; i < d; ++i) {
            corner_edge_at[v].push_back(static_cast<int>(edges.size()));
            edges.emplace_back(leaving(v, rotv[i]), leaving(v, rotv[(i + 1) % d]));
        }
    }
    auto assemble = [&](bool flip) {
        std::vector<std::vector<int>> rot(2 * m);
        for (int v = 0; v < g.n; ++v) {
            const auto& rotv = g.rot[v];
            const int d = static_cast<int>(rotv.size());
            for (int i = 0; i < d; ++i) {
                int dart = leaving(v, rotv[i]);
                int prev = corner_edge_at[v][(i + d - 1) % d];
                int next = corner_edge_at[v][i];
                if (flip)
                    rot[dart] = {rotv[i], next, prev};
                else
                    rot[dart] = {rotv[i], prev, next};
            }
        }
        return PlaneMultigraph::build(2 * m, edges, rot);
    };
    try {
        return assemble(false);
    } catch (const Error&) {
        return assemble(true);
    }
}

// Truncated icosahedron: 12 pentagons, 20 hexagons, no two pentagons share
// an edge. The smallest graph here whose first configuration is C15.
inline PlaneMultigraph truncated_icosahedron() { return truncate_raw(raw_dual(dodecahedron())); }

// Drops one edge shared by two hexagons (C11: its endpoints become
// 2-vertices that still lie on intact pentagons).
inline PlaneMultigraph trunc_icosa_minus_hex_hex_edge() {
    PlaneMultigraph t = truncated_icosahedron();
    for (int e = 0; e < t.edge_count(); ++e) {
        if (t.faces()[t.face_of(Dart{e, 0})].length() == 6 &&
            t.faces()[t.face_of(Dart{e, 1})].length() == 6) {
            SurgeryGraph s(t);
            s.delete_edge(e);
            return s.finalize().graph;
        }
    }
    throw Error(ErrorCode::InvalidInput, "no hexagon-hexagon edge found");
}

// Subdivides one hexagon-hexagon edge (C13: a 2-vertex on two 7-faces).
inline PlaneMultigraph trunc_icosa_subdivided() {
    PlaneMultigraph t = truncated_icosahedron();
    for (int e = 0; e < t.edge_count(); ++e) {
        if (t.faces()[t.face_of(Dart{e, 0})].length() == 6 &&
            t.faces()[t.face_of(Dart{e, 1})].length() == 6) {
            int u = t.edge(e).u, v = t.edge(e).v;
            SurgeryGraph s(t);
            s.delete_edge(e);
            int w = s.add_vertex();
            s.insert_edges({{u, w}, {w, v}});
            return s.finalize().graph;
        }
    }
    throw Error(ErrorCode::InvalidInput, "no hexagon-hexagon edge found");
}

// Dodecahedron minus one edge (C10: two 2-vertices at boundary distance 4
// on the merged 8-face).
inline PlaneMultigraph dodecahedron_minus_edge() {
    PlaneMultigraph d = dodecahedron();
    SurgeryGraph s(d);
    s.delete_edge(0);
    return s.finalize().graph;
}

// Dodecahedron with one edge subdivided (C12: a 2-vertex on two 6-faces).
inline PlaneMultigraph dodecahedron_subdivided() {
    PlaneMultigraph d = dodecahedron();
    int u = d.edge(0).u, v = d.edge(0).v;
    SurgeryGraph s(d);
    s.delete_edge(0);
    int w = s.add_vertex();
    s.insert_edges({{u, w}, {w, v}});
    return s.finalize().graph;
}

}  // namespace kix::fixtures

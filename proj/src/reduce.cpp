#include "kix/reduce.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

#include "kix/discharge.hpp"
#include "kix/solver.hpp"
#include "kix/surgery.hpp"

namespace kix {

const char* config_kind_name(ConfigKind kind) {
    switch (kind) {
        case ConfigKind::C1ParallelPair: return "C1";
        case ConfigKind::C2LowDegreeVertex: return "C2";
        case ConfigKind::C3CutEdge: return "C3";
        case ConfigKind::C4Matching2EdgeCut: return "C4";
        case ConfigKind::C5Triangle: return "C5";
        case ConfigKind::C6Close2Vertices: return "C6";
        case ConfigKind::C7SeparatingCycle: return "C7";
        case ConfigKind::C8FourCycle: return "C8";
        case ConfigKind::C9Distance3TwoVertices: return "C9";
        case ConfigKind::C10BoundaryClose2Vertices: return "C10";
        case ConfigKind::C11TwoVertexOn5Cycle: return "C11";
        case ConfigKind::C12TwoVertexOn6Cycle: return "C12";
        case ConfigKind::C13TwoVertexOn7Face: return "C13";
        case ConfigKind::C14Adjacent55Faces: return "C14";
        case ConfigKind::C15Adjacent56Faces: return "C15";
    }
    return "?";
}

std::string Configuration::describe() const {
    std::ostringstream os;
    os << config_kind_name(kind);
    if (!vertices.empty()) {
        os << " vertices";
        for (int v : vertices) os << " " << v;
    }
    if (!edges.empty()) {
        os << " edges";
        for (int e : edges) os << " " << e;
    }
    if (face >= 0) os << " face " << face;
    if (face2 >= 0) os << " face " << face2;
    return os.str();
}

namespace {

int edge_id(const PlaneMultigraph& g, int a, int b) {
    std::vector<int> ids = g.edges_between(a, b);
    if (ids.empty())
        throw Error(ErrorCode::BindingInvalid,
                    "no edge between " + std::to_string(a) + " and " + std::to_string(b));
    return ids.front();
}

// The neighbor of x other than a and b; x must be a 3-vertex in a simple
// graph for this to be well defined.
int third_neighbor(const PlaneMultigraph& g, int x, int a, int b) {
    if (g.degree(x) != 3)
        throw Error(ErrorCode::BindingInvalid, "vertex " + std::to_string(x) + " is not a 3-vertex");
    for (int e : g.incident_edges(x)) {
        int y = g.edge(e).other(x);
        if (y != a && y != b) return y;
    }
    throw Error(ErrorCode::BindingInvalid,
                "vertex " + std::to_string(x) + " has no neighbor outside the pattern");
}

std::vector<int> cycle_edge_ids(const PlaneMultigraph& g, const std::vector<int>& cyc) {
    std::vector<int> out;
    for (std::size_t i = 0; i < cyc.size(); ++i)
        out.push_back(edge_id(g, cyc[i], cyc[(i + 1) % cyc.size()]));
    return out;
}

// --- per-kind finders, each returning the lexicographically least binding ---

std::optional<Configuration> find_c1(const PlaneMultigraph& g) {
    auto pairs = g.parallel_pairs();
    if (pairs.empty()) return std::nullopt;
    Configuration c{ConfigKind::C1ParallelPair, {}, {pairs[0].first, pairs[0].second}};
    const Edge& e = g.edge(pairs[0].first);
    c.vertices = {std::min(e.u, e.v), std::max(e.u, e.v)};
    return c;
}

std::optional<Configuration> find_c2(const PlaneMultigraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) <= 1) return Configuration{ConfigKind::C2LowDegreeVertex, {v}, {}};
    return std::nullopt;
}

std::optional<Configuration> find_c3(const PlaneMultigraph& g) {
    auto bridges = g.cut_edges();
    if (bridges.empty()) return std::nullopt;
    return Configuration{ConfigKind::C3CutEdge, {}, {bridges[0]}};
}

std::optional<Configuration> find_c4(const PlaneMultigraph& g) {
    auto cuts = g.matching_2_edge_cuts();
    if (cuts.empty()) return std::nullopt;
    return Configuration{ConfigKind::C4Matching2EdgeCut, {}, {cuts[0].first, cuts[0].second}};
}

std::optional<Configuration> find_c5(const PlaneMultigraph& g) {
    auto tris = g.cycles_of_length(3);
    if (tris.empty()) return std::nullopt;
    return Configuration{ConfigKind::C5Triangle, tris[0], {}};
}

std::optional<Configuration> find_c6(const PlaneMultigraph& g) {
    auto twos = g.two_vertices();
    for (std::size_t i = 0; i < twos.size(); ++i)
        for (std::size_t j = i + 1; j < twos.size(); ++j)
            if (g.distance(twos[i], twos[j]) <= 2)
                return Configuration{ConfigKind::C6Close2Vertices, {twos[i], twos[j]}, {}};
    return std::nullopt;
}

std::optional<Configuration> find_c7(const PlaneMultigraph& g) {
    auto cycles = g.separating_cycles(4, 5);
    if (cycles.empty()) return std::nullopt;
    return Configuration{ConfigKind::C7SeparatingCycle, cycles[0], {}};
}

std::optional<Configuration> find_c8(const PlaneMultigraph& g) {
    auto cycles = g.cycles_of_length(4);
    if (cycles.empty()) return std::nullopt;
    return Configuration{ConfigKind::C8FourCycle, cycles[0], {}};
}

// Deterministic shortest path: BFS from a over ascending neighbors, then walk
// back from b through the smallest predecessor at each level.
std::vector<int> least_shortest_path(const PlaneMultigraph& g, int a, int b) {
    std::vector<int> dist(g.vertex_count(), -1);
    dist[a] = 0;
    std::vector<int> frontier{a};
    while (!frontier.empty() && dist[b] == -1) {
        std::vector<int> next;
        for (int x : frontier)
            for (int y : g.neighbors(x))
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    next.push_back(y);
                }
        frontier = std::move(next);
    }
    std::vector<int> path{b};
    int cur = b;
    while (cur != a) {
        int best = -1;
        for (int y : g.neighbors(cur))
            if (dist[y] == dist[cur] - 1 && (best == -1 || y < best)) best = y;
        path.push_back(best);
        cur = best;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::optional<Configuration> find_c9(const PlaneMultigraph& g) {
    auto twos = g.two_vertices();
    for (std::size_t i = 0; i < twos.size(); ++i)
        for (std::size_t j = i + 1; j < twos.size(); ++j) {
            int a = twos[i], b = twos[j];
            if (g.distance(a, b) != 3) continue;
            std::vector<int> mid = least_shortest_path(g, a, b);  // a x2 x3 b
            // Path x0 x1 x2 x3 x4 x5 with x1 = a, x4 = b.
            int x0 = -1, x5 = -1;
            for (int y : g.neighbors(a))
                if (y != mid[1]) x0 = y;
            for (int y : g.neighbors(b))
                if (y != mid[2]) x5 = y;
            return Configuration{ConfigKind::C9Distance3TwoVertices,
                                 {x0, a, mid[1], mid[2], b, x5},
                                 {}};
        }
    return std::nullopt;
}

std::optional<Configuration> find_c10(const PlaneMultigraph& g) {
    auto twos = g.two_vertices();
    for (std::size_t i = 0; i < twos.size(); ++i)
        for (std::size_t j = i + 1; j < twos.size(); ++j) {
            int a = twos[i], b = twos[j];
            for (int f = 0; f < static_cast<int>(g.faces().size()); ++f) {
                const FaceWalk& w = g.faces()[f];
                if (!w.contains_vertex(a) || !w.contains_vertex(b)) continue;
                int bd = w.boundary_distance(a, b);
                if (bd > 4) continue;
                const std::vector<int>& vs = w.vertices();
                const int len = w.length();
                for (int p = 0; p < len; ++p) {
                    if (vs[p] != a) continue;
                    for (int dir : {1, -1}) {
                        auto at = [&](int off) { return vs[((p + off * dir) % len + len) % len]; };
                        if (at(bd) != b) continue;
                        Configuration c{ConfigKind::C10BoundaryClose2Vertices, {}, {}};
                        c.face = f;
                        for (int off = -1; off <= bd + 1; ++off) c.vertices.push_back(at(off));
                        return c;
                    }
                }
            }
        }
    return std::nullopt;
}

std::optional<Configuration> find_cycle_with_2vertex(const PlaneMultigraph& g, int len,
                                                     ConfigKind kind) {
    for (const std::vector<int>& cyc : g.cycles_of_length(len)) {
        int two = -1;
        for (int v : cyc)
            if (g.degree(v) == 2 && (two == -1 || v < two)) two = v;
        if (two == -1) continue;
        // Rotate so the 2-vertex is first.
        std::vector<int> rot;
        auto it = std::find(cyc.begin(), cyc.end(), two);
        rot.insert(rot.end(), it, cyc.end());
        rot.insert(rot.end(), cyc.begin(), it);
        return Configuration{kind, rot, {}};
    }
    return std::nullopt;
}

std::optional<Configuration> find_c13(const PlaneMultigraph& g) {
    for (int f = 0; f < static_cast<int>(g.faces().size()); ++f) {
        const FaceWalk& w = g.faces()[f];
        if (w.length() != 7) continue;
        const std::vector<int>& vs = w.vertices();
        int two = -1;
        for (int v : vs)
            if (g.degree(v) == 2 && (two == -1 || v < two)) two = v;
        if (two == -1) continue;
        std::vector<int> rot;
        auto it = std::find(vs.begin(), vs.end(), two);
        rot.insert(rot.end(), it, vs.end());
        rot.insert(rot.end(), vs.begin(), it);
        Configuration c{ConfigKind::C13TwoVertexOn7Face, rot, {}};
        c.face = f;
        return c;
    }
    return std::nullopt;
}

std::optional<Configuration> find_adjacent_faces(const PlaneMultigraph& g, int len1, int len2,
                                                 ConfigKind kind) {
    for (int e = 0; e < g.edge_count(); ++e) {
        int f1 = g.face_of(Dart{e, 0});
        int f2 = g.face_of(Dart{e, 1});
        if (f1 == f2) continue;
        int l1 = g.faces()[f1].length();
        int l2 = g.faces()[f2].length();
        if (!((l1 == len1 && l2 == len2) || (l1 == len2 && l2 == len1))) continue;
        if (l1 != len1) std::swap(f1, f2);
        Configuration c{kind, {}, {e}};
        c.face = f1;
        c.face2 = f2;
        return c;
    }
    return std::nullopt;
}

using Finder = std::optional<Configuration> (*)(const PlaneMultigraph&);

std::optional<Configuration> find_c11(const PlaneMultigraph& g) {
    return find_cycle_with_2vertex(g, 5, ConfigKind::C11TwoVertexOn5Cycle);
}
std::optional<Configuration> find_c12(const PlaneMultigraph& g) {
    return find_cycle_with_2vertex(g, 6, ConfigKind::C12TwoVertexOn6Cycle);
}
std::optional<Configuration> find_c14(const PlaneMultigraph& g) {
    return find_adjacent_faces(g, 5, 5, ConfigKind::C14Adjacent55Faces);
}
std::optional<Configuration> find_c15(const PlaneMultigraph& g) {
    return find_adjacent_faces(g, 5, 6, ConfigKind::C15Adjacent56Faces);
}

}  // namespace

std::optional<Configuration> try_find_configuration(const PlaneMultigraph& g) {
    static constexpr std::array<Finder, 15> finders = {
        find_c1, find_c2, find_c3, find_c4,  find_c5,  find_c6,  find_c7, find_c8,
        find_c9, find_c10, find_c11, find_c12, find_c13, find_c14, find_c15};
    for (Finder f : finders)
        if (auto c = f(g)) return c;
    return std::nullopt;
}

Configuration find_configuration(const PlaneMultigraph& g) {
    if (auto c = try_find_configuration(g)) return *c;
    std::ostringstream os;
    os << "no configuration in a valid graph (paper-refuting!); discharging report: ";
    os << discharge_summary(g);
    throw Error(ErrorCode::NoConfigurationFound, os.str());
}

namespace {

// Assembles a ReductionStep from a finished surgery, matching inserted edges
// (in insertion order) with the host edges that inherit their colors.
ReductionStep finish_step(SurgeryGraph& s,
                          const std::vector<std::vector<int>>& lift_targets,
                          std::vector<int> uncolored, std::vector<std::string> notes) {
    SurgeryGraph::Result res = s.finalize();
    if (res.new_edges.size() != lift_targets.size())
        throw Error(ErrorCode::BindingInvalid, "lift class count mismatch");
    ReductionStep step;
    step.reduced = std::move(res.graph);
    step.shared = std::move(res.shared_edges);
    for (std::size_t i = 0; i < lift_targets.size(); ++i)
        step.lift_classes.emplace_back(res.new_edges[i], lift_targets[i]);
    std::sort(uncolored.begin(), uncolored.end());
    step.uncolored = std::move(uncolored);
    step.notes = std::move(notes);
    return step;
}

ReductionStep reduce_c1(const PlaneMultigraph& g, const Configuration& c) {
    int e1 = c.edges.at(0), e2 = c.edges.at(1);
    int u = g.edge(e1).u, v = g.edge(e1).v;
    std::vector<std::string> notes;
    // Common neighbor: drop both parallel edges and recolor them locally.
    std::vector<int> nu = g.neighbors(u), nv = g.neighbors(v);
    std::vector<int> common;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                          std::back_inserter(common));
    common.erase(std::remove_if(common.begin(), common.end(),
                                [&](int w) { return w == u || w == v; }),
                 common.end());
    if (!common.empty()) {
        SurgeryGraph s(g);
        s.delete_edge(e1);
        s.delete_edge(e2);
        return finish_step(s, {}, {e1, e2}, std::move(notes));
    }
    // Otherwise slide one endpoint: G' = G - u + u'v (Lemma of record uses
    // the endpoint that has a third neighbor).
    int a = u, b = v;
    int third_edge = -1;
    for (int swap_round = 0; swap_round < 2 && third_edge == -1; ++swap_round) {
        for (int e : g.incident_edges(a))
            if (e != e1 && e != e2) third_edge = e;
        if (third_edge == -1) std::swap(a, b);
    }
    if (third_edge == -1)
        throw Error(ErrorCode::BindingInvalid, "isolated digon; exact base case applies");
    int a_third = g.edge(third_edge).other(a);
    SurgeryGraph s(g);
    s.delete_vertex(a);
    s.insert_edges({{a_third, b}});
    return finish_step(s, {{third_edge}}, {e1, e2}, std::move(notes));
}

ReductionStep reduce_c2(const PlaneMultigraph& g, const Configuration& c) {
    int v = c.vertices.at(0);
    if (g.degree(v) > 1) throw Error(ErrorCode::BindingInvalid, "vertex degree exceeds 1");
    std::vector<int> uncolored = g.incident_edges(v);
    SurgeryGraph s(g);
    s.delete_vertex(v);
    return finish_step(s, {}, std::move(uncolored), {});
}

ReductionStep reduce_c5(const PlaneMultigraph& g, const Configuration& c) {
    std::vector<int> tri = c.vertices;
    if (tri.size() != 3) throw Error(ErrorCode::BindingInvalid, "triangle needs 3 vertices");
    for (int i = 0; i < 3; ++i)
        if (!g.adjacent(tri[i], tri[(i + 1) % 3]))
            throw Error(ErrorCode::BindingInvalid, "not a triangle");
    // A 2-vertex on the triangle: drop it and recolor its two edges.
    for (int i = 0; i < 3; ++i) {
        if (g.degree(tri[i]) == 2) {
            int x = tri[i], y = tri[(i + 1) % 3], z = tri[(i + 2) % 3];
            SurgeryGraph s(g);
            s.delete_vertex(x);
            return finish_step(s, {}, {edge_id(g, x, y), edge_id(g, x, z)}, {});
        }
    }
    int x = tri[0], y = tri[1], z = tri[2];
    int x1 = third_neighbor(g, x, y, z);
    int y1 = third_neighbor(g, y, x, z);
    int z1 = third_neighbor(g, z, x, y);
    if (x1 == y1 && y1 == z1)
        throw Error(ErrorCode::BindingInvalid, "triangle closes K4; exact base case applies");
    // Order so the two dangling neighbors the construction joins differ.
    if (y1 == z1) {
        if (x1 != z1) {
            std::swap(x, y);
            std::swap(x1, y1);
        } else {
            std::swap(x, z);
            std::swap(x1, z1);
        }
    }
    std::vector<std::string> notes;
    if (g.adjacent(y1, z1))
        notes.push_back("triangle reduction adds a parallel edge " + std::to_string(y1) + "-" +
                        std::to_string(z1));
    int e_yy1 = edge_id(g, y, y1), e_zz1 = edge_id(g, z, z1), e_xx1 = edge_id(g, x, x1);
    std::vector<int> uncolored{edge_id(g, x, y), edge_id(g, x, z), edge_id(g, y, z), e_xx1};
    SurgeryGraph s(g);
    s.delete_vertex(x);
    s.delete_vertex(y);
    s.delete_vertex(z);
    s.insert_edges({{y1, z1}});
    return finish_step(s, {{e_yy1, e_zz1}}, std::move(uncolored), std::move(notes));
}

ReductionStep reduce_c6(const PlaneMultigraph& g, const Configuration& c) {
    int a = c.vertices.at(0), b = c.vertices.at(1);
    if (g.degree(a) != 2 || g.degree(b) != 2)
        throw Error(ErrorCode::BindingInvalid, "binding vertices must be 2-vertices");
    if (g.adjacent(a, b)) {
        SurgeryGraph s(g);
        int e = edge_id(g, a, b);
        s.delete_edge(e);
        return finish_step(s, {}, {e}, {});
    }
    std::vector<int> na = g.neighbors(a), nb = g.neighbors(b);
    std::vector<int> common;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                          std::back_inserter(common));
    if (common.empty()) throw Error(ErrorCode::BindingInvalid, "2-vertices not at distance 2");
    int m = common.front();
    if (g.degree(m) == 2) {
        // m is itself a 2-vertex adjacent to a: the adjacent-pair case applies.
        SurgeryGraph s(g);
        int e = edge_id(g, a, m);
        s.delete_edge(e);
        return finish_step(s, {}, {e}, {});
    }
    int z = third_neighbor(g, m, a, b);
    SurgeryGraph s(g);
    if (g.degree(z) == 2) {
        std::vector<int> uncolored = g.incident_edges(m);
        s.delete_vertex(m);
        return finish_step(s, {}, std::move(uncolored), {});
    }
    int e_am = edge_id(g, a, m), e_bm = edge_id(g, b, m);
    s.delete_edge(e_am);
    s.delete_edge(e_bm);
    return finish_step(s, {}, {e_am, e_bm}, {});
}

// Star reduction for a 4-cycle carrying a 2-vertex: remove the cycle, add a
// new hub adjacent to the three dangling neighbors.
ReductionStep star_reduce_4cycle(const PlaneMultigraph& g, std::vector<int> cyc,
                                 std::vector<std::string> notes) {
    int two = -1;
    for (int v : cyc)
        if (g.degree(v) == 2 && (two == -1 || v < two)) two = v;
    if (two == -1) throw Error(ErrorCode::BindingInvalid, "4-cycle has no 2-vertex");
    while (cyc.front() != two) std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
    int x1 = cyc[1], x2 = cyc[2], x3 = cyc[3];
    int y1 = third_neighbor(g, x1, cyc[0], x2);
    int y2 = third_neighbor(g, x2, x1, x3);
    int y3 = third_neighbor(g, x3, x2, cyc[0]);
    for (int y : {y1, y2, y3})
        if (y == cyc[0] || y == x1 || y == x2 || y == x3)
            throw Error(ErrorCode::BindingInvalid, "dangling neighbor lies on the 4-cycle");
    if (y1 == y3)
        notes.push_back("star reduction adds parallel edges at " + std::to_string(y1));
    int e1 = edge_id(g, x1, y1), e2 = edge_id(g, x2, y2), e3 = edge_id(g, x3, y3);
    std::vector<int> uncolored = cycle_edge_ids(g, cyc);
    SurgeryGraph s(g);
    for (int v : cyc) s.delete_vertex(v);
    int hub = s.add_vertex();
    s.insert_edges({{hub, y1}, {hub, y2}, {hub, y3}});
    return finish_step(s, {{e1}, {e2}, {e3}}, std::move(uncolored), std::move(notes));
}

ReductionStep reduce_c7(const PlaneMultigraph& g, const Configuration& c) {
    if (c.vertices.size() != 4 && c.vertices.size() != 5)
        throw Error(ErrorCode::BindingInvalid, "separating cycle must have length 4 or 5");
    if (g.cycle_is_face(c.vertices))
        throw Error(ErrorCode::BindingInvalid, "cycle is a face boundary, not separating");
    // A separating 4/5-cycle forces a 4-cycle with a 2-vertex somewhere in g
    // (two cut edges into the enclosed side meet at a 2-vertex); reduce that.
    for (const std::vector<int>& cyc : g.cycles_of_length(4)) {
        bool has_two = false;
        for (int v : cyc) has_two = has_two || g.degree(v) == 2;
        if (has_two)
            return star_reduce_4cycle(g, cyc,
                                      {"separating cycle routed to its inner 2-vertex 4-cycle"});
    }
    throw Error(ErrorCode::BindingInvalid,
                "separating cycle without a 2-vertex 4-cycle (paper-refuting)");
}

ReductionStep reduce_c8(const PlaneMultigraph& g, const Configuration& c) {
    std::vector<int> cyc = c.vertices;
    if (cyc.size() != 4) throw Error(ErrorCode::BindingInvalid, "need a 4-cycle");
    for (int i = 0; i < 4; ++i)
        if (!g.adjacent(cyc[i], cyc[(i + 1) % 4]))
            throw Error(ErrorCode::BindingInvalid, "not a 4-cycle");
    for (int v : cyc)
        if (g.degree(v) == 2) return star_reduce_4cycle(g, cyc, {});
    int y0 = third_neighbor(g, cyc[0], cyc[1], cyc[3]);
    int y1 = third_neighbor(g, cyc[1], cyc[0], cyc[2]);
    int y2 = third_neighbor(g, cyc[2], cyc[1], cyc[3]);
    int y3 = third_neighbor(g, cyc[3], cyc[2], cyc[0]);
    std::array<int, 4> ys{y0, y1, y2, y3};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (ys[i] == ys[j])
                throw Error(ErrorCode::BindingInvalid, "dangling neighbors of a 4-face coincide");
    std::vector<std::string> notes;
    if (g.adjacent(y0, y1) || g.adjacent(y2, y3))
        notes.push_back("4-cycle reduction adds a parallel edge");
    int e0 = edge_id(g, cyc[0], y0), e1 = edge_id(g, cyc[1], y1);
    int e2 = edge_id(g, cyc[2], y2), e3 = edge_id(g, cyc[3], y3);
    std::vector<int> uncolored = cycle_edge_ids(g, cyc);
    SurgeryGraph s(g);
    for (int v : cyc) s.delete_vertex(v);
    s.insert_edges({{y0, y1}, {y2, y3}});
    return finish_step(s, {{e0, e1}, {e2, e3}}, std::move(uncolored), std::move(notes));
}

ReductionStep reduce_c9(const PlaneMultigraph& g, const Configuration& c) {
    if (c.vertices.size() != 6) throw Error(ErrorCode::BindingInvalid, "need path x0..x5");
    int x1 = c.vertices[1], x2 = c.vertices[2], x3 = c.vertices[3], x4 = c.vertices[4];
    if (g.degree(x1) != 2 || g.degree(x4) != 2)
        throw Error(ErrorCode::BindingInvalid, "x1 and x4 must be 2-vertices");
    int y2 = third_neighbor(g, x2, x1, x3);
    int y3 = third_neighbor(g, x3, x2, x4);
    if (y2 == y3) throw Error(ErrorCode::BindingInvalid, "middle neighbors coincide");
    std::vector<std::string> notes;
    if (g.adjacent(y2, y3)) notes.push_back("distance-3 reduction adds a parallel edge");
    int e2 = edge_id(g, x2, y2), e3 = edge_id(g, x3, y3);
    std::vector<int> uncolored{edge_id(g, x1, x2), edge_id(g, x2, x3), edge_id(g, x3, x4)};
    SurgeryGraph s(g);
    s.delete_vertex(x2);
    s.delete_vertex(x3);
    s.insert_edges({{y2, y3}});
    return finish_step(s, {{e2, e3}}, std::move(uncolored), std::move(notes));
}

ReductionStep reduce_c10(const PlaneMultigraph& g, const Configuration& c) {
    if (c.vertices.size() != 7) throw Error(ErrorCode::BindingInvalid, "need path x0..x6");
    const std::vector<int>& x = c.vertices;
    if (g.degree(x[1]) != 2 || g.degree(x[5]) != 2)
        throw Error(ErrorCode::BindingInvalid, "x1 and x5 must be 2-vertices");
    int y2 = third_neighbor(g, x[2], x[1], x[3]);
    int y3 = third_neighbor(g, x[3], x[2], x[4]);
    int y4 = third_neighbor(g, x[4], x[3], x[5]);
    if (y2 == y3 || y3 == y4 || y2 == y4)
        throw Error(ErrorCode::BindingInvalid, "dangling neighbors coincide");
    if (x[0] == x[6] || g.adjacent(x[0], x[6]))
        throw Error(ErrorCode::BindingInvalid, "boundary path endpoints touch");
    int e2 = edge_id(g, x[2], y2), e3 = edge_id(g, x[3], y3), e4 = edge_id(g, x[4], y4);
    int e01 = edge_id(g, x[0], x[1]), e56 = edge_id(g, x[5], x[6]);
    std::vector<int> uncolored{edge_id(g, x[1], x[2]), edge_id(g, x[2], x[3]),
                               edge_id(g, x[3], x[4]), edge_id(g, x[4], x[5])};
    SurgeryGraph s(g);
    for (int i = 1; i <= 5; ++i) s.delete_vertex(x[i]);
    int hub = s.add_vertex();
    s.insert_edges({{hub, y2}, {hub, y3}, {hub, y4}, {x[0], x[6]}});
    return finish_step(s, {{e2}, {e3}, {e4}, {e01, e56}}, std::move(uncolored), {});
}

// Shared shape of the 5-/6-cycle and 7-face reductions: delete the cycle,
// join dangling neighbors in pairs; some pairs may be absent (6-cycle keeps
// x3's dangling edge uncolored).
ReductionStep reduce_cycle_with_pairs(const PlaneMultigraph& g, const std::vector<int>& cyc,
                                      const std::vector<std::pair<int, int>>& join_idx,
                                      const std::vector<int>& extra_uncolored_idx,
                                      bool require_face) {
    const int len = static_cast<int>(cyc.size());
    if (g.degree(cyc[0]) != 2)
        throw Error(ErrorCode::BindingInvalid, "x0 must be a 2-vertex");
    if (require_face && !g.cycle_is_face(cyc))
        throw Error(ErrorCode::BindingInvalid, "cycle is separating (earlier kinds apply)");
    std::vector<int> y(len, -1);
    for (int i = 1; i < len; ++i)
        y[i] = third_neighbor(g, cyc[i], cyc[(i - 1 + len) % len], cyc[(i + 1) % len]);
    std::vector<std::string> notes;
    for (int i = 1; i < len; ++i) {
        for (int j = i + 1; j < len; ++j)
            if (y[i] == y[j])
                throw Error(ErrorCode::BindingInvalid, "dangling neighbors coincide");
        for (int v : cyc)
            if (y[i] == v)
                throw Error(ErrorCode::BindingInvalid, "dangling neighbor on the cycle");
    }
    std::vector<std::vector<int>> lift_targets;
    std::vector<std::pair<int, int>> inserts;
    for (auto [i, j] : join_idx) {
        if (g.adjacent(y[i], y[j]))
            notes.push_back("cycle reduction adds a parallel edge " + std::to_string(y[i]) + "-" +
                            std::to_string(y[j]));
        inserts.emplace_back(y[i], y[j]);
        lift_targets.push_back({edge_id(g, cyc[i], y[i]), edge_id(g, cyc[j], y[j])});
    }
    std::vector<int> uncolored = cycle_edge_ids(g, cyc);
    for (int i : extra_uncolored_idx) uncolored.push_back(edge_id(g, cyc[i], y[i]));
    SurgeryGraph s(g);
    for (int v : cyc) s.delete_vertex(v);
    s.insert_edges(inserts);
    return finish_step(s, lift_targets, std::move(uncolored), std::move(notes));
}

ReductionStep reduce_c11(const PlaneMultigraph& g, const Configuration& c) {
    if (c.vertices.size() != 5) throw Error(ErrorCode::BindingInvalid, "need a 5-cycle");
    return reduce_cycle_with_pairs(g, c.vertices, {{1, 2}, {3, 4}}, {}, true);
}

ReductionStep reduce_c12(const PlaneMultigraph& g, const Configuration& c) {
    if (c.vertices.size() != 6) throw Error(ErrorCode::BindingInvalid, "need a 6-cycle");
    return reduce_cycle_with_pairs(g, c.vertices, {{1, 2}, {4, 5}}, {3}, true);
}

ReductionStep reduce_c13(const PlaneMultigraph& g, const Configuration& c) {
    if (c.vertices.size() != 7) throw Error(ErrorCode::BindingInvalid, "need a 7-face");
    return reduce_cycle_with_pairs(g, c.vertices, {{1, 2}, {3, 4}, {5, 6}}, {}, true);
}

// Orders the boundary of face f as a path from p to q not using edge pq.
std::vector<int> face_path(const PlaneMultigraph& g, int f, int p, int q) {
    std::vector<int> vs = g.faces()[f].vertices();
    auto it = std::find(vs.begin(), vs.end(), p);
    if (it == vs.end()) throw Error(ErrorCode::BindingInvalid, "shared endpoint not on face");
    std::rotate(vs.begin(), it, vs.end());
    if (vs[1] == q) {
        std::reverse(vs.begin() + 1, vs.end());
    }
    if (vs.back() != q) throw Error(ErrorCode::BindingInvalid, "faces do not meet along an edge");
    return vs;  // p, interior..., q
}

ReductionStep reduce_c14(const PlaneMultigraph& g, const Configuration& c) {
    int shared_edge = c.edges.at(0);
    int p = g.edge(shared_edge).u, q = g.edge(shared_edge).v;
    std::vector<int> path1 = face_path(g, c.face, p, q);   // p x1 x2 x3 q
    std::vector<int> path2 = face_path(g, c.face2, q, p);  // q x5 x6 x7 p
    if (path1.size() != 5 || path2.size() != 5)
        throw Error(ErrorCode::BindingInvalid, "faces are not 5-faces");
    // 8-cycle x0..x7 with the chord x4x0 = shared edge.
    std::vector<int> x{p, path1[1], path1[2], path1[3], q, path2[1], path2[2], path2[3]};
    std::set<int> distinct(x.begin(), x.end());
    if (distinct.size() != 8)
        throw Error(ErrorCode::BindingInvalid, "face boundaries do not form an 8-cycle");
    std::vector<int> y(8, -1);
    for (int i : {1, 2, 3, 5, 6, 7})
        y[i] = third_neighbor(g, x[i], x[(i - 1 + 8) % 8], x[(i + 1) % 8]);
    std::vector<std::string> notes;
    for (int i : {1, 2, 3, 5, 6, 7}) {
        for (int v : x)
            if (y[i] == v) throw Error(ErrorCode::BindingInvalid, "dangling neighbor on the cycle");
        for (int j : {1, 2, 3, 5, 6, 7}) {
            if (j <= i || y[i] != y[j]) continue;
            if (i == 2 && j == 6)
                notes.push_back("5-5 reduction with coinciding y2 = y6 (logged per lab note)");
            else
                throw Error(ErrorCode::BindingInvalid, "dangling neighbors coincide");
        }
    }
    std::vector<std::vector<int>> lift_targets;
    for (int i : {1, 2, 3, 5, 6, 7}) lift_targets.push_back({edge_id(g, x[i], y[i])});
    std::vector<int> uncolored = cycle_edge_ids(g, x);
    uncolored.push_back(shared_edge);
    SurgeryGraph s(g);
    for (int v : x) s.delete_vertex(v);
    int hub_u = s.add_vertex();
    int hub_v = s.add_vertex();
    s.insert_edges({{hub_u, y[1]}, {hub_u, y[2]}, {hub_u, y[3]},
                    {hub_v, y[5]}, {hub_v, y[6]}, {hub_v, y[7]}});
    return finish_step(s, lift_targets, std::move(uncolored), std::move(notes));
}

ReductionStep reduce_c15(const PlaneMultigraph& g, const Configuration& c) {
    int shared_edge = c.edges.at(0);
    int p = g.edge(shared_edge).u, q = g.edge(shared_edge).v;
    // c.face is the 5-face, c.face2 the 6-face; the 9-cycle is labeled so
    // x0..x5 walk the 6-face and x5..x8,x0 the 5-face, chord x5x0.
    std::vector<int> path6 = face_path(g, c.face2, p, q);  // p x1 x2 x3 x4 q
    std::vector<int> path5 = face_path(g, c.face, q, p);   // q x6 x7 x8 p
    if (path6.size() != 6 || path5.size() != 5)
        throw Error(ErrorCode::BindingInvalid, "faces are not a 6-face and a 5-face");
    std::vector<int> x{p,        path6[1], path6[2], path6[3], path6[4],
                       q,        path5[1], path5[2], path5[3]};
    std::set<int> distinct(x.begin(), x.end());
    if (distinct.size() != 9)
        throw Error(ErrorCode::BindingInvalid, "face boundaries do not form a 9-cycle");
    std::vector<int> y(9, -1);
    for (int i : {1, 2, 3, 4, 6, 7, 8})
        y[i] = third_neighbor(g, x[i], x[(i - 1 + 9) % 9], x[(i + 1) % 9]);
    std::vector<std::string> notes;
    for (int i : {1, 2, 3, 4, 6, 7, 8}) {
        for (int v : x)
            if (y[i] == v) throw Error(ErrorCode::BindingInvalid, "dangling neighbor on the cycle");
        for (int j : {1, 2, 3, 4, 6, 7, 8}) {
            if (j <= i || y[i] != y[j]) continue;
            if (j == 7 && (i == 2 || i == 3))
                notes.push_back("5-6 reduction with coinciding y7 (logged per lab note)");
            else
                throw Error(ErrorCode::BindingInvalid, "dangling neighbors coincide");
        }
    }
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {3, 4}})
        if (g.adjacent(y[i], y[j]))
            notes.push_back("5-6 reduction adds a parallel edge");
    std::vector<std::vector<int>> lift_targets{
        {edge_id(g, x[1], y[1]), edge_id(g, x[2], y[2])},
        {edge_id(g, x[3], y[3]), edge_id(g, x[4], y[4])},
        {edge_id(g, x[6], y[6])},
        {edge_id(g, x[7], y[7])},
        {edge_id(g, x[8], y[8])}};
    std::vector<int> uncolored = cycle_edge_ids(g, x);
    uncolored.push_back(shared_edge);
    SurgeryGraph s(g);
    for (int v : x) s.delete_vertex(v);
    int hub = s.add_vertex();
    s.insert_edges({{y[1], y[2]}, {y[3], y[4]}, {hub, y[6]}, {hub, y[7]}, {hub, y[8]}});
    return finish_step(s, lift_targets, std::move(uncolored), std::move(notes));
}

}  // namespace

ReductionStep reduce(const PlaneMultigraph& g, const Configuration& c) {
    switch (c.kind) {
        case ConfigKind::C1ParallelPair: return reduce_c1(g, c);
        case ConfigKind::C2LowDegreeVertex: return reduce_c2(g, c);
        case ConfigKind::C3CutEdge:
        case ConfigKind::C4Matching2EdgeCut:
            throw Error(ErrorCode::BindingInvalid,
                        "cut configurations reduce by split-and-merge; see color5");
        case ConfigKind::C5Triangle: return reduce_c5(g, c);
        case ConfigKind::C6Close2Vertices: return reduce_c6(g, c);
        case ConfigKind::C7SeparatingCycle: return reduce_c7(g, c);
        case ConfigKind::C8FourCycle: return reduce_c8(g, c);
        case ConfigKind::C9Distance3TwoVertices: return reduce_c9(g, c);
        case ConfigKind::C10BoundaryClose2Vertices: return reduce_c10(g, c);
        case ConfigKind::C11TwoVertexOn5Cycle: return reduce_c11(g, c);
        case ConfigKind::C12TwoVertexOn6Cycle: return reduce_c12(g, c);
        case ConfigKind::C13TwoVertexOn7Face: return reduce_c13(g, c);
        case ConfigKind::C14Adjacent55Faces: return reduce_c14(g, c);
        case ConfigKind::C15Adjacent56Faces: return reduce_c15(g, c);
    }
    throw Error(ErrorCode::BindingInvalid, "unknown configuration kind");
}

PartialColoring lift(const PlaneMultigraph& g, const PartialColoring& phi_reduced,
                     const ReductionStep& step) {
    PartialColoring phi = PartialColoring::empty(g, phi_reduced.palette);
    for (auto [host, mine] : step.shared) phi.color[host] = phi_reduced.color[mine];
    for (const auto& [mine, targets] : step.lift_classes)
        for (int host : targets) phi.color[host] = phi_reduced.color[mine];
    // Sanity: the uncolored list is exactly the complement of the lifted set.
    for (int e = 0; e < g.edge_count(); ++e) {
        bool listed = std::binary_search(step.uncolored.begin(), step.uncolored.end(), e);
        if (listed == phi.colored(e))
            throw Error(ErrorCode::LiftNotGood,
                        "edge " + std::to_string(e) + " not covered by the lift map");
    }
    if (!is_good(g, phi, 2, phi.palette)) {
        for (const Edge& e : g.edges()) {
            ColorSet su = used_colors(g, phi, e.u);
            ColorSet sv = used_colors(g, phi, e.v);
            if (su.intersect(sv).size() > 2)
                throw Error(ErrorCode::LiftNotGood,
                            "lifted coloring violates the bound at pair (" +
                                std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
        }
        throw Error(ErrorCode::LiftNotGood, "lifted coloring is not proper");
    }
    return phi;
}

std::optional<PartialColoring> extend_exhaustive(const PlaneMultigraph& g,
                                                 const PartialColoring& phi,
                                                 std::vector<int> uncolored_edges) {
    std::sort(uncolored_edges.begin(), uncolored_edges.end());
    for (int e : uncolored_edges)
        if (phi.colored(e))
            throw Error(ErrorCode::EdgeAlreadyColored, "edge " + std::to_string(e));
    PartialColoring work = phi;
    auto dfs = [&](auto&& self, std::size_t i) -> bool {
        if (i == uncolored_edges.size()) return true;
        int e = uncolored_edges[i];
        for (int c = 1; c <= work.palette; ++c) {
            work.color[e] = c;
            if (is_good_delta(g, work, 2, e) && self(self, i + 1)) return true;
        }
        work.color[e] = 0;
        return false;
    };
    if (dfs(dfs, 0)) return work;
    return std::nullopt;
}

namespace {

PartialColoring color5_connected(const PlaneMultigraph& g, std::vector<TraceEntry>* trace);

void add_trace(std::vector<TraceEntry>* trace, const PlaneMultigraph& g, std::string action,
               std::string binding) {
    if (trace)
        trace->push_back(
            {std::move(action), std::move(binding), g.vertex_count(), g.edge_count()});
}

// Split at a cut edge: each side keeps the cut edge and the opposite
// endpoint as a pendant; colorings merge after permuting one side.
PartialColoring merge_cut_edge(const PlaneMultigraph& g, int cut,
                               std::vector<TraceEntry>* trace) {
    const Edge& e = g.edge(cut);
    std::vector<char> keep_side(g.vertex_count(), 0);
    {
        // Vertices on v1's side of the cut.
        std::vector<int> stack{e.u};
        keep_side[e.u] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int f : g.incident_edges(x)) {
                if (f == cut) continue;
                int y = g.edge(f).other(x);
                if (!keep_side[y]) {
                    keep_side[y] = 1;
                    stack.push_back(y);
                }
            }
        }
    }
    auto make_side = [&](bool keep_u_side) {
        SurgeryGraph s(g);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (v == e.u || v == e.v) continue;
            if (static_cast<bool>(keep_side[v]) != keep_u_side) s.delete_vertex(v);
        }
        return s.finalize();
    };
    SurgeryGraph::Result side1 = make_side(true);
    SurgeryGraph::Result side2 = make_side(false);
    PartialColoring phi1 = color5_connected(side1.graph, trace);
    PartialColoring phi2 = color5_connected(side2.graph, trace);
    // Try all palette permutations of side 2 that agree on the cut edge.
    std::array<int, 5> perm{1, 2, 3, 4, 5};
    std::sort(perm.begin(), perm.end());
    int cut_in_1 = -1, cut_in_2 = -1;
    for (auto [host, mine] : side1.shared_edges)
        if (host == cut) cut_in_1 = mine;
    for (auto [host, mine] : side2.shared_edges)
        if (host == cut) cut_in_2 = mine;
    do {
        if (perm[phi2.color[cut_in_2] - 1] != phi1.color[cut_in_1]) continue;
        PartialColoring merged = PartialColoring::empty(g, 5);
        for (auto [host, mine] : side1.shared_edges) merged.color[host] = phi1.color[mine];
        for (auto [host, mine] : side2.shared_edges)
            merged.color[host] = perm[phi2.color[mine] - 1];
        if (is_good(g, merged, 2, 5)) return merged;
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw Error(ErrorCode::ExtensionFailed, "cut-edge merge found no color permutation");
}

// Split at a matching 2-edge-cut: each side gains an apex vertex standing in
// for the far side; merge searches side-2 permutations plus local recoloring
// of the two cut edges.
PartialColoring merge_2_edge_cut(const PlaneMultigraph& g, int cut1, int cut2,
                                 std::vector<TraceEntry>* trace) {
    int u1 = g.edge(cut1).u, v1 = g.edge(cut1).v;
    int u2 = g.edge(cut2).u, v2 = g.edge(cut2).v;
    std::vector<char> side_a(g.vertex_count(), 0);
    {
        std::vector<int> stack{u1};
        side_a[u1] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int f : g.incident_edges(x)) {
                if (f == cut1 || f == cut2) continue;
                int y = g.edge(f).other(x);
                if (!side_a[y]) {
                    side_a[y] = 1;
                    stack.push_back(y);
                }
            }
        }
    }
    if (side_a[v1]) throw Error(ErrorCode::BindingInvalid, "edges do not form a cut");
    if (!side_a[u2]) std::swap(u2, v2);
    if (!side_a[u2] || side_a[v2])
        throw Error(ErrorCode::BindingInvalid, "cut endpoints straddle sides unexpectedly");
    auto make_side = [&](bool a_side, int i1, int i2) {
        SurgeryGraph s(g);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (static_cast<bool>(side_a[v]) != a_side) s.delete_vertex(v);
        int apex = s.add_vertex();
        s.insert_edges({{apex, i1}, {apex, i2}});
        return s.finalize();
    };
    SurgeryGraph::Result side1 = make_side(true, u1, u2);
    SurgeryGraph::Result side2 = make_side(false, v1, v2);
    PartialColoring phi1 = color5_connected(side1.graph, trace);
    PartialColoring phi2 = color5_connected(side2.graph, trace);
    std::array<int, 5> perm{1, 2, 3, 4, 5};
    do {
        PartialColoring merged = PartialColoring::empty(g, 5);
        for (auto [host, mine] : side1.shared_edges) merged.color[host] = phi1.color[mine];
        for (auto [host, mine] : side2.shared_edges)
            merged.color[host] = perm[phi2.color[mine] - 1];
        if (!is_good(g, merged, 2, 5)) continue;
        if (auto full = extend_exhaustive(g, merged, {cut1, cut2})) return *full;
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw Error(ErrorCode::ExtensionFailed, "2-edge-cut merge found no color permutation");
}

PartialColoring color5_connected(const PlaneMultigraph& g, std::vector<TraceEntry>* trace) {
    if (g.vertex_count() <= kBaseCaseVertices) {
        add_trace(trace, g, "base", "exact solve");
        SolverOptions opts;
        opts.force = true;
        ExistsResult r = exists_good_coloring(g, 2, 5, opts);
        if (!r.witness)
            throw Error(ErrorCode::ExtensionFailed,
                        "exact base case found no good 5-coloring (paper-refuting)");
        return *r.witness;
    }
    Configuration cfg = find_configuration(g);
    add_trace(trace, g, config_kind_name(cfg.kind), cfg.describe());
    if (cfg.kind == ConfigKind::C3CutEdge) return merge_cut_edge(g, cfg.edges[0], trace);
    if (cfg.kind == ConfigKind::C4Matching2EdgeCut)
        return merge_2_edge_cut(g, cfg.edges[0], cfg.edges[1], trace);
    ReductionStep step = reduce(g, cfg);
    for (const std::string& note : step.notes) add_trace(trace, g, "note", note);
    // Termination measure: (V, E) drops lexicographically.
    if (!(step.reduced.vertex_count() < g.vertex_count() ||
          (step.reduced.vertex_count() == g.vertex_count() &&
           step.reduced.edge_count() < g.edge_count())))
        throw Error(ErrorCode::BindingInvalid, "reduction did not shrink the graph");
    PartialColoring phi_reduced = color5(step.reduced, trace);
    PartialColoring phi = lift(g, phi_reduced, step);
    std::optional<PartialColoring> full = extend_exhaustive(g, phi, step.uncolored);
    if (!full) {
        std::ostringstream os;
        os << "extension failed after " << cfg.describe()
           << " (a counterexample candidate); host V=" << g.vertex_count()
           << " E=" << g.edge_count();
        throw Error(ErrorCode::ExtensionFailed, os.str());
    }
    return *full;
}

}  // namespace

PartialColoring color5(const PlaneMultigraph& g, std::vector<TraceEntry>* trace) {
    PartialColoring out = PartialColoring::empty(g, 5);
    for (const ComponentSubgraph& comp : split_components(g)) {
        PartialColoring phi = color5_connected(comp.graph, trace);
        for (int e = 0; e < comp.graph.edge_count(); ++e)
            out.color[comp.edge_to_host[e]] = phi.color[e];
    }
    if (!is_good(g, out, 2, 5))
        throw Error(ErrorCode::ExtensionFailed, "merged component coloring not good");
    return out;
}

}  // namespace kix

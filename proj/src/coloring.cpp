#include "kix/coloring.hpp"

#include <algorithm>
#include <string>

namespace kix {

std::vector<int> ColorSet::to_list() const {
    std::vector<int> out;
    for (int c = 1; c <= 32; ++c)
        if (contains(c)) out.push_back(c);
    return out;
}

ColorSet used_colors(const PlaneMultigraph& g, const PartialColoring& phi, int v) {
    ColorSet s;
    for (int e : g.incident_edges(v))
        if (phi.colored(e)) s.add(phi.color[e]);
    return s;
}

bool is_proper(const PlaneMultigraph& g, const PartialColoring& phi) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident_edges(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                if (phi.colored(inc[i]) && phi.color[inc[i]] == phi.color[inc[j]]) return false;
    }
    return true;
}

namespace {

void check_multiplicity_at_most(const PlaneMultigraph& g, int k) {
    for (const auto& [e, f] : g.parallel_pairs()) {
        (void)f;
        const Edge& a = g.edge(e);
        if (static_cast<int>(g.edges_between(a.u, a.v).size()) > k)
            throw Error(ErrorCode::MultiplicityAboveK,
                        "multiplicity between " + std::to_string(a.u) + " and " +
                            std::to_string(a.v) + " exceeds k=" + std::to_string(k));
    }
}

}  // namespace

bool is_good(const PlaneMultigraph& g, const PartialColoring& phi, int k, int t) {
    check_multiplicity_at_most(g, k);
    for (int c : phi.color)
        if (c < 0 || c > t) return false;
    if (!is_proper(g, phi)) return false;
    for (const Edge& e : g.edges()) {
        // Each adjacent pair is checked once even when joined by two edges.
        if (g.edges_between(e.u, e.v).front() != e.id) continue;
        ColorSet su = used_colors(g, phi, e.u);
        ColorSet sv = used_colors(g, phi, e.v);
        if (su.intersect(sv).size() > k) return false;
    }
    return true;
}

bool is_good_delta(const PlaneMultigraph& g, const PartialColoring& phi, int k, int e) {
    const Edge& ed = g.edge(e);
    const int c = phi.color[e];
    for (int w : {ed.u, ed.v}) {
        for (int f : g.incident_edges(w))
            if (f != e && phi.colored(f) && phi.color[f] == c) return false;
    }
    for (int w : {ed.u, ed.v}) {
        ColorSet sw = used_colors(g, phi, w);
        for (int x : g.neighbors(w))
            if (sw.intersect(used_colors(g, phi, x)).size() > k) return false;
    }
    return true;
}

PartialColoring extend_pendant(const PlaneMultigraph& g, const PartialColoring& phi,
                               int uv_edge) {
    const Edge& e = g.edge(uv_edge);
    if (phi.colored(uv_edge))
        throw Error(ErrorCode::PreconditionViolated, "edge already colored");
    if (!used_colors(g, phi, e.u).empty() && !used_colors(g, phi, e.v).empty())
        throw Error(ErrorCode::PreconditionViolated,
                    "neither endpoint has an empty color set");
    for (int c = 1; c <= 5; ++c) {
        PartialColoring next = phi;
        next.color[uv_edge] = c;
        if (is_good_delta(g, next, 2, uv_edge)) return next;
    }
    // Unreachable when phi is good for k=2, t=5.
    throw Error(ErrorCode::PreconditionViolated, "no extension exists; phi was not good");
}

PartialColoring color_cycle_in_order(const PlaneMultigraph& g, const PartialColoring& phi,
                                     const std::vector<int>& cycle_vertices,
                                     const std::vector<int>& colors) {
    const int len = static_cast<int>(cycle_vertices.size());
    if (len < 3 || static_cast<int>(colors.size()) != len)
        throw Error(ErrorCode::NotACycle, "need >= 3 vertices and one color per edge");
    PartialColoring out = phi;
    for (int i = 0; i < len; ++i) {
        int a = cycle_vertices[i];
        int b = cycle_vertices[(i + 1) % len];
        std::vector<int> between = g.edges_between(a, b);
        if (between.empty()) throw Error(ErrorCode::NotACycle, "consecutive pair not an edge");
        int chosen = -1;
        for (int e : between) {
            if (!out.colored(e)) {
                chosen = e;
                break;
            }
        }
        if (chosen == -1)
            throw Error(ErrorCode::EdgeAlreadyColored,
                        "no uncolored edge between " + std::to_string(a) + " and " +
                            std::to_string(b));
        out.color[chosen] = colors[i];
    }
    return out;
}

}  // namespace kix

#include "kix/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

namespace kix {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::MultiplicityExceeded: return "MultiplicityExceeded";
        case ErrorCode::DegreeExceeded: return "DegreeExceeded";
        case ErrorCode::BadRotation: return "BadRotation";
        case ErrorCode::NonPlanarEmbedding: return "NonPlanarEmbedding";
        case ErrorCode::NotOnFace: return "NotOnFace";
        case ErrorCode::MultiplicityAboveK: return "MultiplicityAboveK";
        case ErrorCode::EdgeAlreadyColored: return "EdgeAlreadyColored";
        case ErrorCode::NotACycle: return "NotACycle";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::BindingInvalid: return "BindingInvalid";
        case ErrorCode::LiftNotGood: return "LiftNotGood";
        case ErrorCode::ExtensionFailed: return "ExtensionFailed";
        case ErrorCode::NoConfigurationFound: return "NoConfigurationFound";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::UnknownLemmaId: return "UnknownLemmaId";
        case ErrorCode::SizeLimit: return "SizeLimit";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Error";
}

bool FaceWalk::contains_vertex(int v) const {
    return std::find(tails_.begin(), tails_.end(), v) != tails_.end();
}

int FaceWalk::boundary_distance(int u, int v) const {
    const int len = length();
    std::vector<int> pu, pv;
    for (int i = 0; i < len; ++i) {
        if (tails_[i] == u) pu.push_back(i);
        if (tails_[i] == v) pv.push_back(i);
    }
    if (pu.empty() || pv.empty())
        throw Error(ErrorCode::NotOnFace, "vertex does not occur on face walk");
    int best = kInfiniteDistance;
    for (int i : pu)
        for (int j : pv) {
            int d = std::abs(i - j);
            best = std::min(best, std::min(d, len - d));
        }
    return best;
}

PlaneMultigraph PlaneMultigraph::build(int vertex_count,
                                       std::vector<std::pair<int, int>> edge_list,
                                       std::vector<std::vector<int>> rotation) {
    PlaneMultigraph g;
    g.n_ = vertex_count;
    if (vertex_count < 0) throw Error(ErrorCode::InvalidInput, "negative vertex count");
    if (static_cast<int>(rotation.size()) != vertex_count)
        throw Error(ErrorCode::BadRotation, "rotation size differs from vertex count");

    std::map<std::pair<int, int>, int> multiplicity;
    for (int e = 0; e < static_cast<int>(edge_list.size()); ++e) {
        auto [u, v] = edge_list[e];
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw Error(ErrorCode::InvalidInput,
                        "edge " + std::to_string(e) + " endpoint out of range");
        if (u == v) throw Error(ErrorCode::LoopEdge, "edge " + std::to_string(e));
        auto key = std::minmax(u, v);
        if (++multiplicity[{key.first, key.second}] > 2)
            throw Error(ErrorCode::MultiplicityExceeded,
                        "three or more edges between " + std::to_string(key.first) + " and " +
                            std::to_string(key.second));
        g.edges_.push_back({e, u, v});
    }

    for (int v = 0; v < vertex_count; ++v) {
        std::vector<int> expected;
        for (const Edge& e : g.edges_)
            if (e.u == v || e.v == v) expected.push_back(e.id);
        if (expected.size() > 3)
            throw Error(ErrorCode::DegreeExceeded, "vertex " + std::to_string(v));
        std::vector<int> got = rotation[v];
        std::sort(got.begin(), got.end());
        if (got != expected)
            throw Error(ErrorCode::BadRotation,
                        "rotation at vertex " + std::to_string(v) +
                            " does not list exactly the incident edge ids");
    }
    g.rotation_ = std::move(rotation);
    g.trace_faces();
    return g;
}

void PlaneMultigraph::trace_faces() {
    faces_.clear();
    const int m = edge_count();
    face_of_dart_.assign(2 * m, -1);
    // Position of each edge in each endpoint's rotation, for O(1) stepping.
    std::vector<std::vector<int>> pos(n_);
    for (int v = 0; v < n_; ++v) pos[v].assign(m == 0 ? 0 : m, -1);
    for (int v = 0; v < n_; ++v)
        for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i)
            pos[v][rotation_[v][i]] = i;

    for (int d0 = 0; d0 < 2 * m; ++d0) {
        if (face_of_dart_[d0] != -1) continue;
        std::vector<Dart> walk;
        std::vector<int> tails;
        Dart d{d0 / 2, d0 % 2};
        while (face_of_dart_[d.index()] == -1) {
            face_of_dart_[d.index()] = static_cast<int>(faces_.size());
            walk.push_back(d);
            tails.push_back(dart_tail(d));
            // Next edge is the predecessor in the rotation at the head vertex.
            int h = dart_head(d);
            int deg = static_cast<int>(rotation_[h].size());
            int i = pos[h][d.edge];
            int next_edge = rotation_[h][(i + deg - 1) % deg];
            d = Dart{next_edge, edges_[next_edge].u == h ? 0 : 1};
        }
        faces_.emplace_back(std::move(walk), std::move(tails));
    }

    // Each edgeless component (a lone vertex) sits inside one face of its own.
    std::vector<int> labels = component_labels();
    std::vector<char> has_edge(component_count(), 0);
    for (const Edge& e : edges_) has_edge[labels[e.u]] = 1;
    std::vector<int> comp_vertices(component_count(), 0);
    std::vector<int> comp_edges(component_count(), 0);
    std::vector<int> comp_faces(component_count(), 0);
    for (int v = 0; v < n_; ++v) {
        comp_vertices[labels[v]]++;
        if (!has_edge[labels[v]]) {
            faces_.emplace_back(std::vector<Dart>{}, std::vector<int>{});
            comp_faces[labels[v]]++;
        }
    }
    for (const Edge& e : edges_) comp_edges[labels[e.u]]++;
    for (const FaceWalk& f : faces_)
        if (f.length() > 0) comp_faces[labels[f.vertices()[0]]]++;
    for (int c = 0; c < component_count(); ++c) {
        if (comp_vertices[c] - comp_edges[c] + comp_faces[c] != 2)
            throw Error(ErrorCode::NonPlanarEmbedding,
                        "component " + std::to_string(c) + ": V-E+F = " +
                            std::to_string(comp_vertices[c] - comp_edges[c] + comp_faces[c]));
    }
}

std::vector<int> PlaneMultigraph::neighbors(int v) const {
    std::set<int> out;
    for (int e : rotation_[v]) out.insert(edges_[e].other(v));
    return {out.begin(), out.end()};
}

bool PlaneMultigraph::adjacent(int u, int v) const {
    for (int e : rotation_[u])
        if (edges_[e].other(u) == v) return true;
    return false;
}

std::vector<int> PlaneMultigraph::edges_between(int u, int v) const {
    std::vector<int> out;
    for (int e : rotation_[u])
        if (edges_[e].other(u) == v) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

int PlaneMultigraph::distance(int u, int v) const {
    if (u == v) return 0;
    std::vector<int> dist(n_, kInfiniteDistance);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int e : rotation_[x]) {
            int y = edges_[e].other(x);
            if (dist[y] != kInfiniteDistance) continue;
            dist[y] = dist[x] + 1;
            if (y == v) return dist[y];
            q.push(y);
        }
    }
    return dist[v];
}

std::vector<int> PlaneMultigraph::component_labels() const {
    std::vector<int> label(n_, -1);
    int next = 0;
    for (int s = 0; s < n_; ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int e : rotation_[x]) {
                int y = edges_[e].other(x);
                if (label[y] == -1) {
                    label[y] = next;
                    q.push(y);
                }
            }
        }
        ++next;
    }
    return label;
}

int PlaneMultigraph::component_count() const {
    std::vector<int> labels = component_labels();
    return labels.empty() ? 0 : 1 + *std::max_element(labels.begin(), labels.end());
}

bool PlaneMultigraph::connected() const { return component_count() <= 1; }

std::vector<int> PlaneMultigraph::two_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (degree(v) == 2) out.push_back(v);
    return out;
}

namespace {

// Component count when edges marked in `skip` are removed.
int components_without(const PlaneMultigraph& g, const std::vector<char>& skip) {
    int n = g.vertex_count();
    std::vector<int> label(n, -1);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (label[s] != -1) continue;
        ++comps;
        label[s] = 1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int e : g.incident_edges(x)) {
                if (skip[e]) continue;
                int y = g.edge(e).other(x);
                if (label[y] == -1) {
                    label[y] = 1;
                    q.push(y);
                }
            }
        }
    }
    return comps;
}

}  // namespace

std::vector<int> PlaneMultigraph::cut_edges() const {
    std::vector<int> out;
    const int base = component_count();
    std::vector<char> skip(edge_count(), 0);
    for (int e = 0; e < edge_count(); ++e) {
        // A parallel edge is never a bridge.
        if (edges_between(edges_[e].u, edges_[e].v).size() > 1) continue;
        skip[e] = 1;
        if (components_without(*this, skip) > base) out.push_back(e);
        skip[e] = 0;
    }
    return out;
}

std::vector<std::pair<int, int>> PlaneMultigraph::matching_2_edge_cuts() const {
    std::vector<std::pair<int, int>> out;
    const int base = component_count();
    std::vector<char> skip(edge_count(), 0);
    for (int e = 0; e < edge_count(); ++e) {
        for (int f = e + 1; f < edge_count(); ++f) {
            const Edge& a = edges_[e];
            const Edge& b = edges_[f];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
            skip[e] = skip[f] = 1;
            if (components_without(*this, skip) > base) out.emplace_back(e, f);
            skip[e] = skip[f] = 0;
        }
    }
    return out;
}

namespace {

// Canonical form of a vertex cycle: least rotation of the lexicographically
// smaller of the two orientations, starting at the minimum vertex.
std::vector<int> canonical_cycle(std::vector<int> c) {
    auto best_rotation = [](const std::vector<int>& v) {
        int n = static_cast<int>(v.size());
        int start = static_cast<int>(std::min_element(v.begin(), v.end()) - v.begin());
        std::vector<int> best;
        for (int s = 0; s < n; ++s) {
            if (v[s] != v[start]) continue;
            std::vector<int> rot(n);
            for (int i = 0; i < n; ++i) rot[i] = v[(s + i) % n];
            if (best.empty() || rot < best) best = rot;
        }
        return best;
    };
    std::vector<int> rev(c.rbegin(), c.rend());
    std::vector<int> a = best_rotation(c);
    std::vector<int> b = best_rotation(rev);
    return a < b ? a : b;
}

}  // namespace

std::vector<std::vector<int>> PlaneMultigraph::cycles_of_length(int len) const {
    if (len < 3 || len > 7)
        throw Error(ErrorCode::InvalidInput, "cycle length must be between 3 and 7");
    std::set<std::vector<int>> found;
    std::vector<int> path;
    std::vector<char> used(n_, 0);
    // DFS from each start vertex; only vertices above the start may appear,
    // so each cycle is generated from its minimum vertex.
    auto dfs = [&](auto&& self, int start, int at) -> void {
        if (static_cast<int>(path.size()) == len) {
            if (adjacent(at, start)) found.insert(canonical_cycle(path));
            return;
        }
        for (int y : neighbors(at)) {
            if (y <= start || used[y]) continue;
            used[y] = 1;
            path.push_back(y);
            self(self, start, y);
            path.pop_back();
            used[y] = 0;
        }
    };
    for (int s = 0; s < n_; ++s) {
        used[s] = 1;
        path.assign(1, s);
        dfs(dfs, s, s);
        used[s] = 0;
    }
    return {found.begin(), found.end()};
}

bool PlaneMultigraph::cycle_is_face(const std::vector<int>& cycle) const {
    std::vector<int> canon = canonical_cycle(cycle);
    for (const FaceWalk& f : faces_) {
        if (f.length() != static_cast<int>(cycle.size())) continue;
        const std::vector<int>& w = f.vertices();
        std::set<int> distinct(w.begin(), w.end());
        if (static_cast<int>(distinct.size()) != f.length()) continue;
        if (canonical_cycle(w) == canon) return true;
    }
    return false;
}

std::vector<std::vector<int>> PlaneMultigraph::separating_cycles(int min_len, int max_len) const {
    std::vector<std::vector<int>> out;
    for (int len = min_len; len <= max_len; ++len)
        for (const std::vector<int>& c : cycles_of_length(len))
            if (!cycle_is_face(c)) out.push_back(c);
    return out;
}

std::vector<std::pair<int, int>> PlaneMultigraph::parallel_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int e = 0; e < edge_count(); ++e)
        for (int f = e + 1; f < edge_count(); ++f) {
            auto a = std::minmax(edges_[e].u, edges_[e].v);
            auto b = std::minmax(edges_[f].u, edges_[f].v);
            if (a == b) out.emplace_back(e, f);
        }
    return out;
}

std::vector<ComponentSubgraph> split_components(const PlaneMultigraph& g) {
    std::vector<int> labels = g.component_labels();
    int comps = g.component_count();
    std::vector<ComponentSubgraph> out(comps);
    std::vector<int> local_id(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int c = labels[v];
        local_id[v] = static_cast<int>(out[c].vertex_to_host.size());
        out[c].vertex_to_host.push_back(v);
    }
    std::vector<int> local_edge(g.edge_count(), -1);
    std::vector<std::vector<std::pair<int, int>>> edge_lists(comps);
    for (const Edge& e : g.edges()) {
        int c = labels[e.u];
        local_edge[e.id] = static_cast<int>(edge_lists[c].size());
        edge_lists[c].emplace_back(local_id[e.u], local_id[e.v]);
        out[c].edge_to_host.push_back(e.id);
    }
    for (int c = 0; c < comps; ++c) {
        std::vector<std::vector<int>> rot(out[c].vertex_to_host.size());
        for (int i = 0; i < static_cast<int>(out[c].vertex_to_host.size()); ++i) {
            for (int e : g.incident_edges(out[c].vertex_to_host[i]))
                rot[i].push_back(local_edge[e]);
        }
        out[c].graph = PlaneMultigraph::build(static_cast<int>(out[c].vertex_to_host.size()),
                                              edge_lists[c], std::move(rot));
    }
    return out;
}

}  // namespace kix

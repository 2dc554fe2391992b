#include "kix/surgery.hpp"

#include <algorithm>
#include <queue>

namespace kix {

SurgeryGraph::SurgeryGraph(const PlaneMultigraph& g) {
    for (const Edge& e : g.edges()) edges_.push_back({e.u, e.v, e.id});
    rotation_ = g.rotation();
    alive_vertex_.assign(g.vertex_count(), 1);
    alive_edge_.assign(g.edge_count(), 1);
}

void SurgeryGraph::delete_edge(int e) {
    if (!alive_edge_[e]) return;
    alive_edge_[e] = 0;
    for (int w : {edges_[e].u, edges_[e].v}) {
        auto& rot = rotation_[w];
        rot.erase(std::remove(rot.begin(), rot.end(), e), rot.end());
    }
}

void SurgeryGraph::delete_vertex(int v) {
    if (!alive_vertex_[v]) return;
    std::vector<int> inc = rotation_[v];
    for (int e : inc) delete_edge(e);
    alive_vertex_[v] = 0;
}

int SurgeryGraph::add_vertex() {
    rotation_.emplace_back();
    alive_vertex_.push_back(1);
    return static_cast<int>(rotation_.size()) - 1;
}

std::vector<int> SurgeryGraph::component_of() const {
    std::vector<int> label(rotation_.size(), -1);
    int next = 0;
    for (int s = 0; s < static_cast<int>(rotation_.size()); ++s) {
        if (!alive_vertex_[s] || label[s] != -1) continue;
        label[s] = next;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int e : rotation_[x]) {
                int y = other(e, x);
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

// Faces as dart walks; dart = (edge, dir), dir 0 meaning u->v.
std::vector<std::vector<std::pair<int, int>>> SurgeryGraph::trace_faces() const {
    const int m = static_cast<int>(edges_.size());
    std::vector<int> seen(2 * m, 0);
    std::vector<std::vector<std::pair<int, int>>> faces;
    auto head = [&](int e, int dir) { return dir == 0 ? edges_[e].v : edges_[e].u; };
    for (int d0 = 0; d0 < 2 * m; ++d0) {
        if (!alive_edge_[d0 / 2] || seen[d0]) continue;
        std::vector<std::pair<int, int>> walk;
        int e = d0 / 2, dir = d0 % 2;
        while (!seen[2 * e + dir]) {
            seen[2 * e + dir] = 1;
            walk.emplace_back(e, dir);
            int h = head(e, dir);
            const auto& rot = rotation_[h];
            int deg = static_cast<int>(rot.size());
            int i = static_cast<int>(std::find(rot.begin(), rot.end(), e) - rot.begin());
            int ne = rot[(i + deg - 1) % deg];
            dir = edges_[ne].u == h ? 0 : 1;
            e = ne;
        }
        faces.push_back(std::move(walk));
    }
    return faces;
}

// A placement fixes, per endpoint, the rotation position the new edge id is
// inserted at (-1 appends at the end). Corner i means "immediately before
// the edge currently at index i", which routes the face arriving on that
// edge through the new one.
std::vector<std::pair<int, int>> SurgeryGraph::placements(int a, int b) const {
    std::vector<std::pair<int, int>> out;
    std::vector<int> comp = component_of();
    auto corners = [&](int v) {
        std::vector<int> cs;
        for (int i = 0; i < degree(v); ++i) cs.push_back(i);
        if (cs.empty()) cs.push_back(-1);
        return cs;
    };
    if (degree(a) == 0 || degree(b) == 0 || comp[a] != comp[b]) {
        // Pendant or cross-component: genus is preserved at any corners, but
        // the choice decides which face the seam lands in, so enumerate all.
        for (int ca : corners(a))
            for (int cb : corners(b)) out.emplace_back(ca, cb);
        return out;
    }
    // Same component: both corners must sit on one common face.
    auto faces = trace_faces();
    auto head = [&](int e, int dir) { return dir == 0 ? edges_[e].v : edges_[e].u; };
    auto position = [&](int v, int e) {
        const auto& rot = rotation_[v];
        return static_cast<int>(std::find(rot.begin(), rot.end(), e) - rot.begin());
    };
    for (const auto& walk : faces) {
        std::vector<int> cas, cbs;
        for (const auto& [e, dir] : walk) {
            if (head(e, dir) == a) cas.push_back(position(a, e));
            if (head(e, dir) == b) cbs.push_back(position(b, e));
        }
        for (int ca : cas)
            for (int cb : cbs) out.emplace_back(ca, cb);
    }
    return out;
}

int SurgeryGraph::apply_placement(int a, int b, std::pair<int, int> placement) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({a, b, -1});
    alive_edge_.push_back(1);
    auto put = [&](int v, int corner) {
        auto& rot = rotation_[v];
        if (corner < 0)
            rot.push_back(id);
        else
            rot.insert(rot.begin() + corner, id);
    };
    put(a, placement.first);
    put(b, placement.second);
    return id;
}

void SurgeryGraph::undo_placement(int a, int b) {
    int id = static_cast<int>(edges_.size()) - 1;
    for (int v : {a, b}) {
        auto& rot = rotation_[v];
        rot.erase(std::remove(rot.begin(), rot.end(), id), rot.end());
    }
    alive_edge_.pop_back();
    edges_.pop_back();
}

std::optional<int> SurgeryGraph::add_edge(int a, int b) {
    auto options = placements(a, b);
    if (options.empty()) return std::nullopt;
    int id = apply_placement(a, b, options.front());
    insert_order_.push_back(id);
    return id;
}

std::vector<int> SurgeryGraph::insert_edges(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> result;
    // Backtracks over corner placements until every edge lands.
    auto attempt = [&](auto&& self, std::size_t i) -> bool {
        if (i == pairs.size()) return true;
        auto [a, b] = pairs[i];
        for (const auto& placement : placements(a, b)) {
            int id = apply_placement(a, b, placement);
            result.push_back(id);
            if (self(self, i + 1)) return true;
            result.pop_back();
            undo_placement(a, b);
        }
        return false;
    };
    if (!attempt(attempt, 0))
        throw Error(ErrorCode::BindingInvalid, "no planar corner placement for inserted edges");
    for (int id : result) insert_order_.push_back(id);
    return result;
}

SurgeryGraph::Result SurgeryGraph::finalize() const {
    Result res;
    std::vector<int> vmap(rotation_.size(), -1);
    int nv = 0;
    for (int v = 0; v < static_cast<int>(rotation_.size()); ++v)
        if (alive_vertex_[v]) vmap[v] = nv++;
    std::vector<int> emap(edges_.size(), -1);
    std::vector<std::pair<int, int>> edge_list;
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        if (!alive_edge_[e]) continue;
        emap[e] = static_cast<int>(edge_list.size());
        edge_list.emplace_back(vmap[edges_[e].u], vmap[edges_[e].v]);
        if (edges_[e].host >= 0) res.shared_edges.emplace_back(edges_[e].host, emap[e]);
    }
    std::vector<std::vector<int>> rot(nv);
    for (int v = 0; v < static_cast<int>(rotation_.size()); ++v) {
        if (!alive_vertex_[v]) continue;
        for (int e : rotation_[v]) rot[vmap[v]].push_back(emap[e]);
    }
    res.graph = PlaneMultigraph::build(nv, edge_list, rot);
    for (int e : insert_order_) res.new_edges.push_back(emap[e]);
    res.vertex_to_new = vmap;
    return res;
}

}  // namespace kix

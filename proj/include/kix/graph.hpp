#pragma once

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "kix/errors.hpp"

namespace kix {

struct Edge {
    int id;
    int u;
    int v;

    int other(int w) const { return w == u ? v : u; }
};

// A directed edge side: edge `edge` traversed from tail to head.
// dir 0 means u->v, dir 1 means v->u. Dart index = 2*edge + dir.
struct Dart {
    int edge;
    int dir;

    int index() const { return 2 * edge + dir; }
    Dart reversed() const { return {edge, 1 - dir}; }
};

// Closed walk of darts traced from the rotation system. Edgeless components
// contribute one empty walk so that V - E + F = 2 holds per component.
class FaceWalk {
  public:
    FaceWalk() = default;
    explicit FaceWalk(std::vector<Dart> darts, std::vector<int> tails)
        : darts_(std::move(darts)), tails_(std::move(tails)) {}

    int length() const { return static_cast<int>(darts_.size()); }
    const std::vector<Dart>& darts() const { return darts_; }
    // Vertex sequence along the walk: tails_[i] is the tail of darts_[i].
    const std::vector<int>& vertices() const { return tails_; }

    bool contains_vertex(int v) const;

    // Minimum walk distance along the boundary between occurrences of u and v.
    // Throws NotOnFace when either vertex does not occur.
    int boundary_distance(int u, int v) const;

  private:
    std::vector<Dart> darts_;
    std::vector<int> tails_;
};

inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

// Loopless plane multigraph: degree <= 3, multiplicity <= 2, genus-0 rotation
// system. Immutable after build; faces are traced and cached at build time.
class PlaneMultigraph {
  public:
    PlaneMultigraph() = default;

    // Validates all invariants and traces faces. Throws Error on violation:
    // LoopEdge, MultiplicityExceeded, DegreeExceeded, BadRotation,
    // NonPlanarEmbedding.
    static PlaneMultigraph build(int vertex_count, std::vector<std::pair<int, int>> edge_list,
                                 std::vector<std::vector<int>> rotation);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<std::vector<int>>& rotation() const { return rotation_; }
    const std::vector<int>& incident_edges(int v) const { return rotation_[v]; }
    int degree(int v) const { return static_cast<int>(rotation_[v].size()); }

    int dart_tail(Dart d) const { return d.dir == 0 ? edges_[d.edge].u : edges_[d.edge].v; }
    int dart_head(Dart d) const { return d.dir == 0 ? edges_[d.edge].v : edges_[d.edge].u; }

    const std::vector<FaceWalk>& faces() const { return faces_; }
    // Face index owning the given dart.
    int face_of(Dart d) const { return face_of_dart_[d.index()]; }

    // Neighbors with parallel edges collapsed, ascending.
    std::vector<int> neighbors(int v) const;
    bool adjacent(int u, int v) const;
    // Edges joining u and v (0, 1 or 2 ids, ascending).
    std::vector<int> edges_between(int u, int v) const;

    // Shortest-path edge count treating parallel edges as one adjacency;
    // kInfiniteDistance when unreachable.
    int distance(int u, int v) const;

    int component_count() const;
    std::vector<int> component_labels() const;
    bool connected() const;

    // --- structural queries (exhaustive, deterministic) ---
    std::vector<int> two_vertices() const;
    std::vector<int> cut_edges() const;
    // Nonadjacent edge pairs {e,f} whose removal disconnects their component.
    std::vector<std::pair<int, int>> matching_2_edge_cuts() const;
    // Simple vertex cycles of length exactly len (3 <= len <= 7), one
    // canonical orientation each, sorted.
    std::vector<std::vector<int>> cycles_of_length(int len) const;
    // A cycle is separating iff it is not a face boundary of the embedding.
    bool cycle_is_face(const std::vector<int>& cycle) const;
    std::vector<std::vector<int>> separating_cycles(int min_len, int max_len) const;
    std::vector<std::pair<int, int>> parallel_pairs() const;

  private:
    void trace_faces();

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> rotation_;
    std::vector<FaceWalk> faces_;
    std::vector<int> face_of_dart_;
};

// Subgraph induced by one connected component: returns the graph together
// with vertex and edge maps back into the host graph.
struct ComponentSubgraph {
    PlaneMultigraph graph;
    std::vector<int> vertex_to_host;
    std::vector<int> edge_to_host;
};

std::vector<ComponentSubgraph> split_components(const PlaneMultigraph& g);

}  // namespace kix

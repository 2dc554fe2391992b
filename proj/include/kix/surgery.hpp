#pragma once

#include <optional>
#include <vector>

#include "kix/graph.hpp"

namespace kix {

// Scratch graph for building reduced graphs: supports vertex/edge deletion
// and genus-preserving edge insertion (both corners on a common face).
// Tracks the host-graph origin of surviving edges.
class SurgeryGraph {
  public:
    explicit SurgeryGraph(const PlaneMultigraph& g);

    // Marks vertex (and its edges) deleted.
    void delete_vertex(int v);
    void delete_edge(int e);

    // Fresh isolated vertex; returns its id (ids extend the host's range).
    int add_vertex();

    // Inserts edge ab so that genus is preserved: if a and b lie in the same
    // component both corners are chosen on a common face (backtracking over
    // corner choices happens in the caller via try_insert_edges); across
    // components any corners work. Returns the new edge id, or nullopt when
    // a and b share a component but no common face.
    std::optional<int> add_edge(int a, int b);

    // Inserts the given endpoint pairs in order, backtracking over corner
    // placements until all succeed. Returns the new edge ids. Throws
    // BindingInvalid when no placement works (not expected on lemma-shaped
    // input).
    std::vector<int> insert_edges(const std::vector<std::pair<int, int>>& pairs);

    bool vertex_alive(int v) const { return alive_vertex_[v]; }
    bool edge_alive(int e) const { return alive_edge_[e]; }
    int degree(int v) const { return static_cast<int>(rotation_[v].size()); }

    // Validated PlaneMultigraph with dense ids, plus maps to surgery ids.
    struct Result {
        PlaneMultigraph graph;
        // Per surviving host edge: (host edge id, new edge id).
        std::vector<std::pair<int, int>> shared_edges;
        // Per inserted edge: new edge id, in insert order.
        std::vector<int> new_edges;
        std::vector<int> vertex_to_new;  // -1 for deleted host vertices
    };
    Result finalize() const;

  private:
    struct SEdge {
        int u;
        int v;
        int host;  // host edge id or -1 for inserted edges
    };

    int other(int e, int w) const { return edges_[e].u == w ? edges_[e].v : edges_[e].u; }
    std::vector<std::vector<std::pair<int, int>>> trace_faces() const;  // darts (edge, dir)
    std::vector<int> component_of() const;
    std::vector<std::pair<int, int>> placements(int a, int b) const;
    int apply_placement(int a, int b, std::pair<int, int> placement);
    void undo_placement(int a, int b);

    std::vector<SEdge> edges_;
    std::vector<std::vector<int>> rotation_;
    std::vector<char> alive_vertex_;
    std::vector<char> alive_edge_;
    std::vector<int> insert_order_;
};

}  // namespace kix

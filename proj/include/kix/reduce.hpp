#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kix/coloring.hpp"
#include "kix/graph.hpp"

namespace kix {

// Reducible patterns, in the fixed search priority C1 < C2 < ... < C15.
// Later kinds presume the earlier ones are absent.
enum class ConfigKind {
    C1ParallelPair = 1,       // parallel edge pair
    C2LowDegreeVertex,        // vertex of degree <= 1
    C3CutEdge,                // bridge
    C4Matching2EdgeCut,       // nonadjacent edge pair forming a cut
    C5Triangle,               // 3-cycle
    C6Close2Vertices,         // two 2-vertices at distance <= 2
    C7SeparatingCycle,        // separating 4- or 5-cycle
    C8FourCycle,              // 4-cycle
    C9Distance3TwoVertices,   // two 2-vertices at distance exactly 3
    C10BoundaryClose2Vertices,  // two 2-vertices at boundary distance <= 4
    C11TwoVertexOn5Cycle,     // 2-vertex on a 5-cycle
    C12TwoVertexOn6Cycle,     // 2-vertex on a 6-cycle
    C13TwoVertexOn7Face,      // 2-vertex on a 7-face
    C14Adjacent55Faces,       // two 5-faces sharing an edge
    C15Adjacent56Faces,       // a 5-face sharing an edge with a 6-face
};

const char* config_kind_name(ConfigKind kind);

struct Configuration {
    ConfigKind kind;
    std::vector<int> vertices;  // binding vertices; meaning depends on kind
    std::vector<int> edges;     // binding edges (C1, C3, C4)
    int face = -1;              // face index (C10, C13, C14, C15)
    int face2 = -1;             // second face (C14, C15)

    std::string describe() const;
};

// The reduced graph plus the correspondence imposing a coloring of it back
// onto the host graph.
struct ReductionStep {
    PlaneMultigraph reduced;
    // Surviving edges: (host edge id, reduced edge id); colors copy over.
    std::vector<std::pair<int, int>> shared;
    // Per inserted reduced edge: the host edges that receive its color.
    std::vector<std::pair<int, std::vector<int>>> lift_classes;
    // Host edges left uncolored for local extension.
    std::vector<int> uncolored;
    // Degeneracy notes (coinciding neighbors, parallel-creating inserts).
    std::vector<std::string> notes;
};

// First configuration in priority order, lexicographically least binding
// within its kind. Throws NoConfigurationFound (carrying a charge summary)
// when none is present; on a valid connected input this never happens.
Configuration find_configuration(const PlaneMultigraph& g);

// As find_configuration but returns nullopt instead of throwing.
std::optional<Configuration> try_find_configuration(const PlaneMultigraph& g);

// Builds the reduced graph per the configuration's kind. Not applicable to
// C3/C4 (those split the graph in two; see color5). Throws BindingInvalid.
ReductionStep reduce(const PlaneMultigraph& g, const Configuration& config);

// Imposes a good coloring of the reduced graph onto the host per the step's
// correspondence, verifying the result is a good partial coloring.
// Throws LiftNotGood naming an offending vertex pair.
PartialColoring lift(const PlaneMultigraph& g, const PartialColoring& phi_reduced,
                     const ReductionStep& step);

// Depth-first search over assignments of palette colors to the given edges
// with incremental goodness pruning; returns the lexicographically first
// good extension (edges in ascending id order, colors ascending) or nullopt
// after complete search.
std::optional<PartialColoring> extend_exhaustive(const PlaneMultigraph& g,
                                                 const PartialColoring& phi,
                                                 std::vector<int> uncolored_edges);

struct TraceEntry {
    std::string action;   // "base", configuration kind, or "split"
    std::string binding;
    int vertices = 0;
    int edges = 0;
};

// Components with at most this many vertices go straight to the exact solver.
inline constexpr int kBaseCaseVertices = 8;

// Total good coloring with k=2, t=5 (Theorem of record at desk scale).
// Splits into components; per component either solves exactly (small) or
// runs find -> reduce -> recurse -> lift -> extend. Throws ExtensionFailed
// carrying the reduction trace if search ever fails (a paper-refuting event).
PartialColoring color5(const PlaneMultigraph& g, std::vector<TraceEntry>* trace = nullptr);

}  // namespace kix

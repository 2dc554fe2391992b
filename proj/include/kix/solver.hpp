#pragma once

#include <cstdint>
#include <optional>

#include "kix/coloring.hpp"

namespace kix {

struct SolverOptions {
    // Canonical color-introduction order; disable for oracle cross-checks.
    bool symmetry_break = true;
    // Refuse instances above this many edges unless force is set.
    int edge_guard = 40;
    bool force = false;
};

struct SolveResult {
    bool feasible = false;
    int optimum = 0;
    PartialColoring witness;
    std::uint64_t nodes = 0;
};

struct ExistsResult {
    std::optional<PartialColoring> witness;
    std::uint64_t nodes = 0;
};

// Complete backtracking search for a total coloring passing is_good(g,.,k,t).
// Edges are ordered by descending endpoint degree sum (ties by id); colors
// are tried ascending, so the witness is deterministic. Throws
// MultiplicityAboveK when multiplicity exceeds k, SizeLimit past the guard.
ExistsResult exists_good_coloring(const PlaneMultigraph& g, int k, int t,
                                  const SolverOptions& opts = {});

// Minimum t admitting a good coloring, found by incremental search upward
// from the max-degree lower bound.
SolveResult chromatic_index_k_intersection(const PlaneMultigraph& g, int k,
                                           const SolverOptions& opts = {});

}  // namespace kix

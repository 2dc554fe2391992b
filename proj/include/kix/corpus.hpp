#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kix/graph.hpp"

namespace kix {

// Searches rotation systems (two cyclic orders per 3-vertex) for one whose
// face tracing passes the per-component Euler check. Returns the rotations
// of the first genus-0 system, or nullopt for nonplanar input.
std::optional<std::vector<std::vector<int>>> find_planar_embedding(
    int n, const std::vector<std::pair<int, int>>& edges);

// Builds a plane graph from an abstract simple graph via embedding search.
std::optional<PlaneMultigraph> embed(int n, const std::vector<std::pair<int, int>>& edges);

// Derives the rotation system of a plane graph from its face cycles
// (unoriented vertex cycles covering each edge twice). Intended for fixtures
// with known face structure (platonic solids and such).
PlaneMultigraph graph_from_faces(int n, const std::vector<std::vector<int>>& faces);

// All connected subcubic planar simple graphs with 1..max_vertices vertices,
// one per isomorphism class, each with one genus-0 embedding. Deterministic
// order; connected candidates failing the embedding search (nonplanar) are
// dropped and counted. Throws SizeLimit for max_vertices > 14.
std::vector<PlaneMultigraph> exhaustive_corpus(int max_vertices, int* dropped = nullptr);

// Seeded random subcubic planar multigraph (multiplicity <= 2), built by
// planarity-preserving operations; always passes build.
PlaneMultigraph random_planar_multigraph(int max_vertices, std::uint64_t seed);

std::vector<PlaneMultigraph> random_corpus(int max_vertices, std::uint64_t seed, int count);

}  // namespace kix

#include "kix/solver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace kix {

namespace {

void check_preconditions(const PlaneMultigraph& g, int k, const SolverOptions& opts) {
    for (const auto& [e, f] : g.parallel_pairs()) {
        (void)f;
        const Edge& a = g.edge(e);
        if (static_cast<int>(g.edges_between(a.u, a.v).size()) > k)
            throw Error(ErrorCode::MultiplicityAboveK,
                        "multiplicity exceeds k=" + std::to_string(k));
    }
    if (!opts.force && g.edge_count() > opts.edge_guard)
        throw Error(ErrorCode::SizeLimit, "instance has " + std::to_string(g.edge_count()) +
                                              " edges; pass force to override");
}

// Fail-first edge order: descending degree sum of endpoints, ties by id.
std::vector<int> edge_order(const PlaneMultigraph& g) {
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(g.edge(a).u) + g.degree(g.edge(a).v);
        int db = g.degree(g.edge(b).u) + g.degree(g.edge(b).v);
        if (da != db) return da > db;
        return a < b;
    });
    return order;
}

struct Search {
    const PlaneMultigraph& g;
    int k;
    int t;
    bool symmetry_break;
    std::vector<int> order;
    PartialColoring phi;
    std::uint64_t nodes = 0;

    bool run(std::size_t depth, int max_used) {
        if (depth == order.size()) return true;
        int e = order[depth];
        int limit = symmetry_break ? std::min(t, max_used + 1) : t;
        for (int c = 1; c <= limit; ++c) {
            ++nodes;
            phi.color[e] = c;
            if (is_good_delta(g, phi, k, e) &&
                run(depth + 1, std::max(max_used, c))) return true;
            phi.color[e] = 0;
        }
        return false;
    }
};

}  // namespace

ExistsResult exists_good_coloring(const PlaneMultigraph& g, int k, int t,
                                  const SolverOptions& opts) {
    check_preconditions(g, k, opts);
    Search s{g, k, t, opts.symmetry_break, edge_order(g), PartialColoring::empty(g, t)};
    ExistsResult out;
    if (s.run(0, 0)) out.witness = s.phi;
    out.nodes = s.nodes;
    return out;
}

SolveResult chromatic_index_k_intersection(const PlaneMultigraph& g, int k,
                                           const SolverOptions& opts) {
    check_preconditions(g, k, opts);
    SolveResult result;
    if (g.edge_count() == 0) {
        result.feasible = true;
        result.optimum = 0;
        result.witness = PartialColoring::empty(g, 1);
        return result;
    }
    int lower = 0;
    for (int v = 0; v < g.vertex_count(); ++v) lower = std::max(lower, g.degree(v));
    // With multiplicity <= k, all-distinct colors are good, so t = E suffices.
    for (int t = lower; t <= g.edge_count(); ++t) {
        ExistsResult r = exists_good_coloring(g, k, t, opts);
        result.nodes += r.nodes;
        if (r.witness) {
            result.feasible = true;
            result.optimum = t;
            result.witness = *r.witness;
            return result;
        }
    }
    throw Error(ErrorCode::InvalidInput, "no good coloring at t = E; unreachable");
}

}  // namespace kix

#pragma once

#include <cstdint>
#include <vector>

#include "kix/graph.hpp"

namespace kix {

// Subset of colors {1..t} as a bitmask (bit c-1 for color c).
class ColorSet {
  public:
    ColorSet() : mask_(0) {}
    explicit ColorSet(std::uint32_t mask) : mask_(mask) {}

    void add(int color) { mask_ |= 1u << (color - 1); }
    bool contains(int color) const { return mask_ & (1u << (color - 1)); }
    int size() const { return __builtin_popcount(mask_); }
    bool empty() const { return mask_ == 0; }
    std::uint32_t mask() const { return mask_; }

    ColorSet intersect(ColorSet o) const { return ColorSet(mask_ & o.mask_); }
    std::vector<int> to_list() const;

    friend bool operator==(ColorSet a, ColorSet b) { return a.mask_ == b.mask_; }
    friend bool operator!=(ColorSet a, ColorSet b) { return a.mask_ != b.mask_; }

  private:
    std::uint32_t mask_;
};

// Partial edge coloring over palette {1..t}; color 0 marks an uncolored edge.
struct PartialColoring {
    int palette = 5;
    std::vector<int> color;

    static PartialColoring empty(const PlaneMultigraph& g, int t) {
        return {t, std::vector<int>(g.edge_count(), 0)};
    }

    bool colored(int e) const { return color[e] != 0; }
    bool total() const {
        for (int c : color)
            if (c == 0) return false;
        return true;
    }
    int colored_count() const {
        int n = 0;
        for (int c : color) n += c != 0;
        return n;
    }
};

// Colors on the colored edges incident to v.
ColorSet used_colors(const PlaneMultigraph& g, const PartialColoring& phi, int v);

// True iff no two colored edges sharing a vertex share a color.
bool is_proper(const PlaneMultigraph& g, const PartialColoring& phi);

// True iff phi is proper and |U(u) ∩ U(v)| <= k for every adjacent pair u,v.
// Applies to partial colorings. Throws MultiplicityAboveK when g has a vertex
// pair with multiplicity > k.
bool is_good(const PlaneMultigraph& g, const PartialColoring& phi, int k, int t);

// Incremental form: assuming phi was good before edge e got its color, checks
// only the constraints touching e's endpoints. Same verdict as re-running
// is_good, without the multiplicity precondition check.
bool is_good_delta(const PlaneMultigraph& g, const PartialColoring& phi, int k, int e);

// Extends a good (k=2, t=5) partial coloring by coloring uv, where one
// endpoint has an empty color set. Tries all 5 colors and verifies; success
// is guaranteed by the preconditions. Throws PreconditionViolated otherwise.
PartialColoring extend_pendant(const PlaneMultigraph& g, const PartialColoring& phi, int uv_edge);

// Colors cycle_vertices[i] -> cycle_vertices[i+1] with colors[i] (mod length).
// No goodness check; the caller verifies. Throws NotACycle or
// EdgeAlreadyColored.
PartialColoring color_cycle_in_order(const PlaneMultigraph& g, const PartialColoring& phi,
                                     const std::vector<int>& cycle_vertices,
                                     const std::vector<int>& colors);

}  // namespace kix

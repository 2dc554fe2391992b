#include "kix/lab.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace kix {

namespace {

constexpr int kMaxColors = 5;

std::uint8_t full_mask(int t) { return static_cast<std::uint8_t>((1u << t) - 1); }

std::string mask_str(std::uint8_t m) {
    std::string s = "{";
    bool first = true;
    for (int c = 1; c <= kMaxColors; ++c)
        if (m & (1 << (c - 1))) {
            if (!first) s += ",";
            s += std::to_string(c);
            first = false;
        }
    return s + "}";
}

// All permutations of {1..t} as color maps perm[c-1] = image of c.
std::vector<std::array<std::uint8_t, kMaxColors>> color_permutations(int t) {
    std::array<std::uint8_t, kMaxColors> base{1, 2, 3, 4, 5};
    std::vector<std::array<std::uint8_t, kMaxColors>> out;
    std::array<std::uint8_t, kMaxColors> work = base;
    std::sort(work.begin(), work.begin() + t);
    do {
        std::array<std::uint8_t, kMaxColors> p = base;
        for (int i = 0; i < t; ++i) p[i] = work[i];
        out.push_back(p);
    } while (std::next_permutation(work.begin(), work.begin() + t));
    return out;
}

std::uint8_t permute_mask(std::uint8_t m, const std::array<std::uint8_t, kMaxColors>& p) {
    std::uint8_t out = 0;
    for (int c = 1; c <= kMaxColors; ++c)
        if (m & (1 << (c - 1))) out |= 1 << (p[c - 1] - 1);
    return out;
}

}  // namespace

std::string Environment::describe(const ConfigTemplate& tpl) const {
    std::ostringstream os;
    os << "classes";
    for (std::size_t i = 0; i < class_colors.size(); ++i)
        os << " c" << i << "=" << class_colors[i];
    for (int b : tpl.boundary) os << " U(v" << b << ")=" << mask_str(usets[b]);
    return os.str();
}

// ---------------------------------------------------------------------------
// template registry

namespace {

using Filter = ConfigTemplate::Filter;

Filter pair_bound(int a, int b) {
    return {"added-edge-pair-bound(v" + std::to_string(a) + ",v" + std::to_string(b) + ")",
            Filter::PairBound,
            {a, b}};
}
Filter classes_distinct(std::vector<int> cls, const std::string& family) {
    std::string name = family + "(";
    for (std::size_t i = 0; i < cls.size(); ++i)
        name += (i ? "," : "") + std::string("c") + std::to_string(cls[i]);
    return {name + ")", Filter::ClassesDistinct, std::move(cls)};
}
Filter star_leaf_bound(int c1, int c2, int c3, int leaf) {
    return {"star-leaf-bound(v" + std::to_string(leaf) + ")",
            Filter::StarLeafBound,
            {c1, c2, c3, leaf}};
}

// Small builder so the lemma shapes below read like the paper's pictures.
struct Builder {
    ConfigTemplate tpl;
    Builder(std::string id, std::string summary, int nv) {
        tpl.id = std::move(id);
        tpl.summary = std::move(summary);
        tpl.vertex_count = nv;
        tpl.extra_capacity.assign(nv, 0);
    }
    Builder& uncolored(int a, int b) {
        tpl.edges.push_back({a, b, -1});
        return *this;
    }
    Builder& cycle(int first, int last) {
        for (int i = first; i < last; ++i) uncolored(i, i + 1);
        uncolored(last, first);
        return *this;
    }
    Builder& colored(int a, int b, int cls) {
        tpl.edges.push_back({a, b, cls});
        tpl.classes = std::max(tpl.classes, cls + 1);
        return *this;
    }
    Builder& boundary(std::vector<int> vs, int extra = 2) {
        for (int v : vs) {
            tpl.boundary.push_back(v);
            tpl.extra_capacity[v] = extra;
        }
        return *this;
    }
    Builder& filter(Filter f) {
        tpl.filters.push_back(std::move(f));
        return *this;
    }
    Builder& star(int c1, int c2, int c3, std::vector<int> leaves) {
        filter(classes_distinct({c1, c2, c3}, "star-proper"));
        for (int leaf : leaves) filter(star_leaf_bound(c1, c2, c3, leaf));
        return *this;
    }
    Builder& check(ConfigTemplate::Check c) {
        tpl.check = c;
        return *this;
    }
};

std::vector<ConfigTemplate> build_templates() {
    std::vector<ConfigTemplate> out;

    {  // 3.1: parallel pair, slid endpoint. u=0 v=1 u'=2 v'=3.
        Builder b("3.1", "parallel pair; G' slides u onto u'v", 4);
        b.uncolored(0, 1).uncolored(0, 1).colored(0, 2, 0).colored(1, 3, 1);
        b.boundary({2, 3});
        b.filter(classes_distinct({0, 1}, "added-edge-proper"));
        out.push_back(b.tpl);
    }
    {  // 3.2: pendant edge at an untouched endpoint. u=0 v=1 v1=2 v2=3.
        Builder b("3.2", "pendant extension at an empty endpoint", 4);
        b.uncolored(0, 1).colored(1, 2, 0).colored(1, 3, 1);
        b.boundary({2, 3});
        b.boundary({0}, 0);  // U(u) is empty
        out.push_back(b.tpl);
    }
    {  // 3.3: 1-vertex. v=0 u=1 u1=2 u2=3.
        Builder b("3.3", "pendant vertex", 4);
        b.uncolored(0, 1).colored(1, 2, 0).colored(1, 3, 1);
        b.boundary({2, 3});
        out.push_back(b.tpl);
    }
    {  // 3.4: cut edge merge. v1=0 v2=1.
        Builder b("3.4", "cut-edge split; permutation merge", 2);
        b.colored(0, 1, 0);
        b.boundary({0, 1});
        b.check(ConfigTemplate::Check::MergeCutEdge);
        out.push_back(b.tpl);
    }
    {  // 3.5: matching 2-edge-cut merge. v1=0 v2=1 u1=2 u2=3.
        Builder b("3.5", "2-edge-cut split; permutation merge", 4);
        b.colored(0, 2, 0).colored(1, 3, 1);
        b.boundary({0, 1, 2, 3});
        b.filter(classes_distinct({0, 1}, "apex-proper"));
        b.check(ConfigTemplate::Check::MergeTwoEdgeCut);
        out.push_back(b.tpl);
    }
    {  // 3.6: triangle xyz. x=0 y=1 z=2 x1=3 y1=4 z1=5; yy1,zz1 share the
       // added y1z1 color; xx1 is colored free.
        Builder b("3.6", "triangle", 6);
        b.uncolored(0, 1).uncolored(0, 2).uncolored(1, 2);
        b.colored(0, 3, 0).colored(1, 4, 1).colored(2, 5, 1);
        b.boundary({3, 4, 5});
        b.filter(pair_bound(4, 5));
        out.push_back(b.tpl);
    }
    {  // 3.7: two 2-vertices x,y at distance 2 through v. x=0 y=1 v=2
       // x'=3 y'=4 z=5.
        Builder b("3.7", "2-vertices at distance two", 6);
        b.uncolored(0, 2).uncolored(1, 2);
        b.colored(0, 3, 0).colored(1, 4, 1).colored(2, 5, 2);
        b.boundary({3, 4, 5});
        out.push_back(b.tpl);
    }
    {  // 3.8: 4-cycle with a 2-vertex; hub construction. x0=0..x3=3, y=4..6.
        Builder b("3.8", "4-cycle with a 2-vertex", 7);
        b.cycle(0, 3);
        b.colored(1, 4, 0).colored(2, 5, 1).colored(3, 6, 2);
        b.boundary({4, 5, 6});
        b.star(0, 1, 2, {4, 5, 6});
        out.push_back(b.tpl);
    }
    {  // 3.9: 4-cycle, all 3-vertices. x0..x3 = 0..3, y0..y3 = 4..7.
        Builder b("3.9", "4-cycle", 8);
        b.cycle(0, 3);
        b.colored(0, 4, 0).colored(1, 5, 0).colored(2, 6, 1).colored(3, 7, 1);
        b.boundary({4, 5, 6, 7});
        b.filter(pair_bound(4, 5)).filter(pair_bound(6, 7));
        out.push_back(b.tpl);
    }
    {  // 3.10: 2-vertices at distance three. x0..x5 = 0..5, y2=6 y3=7.
        Builder b("3.10", "2-vertices at distance three", 8);
        b.colored(0, 1, 0).uncolored(1, 2).uncolored(2, 3).uncolored(3, 4).colored(4, 5, 1);
        b.colored(2, 6, 2).colored(3, 7, 2);
        b.boundary({0, 5, 6, 7});
        b.filter(pair_bound(6, 7));
        out.push_back(b.tpl);
    }
    {  // 3.11: 2-vertices at boundary distance four. x0..x6 = 0..6,
       // y2=7 y3=8 y4=9; x0x1 and x5x6 share the added x0x6 color.
        Builder b("3.11", "2-vertices at boundary distance four", 10);
        b.colored(0, 1, 0).uncolored(1, 2).uncolored(2, 3).uncolored(3, 4).uncolored(4, 5);
        b.colored(5, 6, 0);
        b.colored(2, 7, 1).colored(3, 8, 2).colored(4, 9, 3);
        b.boundary({0, 6, 7, 8, 9});
        b.filter(pair_bound(0, 6));
        b.star(1, 2, 3, {7, 8, 9});
        out.push_back(b.tpl);
    }
    {  // 4.1: 5-cycle with a 2-vertex x0. x0..x4 = 0..4, y1..y4 = 5..8.
        Builder b("4.1", "2-vertex on a 5-cycle", 9);
        b.cycle(0, 4);
        b.colored(1, 5, 0).colored(2, 6, 0).colored(3, 7, 1).colored(4, 8, 1);
        b.boundary({5, 6, 7, 8});
        b.filter(pair_bound(5, 6)).filter(pair_bound(7, 8));
        out.push_back(b.tpl);
    }
    {  // 4.2: 6-cycle with a 2-vertex x0. x0..x5 = 0..5, y1..y5 = 6..10.
        Builder b("4.2", "2-vertex on a 6-cycle", 11);
        b.cycle(0, 5);
        b.colored(1, 6, 0).colored(2, 7, 0).colored(3, 8, 1).colored(4, 9, 2).colored(5, 10, 2);
        b.boundary({6, 7, 8, 9, 10});
        b.filter(pair_bound(6, 7)).filter(pair_bound(9, 10));
        out.push_back(b.tpl);
    }
    {  // 4.3: 7-face with a 2-vertex x0. x0..x6 = 0..6, y1..y6 = 7..12.
        Builder b("4.3", "2-vertex on a 7-face", 13);
        b.cycle(0, 6);
        b.colored(1, 7, 0).colored(2, 8, 0).colored(3, 9, 1).colored(4, 10, 1);
        b.colored(5, 11, 2).colored(6, 12, 2);
        b.boundary({7, 8, 9, 10, 11, 12});
        b.filter(pair_bound(7, 8)).filter(pair_bound(9, 10)).filter(pair_bound(11, 12));
        out.push_back(b.tpl);
    }
    {  // 5.1: adjacent 5-5 faces; 8-cycle x0..x7 with chord x4x0, two hubs.
       // y1,y2,y3 = 8..10; y5,y6,y7 = 11..13.
        Builder b("5.1", "adjacent 5-faces", 14);
        b.cycle(0, 7);
        b.uncolored(0, 4);
        b.colored(1, 8, 0).colored(2, 9, 1).colored(3, 10, 2);
        b.colored(5, 11, 3).colored(6, 12, 4).colored(7, 13, 5);
        b.boundary({8, 9, 10, 11, 12, 13});
        b.star(0, 1, 2, {8, 9, 10});
        b.star(3, 4, 5, {11, 12, 13});
        out.push_back(b.tpl);
    }
    {  // 5.2: 5-face adjacent to a 6-face; 9-cycle x0..x8 with chord x5x0.
       // y1..y4 = 9..12, y6..y8 = 13..15.
        Builder b("5.2", "5-face adjacent to a 6-face", 16);
        b.cycle(0, 8);
        b.uncolored(0, 5);
        b.colored(1, 9, 0).colored(2, 10, 0).colored(3, 11, 1).colored(4, 12, 1);
        b.colored(6, 13, 2).colored(7, 14, 3).colored(8, 15, 4);
        b.boundary({9, 10, 11, 12, 13, 14, 15});
        b.filter(pair_bound(9, 10)).filter(pair_bound(11, 12));
        b.star(2, 3, 4, {13, 14, 15});
        out.push_back(b.tpl);
    }
    return out;
}

const std::vector<ConfigTemplate>& templates() {
    static const std::vector<ConfigTemplate> tpls = build_templates();
    return tpls;
}

bool filter_disabled(const Filter& f, const std::vector<std::string>& disabled) {
    for (const std::string& d : disabled) {
        if (d == f.name) return true;
        // Family prefix, e.g. "star-proper" disables every instance.
        if (f.name.size() > d.size() && f.name.compare(0, d.size(), d) == 0 &&
            f.name[d.size()] == '(')
            return true;
    }
    return false;
}

// Per-template constants for the hot loops.
struct TemplateRuntime {
    const ConfigTemplate& tpl;
    int t;
    int k;
    std::vector<Filter> filters;  // enabled ones
    std::vector<ConfigTemplate::TEdge> colored_edges;
    std::vector<ConfigTemplate::TEdge> uncolored_edges;
    std::vector<std::vector<int>> adjacency;  // template neighbors per vertex
    std::vector<char> is_boundary;

    TemplateRuntime(const ConfigTemplate& tpl_, int k_, int t_,
                    const std::vector<std::string>& disabled)
        : tpl(tpl_), t(t_), k(k_) {
        for (const Filter& f : tpl.filters)
            if (!filter_disabled(f, disabled)) filters.push_back(f);
        for (const auto& e : tpl.edges)
            (e.cls < 0 ? uncolored_edges : colored_edges).push_back(e);
        adjacency.resize(tpl.vertex_count);
        for (const auto& e : tpl.edges) {
            adjacency[e.a].push_back(e.b);
            adjacency[e.b].push_back(e.a);
        }
        is_boundary.assign(tpl.vertex_count, 0);
        for (int b : tpl.boundary) is_boundary[b] = 1;
    }

    bool filters_pass(const Environment& env, int k) const {
        for (const Filter& f : filters) {
            switch (f.kind) {
                case Filter::PairBound:
                    if (__builtin_popcount(env.usets[f.args[0]] & env.usets[f.args[1]]) > k)
                        return false;
                    break;
                case Filter::ClassesDistinct: {
                    std::uint8_t seen = 0;
                    for (int cls : f.args) {
                        std::uint8_t bit = 1 << (env.class_colors[cls] - 1);
                        if (seen & bit) return false;
                        seen |= bit;
                    }
                    break;
                }
                case Filter::StarLeafBound: {
                    std::uint8_t star = 0;
                    for (int i = 0; i < 3; ++i) star |= 1 << (env.class_colors[f.args[i]] - 1);
                    if (__builtin_popcount(star & env.usets[f.args[3]]) > k) return false;
                    break;
                }
            }
        }
        return true;
    }

    // Colors visible at each vertex before extension: class colors of its
    // colored edges, plus the declared U-set at boundary vertices.
    using Masks = std::array<std::uint8_t, 32>;
    void static_masks(const Environment& env, Masks& mask) const {
        mask.fill(0);
        for (const auto& e : colored_edges) {
            std::uint8_t bit = 1 << (env.class_colors[e.cls] - 1);
            mask[e.a] |= bit;
            mask[e.b] |= bit;
        }
        for (int b : tpl.boundary) mask[b] |= env.usets[b];
    }

    // Properness of the colored template edges at shared vertices; depends
    // only on the class tuple.
    bool classes_proper(const std::vector<int>& class_colors) const {
        Masks own;
        own.fill(0);
        for (const auto& e : colored_edges) {
            std::uint8_t bit = 1 << (class_colors[e.cls] - 1);
            for (int v : {e.a, e.b}) {
                if (own[v] & bit) return false;
                own[v] |= bit;
            }
        }
        return true;
    }

    // The base coloring must be a plausible good partial: pair bound along
    // template edges (properness is checked per tuple in classes_proper).
    bool base_consistent(const Environment& env) const {
        if (tpl.check != ConfigTemplate::Check::Extension) return true;
        Masks mask;
        static_masks(env, mask);
        for (const auto& e : tpl.edges)
            if (__builtin_popcount(mask[e.a] & mask[e.b]) > k) return false;
        return true;
    }
};

// Depth-first extension over the uncolored edges; first-found, colors
// ascending. Masks mix declared U-sets with dynamically assigned colors.
bool extendable(const TemplateRuntime& rt, const Environment& env, int k,
                std::string* witness) {
    TemplateRuntime::Masks mask;
    rt.static_masks(env, mask);
    const auto& edges = rt.uncolored_edges;
    std::array<int, 16> chosen{};
    auto pair_ok = [&](int v) {
        for (int w : rt.adjacency[v])
            if (__builtin_popcount(mask[v] & mask[w]) > k) return false;
        return true;
    };
    auto dfs = [&](auto&& self, std::size_t i) -> bool {
        if (i == edges.size()) return true;
        const auto& e = edges[i];
        for (int c = 1; c <= rt.t; ++c) {
            std::uint8_t bit = 1 << (c - 1);
            if ((mask[e.a] & bit) || (mask[e.b] & bit)) continue;  // properness
            mask[e.a] |= bit;
            mask[e.b] |= bit;
            chosen[i] = c;
            if (pair_ok(e.a) && pair_ok(e.b) && self(self, i + 1)) return true;
            mask[e.a] &= ~bit;
            mask[e.b] &= ~bit;
            chosen[i] = 0;
        }
        return false;
    };
    bool ok = dfs(dfs, 0);
    if (ok && witness) {
        std::ostringstream os;
        for (std::size_t i = 0; i < edges.size(); ++i)
            os << (i ? " " : "") << "v" << edges[i].a << "v" << edges[i].b << "=" << chosen[i];
        *witness = os.str();
    }
    return ok;
}

// Merge checks for the cut lemmas: a color permutation of one side must
// align the cut colors and keep the cross-cut intersections within k.
bool merge_check(const TemplateRuntime& rt, const Environment& env, int k) {
    static const auto perms5 = color_permutations(5);
    static const auto perms4 = color_permutations(4);
    static const auto perms3 = color_permutations(3);
    const auto& perms = rt.t == 5 ? perms5 : (rt.t == 4 ? perms4 : perms3);
    if (rt.tpl.check == ConfigTemplate::Check::MergeCutEdge) {
        int c = env.class_colors[0];
        for (const auto& p : perms) {
            if (p[c - 1] != c) continue;
            if (__builtin_popcount(env.usets[0] & permute_mask(env.usets[1], p)) <= k)
                return true;
        }
        return false;
    }
    int c0 = env.class_colors[0], c1 = env.class_colors[1];
    for (const auto& p : perms) {
        if (p[c0 - 1] != c0 || p[c1 - 1] != c1) continue;
        if (__builtin_popcount(env.usets[0] & permute_mask(env.usets[2], p)) <= k &&
            __builtin_popcount(env.usets[1] & permute_mask(env.usets[3], p)) <= k)
            return true;
    }
    return false;
}

// Enumerates restricted-growth class tuples (canonical under color
// permutation) and, per tuple, U-set combinations canonical under the
// tuple's stabilizer.
struct Enumerator {
    const TemplateRuntime& rt;
    std::vector<std::array<std::uint8_t, kMaxColors>> all_perms;

    explicit Enumerator(const TemplateRuntime& rt_) : rt(rt_) {
        all_perms = color_permutations(rt.t);
    }

    std::vector<std::vector<int>> class_tuples() const {
        std::vector<std::vector<int>> out;
        std::vector<int> cur(rt.tpl.classes, 0);
        auto rec = [&](auto&& self, int i, int max_used) -> void {
            if (i == rt.tpl.classes) {
                out.push_back(cur);
                return;
            }
            for (int c = 1; c <= std::min(rt.t, max_used + 1); ++c) {
                cur[i] = c;
                self(self, i + 1, std::max(max_used, c));
            }
        };
        if (rt.tpl.classes == 0)
            out.push_back({});
        else
            rec(rec, 0, 0);
        return out;
    }

    std::vector<std::array<std::uint8_t, kMaxColors>> stabilizer(
        const std::vector<int>& tuple) const {
        std::vector<std::array<std::uint8_t, kMaxColors>> out;
        for (const auto& p : all_perms) {
            bool fixes = true;
            for (int c : tuple) fixes = fixes && p[c - 1] == c;
            if (fixes) out.push_back(p);
        }
        return out;
    }

    // Streams canonical environments for one class tuple. Returns false when
    // the callback stopped the run.
    bool run_tuple(const std::vector<int>& tuple,
                   const std::function<bool(const Environment&)>& cb) const {
        if (!rt.classes_proper(tuple)) return true;
        const auto stab = stabilizer(tuple);
        Environment env;
        env.class_colors = tuple;
        env.usets.assign(rt.tpl.vertex_count, 0);
        // Lifted colors per boundary vertex.
        std::vector<std::uint8_t> lifted(rt.tpl.vertex_count, 0);
        for (const auto& e : rt.colored_edges) {
            std::uint8_t bit = 1 << (tuple[e.cls] - 1);
            lifted[e.a] |= bit;
            lifted[e.b] |= bit;
        }
        // Subset options per boundary vertex.
        std::vector<std::vector<std::uint8_t>> options;
        for (int b : rt.tpl.boundary) {
            std::vector<std::uint8_t> opts;
            std::uint8_t free = full_mask(rt.t) & ~lifted[b];
            for (std::uint8_t s = 0;; s = (s - free) & free) {
                if (__builtin_popcount(s) <= rt.tpl.extra_capacity[b])
                    opts.push_back(lifted[b] | s);
                if (s == free) break;
            }
            std::sort(opts.begin(), opts.end());
            options.push_back(opts);
        }
        const std::size_t nb = rt.tpl.boundary.size();
        std::vector<std::size_t> idx(nb, 0);
        auto canonical = [&]() {
            if (stab.size() <= 1) return true;
            for (const auto& p : stab) {
                // Compare the permuted U-set vector lexicographically.
                for (std::size_t i = 0; i < nb; ++i) {
                    std::uint8_t orig = env.usets[rt.tpl.boundary[i]];
                    std::uint8_t perm = permute_mask(orig, p);
                    if (perm < orig) return false;
                    if (perm > orig) break;
                }
            }
            return true;
        };
        auto rec = [&](auto&& self, std::size_t i) -> bool {
            if (i == nb) {
                if (!canonical()) return true;
                if (!rt.base_consistent(env)) return true;
                if (!rt.filters_pass(env, rt.k)) return true;
                return cb(env);
            }
            for (std::size_t o = 0; o < options[i].size(); ++o) {
                env.usets[rt.tpl.boundary[i]] = options[i][o];
                if (!self(self, i + 1)) return false;
            }
            return true;
        };
        return rec(rec, 0);
    }
};

}  // namespace

std::vector<std::string> lab_lemma_ids() {
    std::vector<std::string> ids;
    for (const ConfigTemplate& t : templates()) ids.push_back(t.id);
    return ids;
}

const ConfigTemplate& lab_template(const std::string& lemma_id) {
    for (const ConfigTemplate& t : templates())
        if (t.id == lemma_id) return t;
    throw Error(ErrorCode::UnknownLemmaId, "no template for lemma " + lemma_id);
}

std::uint64_t enumerate_environments(const ConfigTemplate& tpl, int t,
                                     const std::vector<std::string>& disabled_filters,
                                     const std::function<bool(const Environment&)>& cb) {
    TemplateRuntime rt(tpl, 2, t, disabled_filters);
    Enumerator en(rt);
    std::uint64_t count = 0;
    for (const auto& tuple : en.class_tuples()) {
        bool keep_going = en.run_tuple(tuple, [&](const Environment& env) {
            ++count;
            return cb(env);
        });
        if (!keep_going) break;
    }
    return count;
}

bool environment_extendable(const ConfigTemplate& tpl, int k, int t, const Environment& env) {
    TemplateRuntime rt(tpl, k, t, {});
    if (tpl.check != ConfigTemplate::Check::Extension) return merge_check(rt, env, k);
    return extendable(rt, env, k, nullptr);
}

bool environment_admissible(const ConfigTemplate& tpl, int k, int t, const Environment& env) {
    TemplateRuntime rt(tpl, k, t, {});
    return rt.classes_proper(env.class_colors) && rt.base_consistent(env) &&
           rt.filters_pass(env, k);
}

ReducibilityReport verify_reducible(const ConfigTemplate& tpl, int k, int t,
                                    const LabOptions& opts) {
    auto started = std::chrono::steady_clock::now();
    ReducibilityReport report;
    report.lemma_id = tpl.id;
    report.k = k;
    report.t = t;
    TemplateRuntime rt(tpl, k, t, opts.disabled_filters);
    for (const Filter& f : rt.filters) report.active_filters.push_back(f.name);

    Enumerator en(rt);
    std::vector<std::vector<int>> tuples = en.class_tuples();
    std::atomic<std::uint64_t> total{0}, extendable_count{0}, failure_count{0};
    std::atomic<bool> out_of_budget{false};
    std::atomic<std::size_t> next_tuple{0};
    std::mutex failures_mutex;
    std::vector<FailingEnvironment> failures;

    auto worker = [&]() {
        std::uint64_t since_check = 0;
        for (;;) {
            std::size_t i = next_tuple.fetch_add(1);
            if (i >= tuples.size() || out_of_budget.load(std::memory_order_relaxed)) return;
            en.run_tuple(tuples[i], [&](const Environment& env) {
                total.fetch_add(1, std::memory_order_relaxed);
                bool ok = tpl.check == ConfigTemplate::Check::Extension
                              ? extendable(rt, env, k, nullptr)
                              : merge_check(rt, env, k);
                if (ok) {
                    extendable_count.fetch_add(1, std::memory_order_relaxed);
                } else {
                    failure_count.fetch_add(1, std::memory_order_relaxed);
                    std::lock_guard<std::mutex> lock(failures_mutex);
                    if (failures.size() < opts.max_failures_kept)
                        failures.push_back(
                            {env, env.describe(tpl) +
                                      ": complete search found no extension"
                                      " (environment admissible under the active filters)"});
                }
                if (++since_check >= 8192) {
                    since_check = 0;
                    double secs = std::chrono::duration<double>(
                                      std::chrono::steady_clock::now() - started)
                                      .count();
                    if (secs > opts.budget_secs) {
                        out_of_budget.store(true, std::memory_order_relaxed);
                        return false;
                    }
                }
                return !out_of_budget.load(std::memory_order_relaxed);
            });
        }
    };
    int nthreads = std::max(1, opts.threads);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    report.total_environments = total.load();
    report.extendable = extendable_count.load();
    report.failure_count = failure_count.load();
    std::sort(failures.begin(), failures.end(),
              [](const FailingEnvironment& a, const FailingEnvironment& b) {
                  return a.transcript < b.transcript;
              });
    report.failures = std::move(failures);
    report.budget_exhausted = out_of_budget.load();
    report.certified = report.failure_count == 0 && !report.budget_exhausted;
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

std::vector<ReducibilityReport> verify_all(const std::vector<std::string>& lemma_ids, int k,
                                           int t, const LabOptions& opts) {
    std::vector<ReducibilityReport> out;
    for (const std::string& id : lemma_ids) out.push_back(verify_reducible(lab_template(id), k, t, opts));
    return out;
}

}  // namespace kix

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kix/errors.hpp"

namespace kix {

// A configuration template abstracts one lemma's local picture: interior
// vertices whose edges all lie in the template, boundary vertices known only
// through their color sets, colored boundary edges grouped into shared-color
// classes (the reduced graph's imposition), and the uncolored edges the
// extension must color.
struct ConfigTemplate {
    struct TEdge {
        int a;
        int b;
        int cls;  // color class index, or -1 for an uncolored edge
    };
    struct Filter {
        enum Kind { PairBound, ClassesDistinct, StarLeafBound };
        std::string name;
        Kind kind;
        // PairBound: {vertex a, vertex b}; ClassesDistinct: class indices;
        // StarLeafBound: {cls1, cls2, cls3, leaf vertex}.
        std::vector<int> args;
    };

    std::string id;       // lemma id, e.g. "3.9"
    std::string summary;
    int vertex_count = 0;
    std::vector<int> boundary;        // boundary vertex ids
    std::vector<int> extra_capacity;  // per vertex: colors beyond the lifted ones
    std::vector<TEdge> edges;
    int classes = 0;
    std::vector<Filter> filters;

    // Merge-style lemmas (cut arguments) verify a permutation merge instead
    // of an extension search.
    enum class Check { Extension, MergeCutEdge, MergeTwoEdgeCut };
    Check check = Check::Extension;
};

// An enumerated boundary precoloring: colors per class plus a color set per
// vertex (meaningful at boundary vertices).
struct Environment {
    std::vector<int> class_colors;
    std::vector<std::uint8_t> usets;  // bitmasks over colors 1..t

    std::string describe(const ConfigTemplate& tpl) const;
};

struct FailingEnvironment {
    Environment env;
    std::string transcript;
};

struct ReducibilityReport {
    std::string lemma_id;
    int k = 2;
    int t = 5;
    std::uint64_t total_environments = 0;
    std::uint64_t extendable = 0;
    std::vector<FailingEnvironment> failures;  // capped; failure_count is exact
    std::uint64_t failure_count = 0;
    bool budget_exhausted = false;
    bool certified = false;  // zero failures and budget not exhausted
    double wall_seconds = 0;
    std::vector<std::string> active_filters;
};

struct LabOptions {
    double budget_secs = 600;
    std::vector<std::string> disabled_filters;
    int threads = 1;
    std::size_t max_failures_kept = 50;
};

// Registered templates cover the extension lemmas 3.1-3.3, 3.6-3.11, 4.1-4.3,
// 5.1, 5.2 plus the merge lemmas 3.4, 3.5.
std::vector<std::string> lab_lemma_ids();
const ConfigTemplate& lab_template(const std::string& lemma_id);  // UnknownLemmaId

// Streams every admissible environment (modulo color permutation) to the
// callback; stops early if it returns false. Returns environments seen.
std::uint64_t enumerate_environments(const ConfigTemplate& tpl, int t,
                                     const std::vector<std::string>& disabled_filters,
                                     const std::function<bool(const Environment&)>& cb);

// True when the environment's uncolored edges admit a good extension.
bool environment_extendable(const ConfigTemplate& tpl, int k, int t, const Environment& env);

// True when the environment passes base consistency and every filter; the
// enumeration emits exactly the admissible environments (one per color
// permutation class).
bool environment_admissible(const ConfigTemplate& tpl, int k, int t, const Environment& env);

ReducibilityReport verify_reducible(const ConfigTemplate& tpl, int k, int t,
                                    const LabOptions& opts = {});

std::vector<ReducibilityReport> verify_all(const std::vector<std::string>& lemma_ids, int k,
                                           int t, const LabOptions& opts = {});

}  // namespace kix

#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "kix/lab.hpp"
#include "kix/reduce.hpp"

using namespace kix;
namespace fx = kix::fixtures;

TEST_CASE("lemma registry covers the extension and merge lemmas") {
    auto ids = lab_lemma_ids();
    CHECK(ids.size() == 16);
    CHECK_NOTHROW(lab_template("3.2"));
    CHECK_NOTHROW(lab_template("5.1"));
    CHECK_THROWS_WITH_AS(lab_template("9.9"), doctest::Contains("UnknownLemmaId"), Error);
}

TEST_CASE("3.2 environment count is small and fully certified") {
    const ConfigTemplate& tpl = lab_template("3.2");
    std::uint64_t n = enumerate_environments(tpl, 5, {}, [](const Environment&) { return true; });
    CHECK(n > 0);
    CHECK(n < 1000);
    ReducibilityReport r = verify_reducible(tpl, 2, 5);
    CHECK(r.certified);
    CHECK(r.failure_count == 0);
    CHECK(r.total_environments == n);
}

TEST_CASE("quick lemmas certify at k=2 t=5") {
    for (const char* id : {"3.1", "3.3", "3.6", "3.7", "3.8", "3.9", "3.10"}) {
        CAPTURE(id);
        ReducibilityReport r = verify_reducible(lab_template(id), 2, 5);
        CHECK(r.certified);
        CHECK(r.failure_count == 0);
        CHECK(r.total_environments > 0);
    }
}

TEST_CASE("merge lemmas certify at k=2 t=5") {
    for (const char* id : {"3.4", "3.5"}) {
        CAPTURE(id);
        ReducibilityReport r = verify_reducible(lab_template(id), 2, 5);
        CHECK(r.certified);
    }
}

TEST_CASE("negative control: 3.9 at t=4 has failing environments") {
    ReducibilityReport r = verify_reducible(lab_template("3.9"), 2, 4);
    CHECK_FALSE(r.certified);
    CHECK(r.failure_count >= 1);
    CHECK_FALSE(r.failures.empty());
}

TEST_CASE("filters only remove environments") {
    for (const char* id : {"3.6", "3.9"}) {
        CAPTURE(id);
        const ConfigTemplate& tpl = lab_template(id);
        std::uint64_t with =
            enumerate_environments(tpl, 5, {}, [](const Environment&) { return true; });
        std::uint64_t without = enumerate_environments(
            tpl, 5, {"added-edge-pair-bound"}, [](const Environment&) { return true; });
        CHECK(without > with);
    }
}

TEST_CASE("permutation soundness: extendability is invariant under color permutation") {
    const ConfigTemplate& tpl = lab_template("3.9");
    std::mt19937 rng(4242);
    int sampled = 0;
    enumerate_environments(tpl, 5, {}, [&](const Environment& env) {
        if (rng() % 97 != 0) return true;
        ++sampled;
        bool base = environment_extendable(tpl, 2, 5, env);
        // Apply a random permutation of {1..5}.
        std::array<int, 5> p{1, 2, 3, 4, 5};
        std::shuffle(p.begin(), p.end(), rng);
        Environment permuted = env;
        for (int& c : permuted.class_colors) c = p[c - 1];
        for (std::uint8_t& m : permuted.usets) {
            std::uint8_t out = 0;
            for (int c = 1; c <= 5; ++c)
                if (m & (1 << (c - 1))) out |= 1 << (p[c - 1] - 1);
            m = out;
        }
        CHECK(environment_extendable(tpl, 2, 5, permuted) == base);
        return sampled < 60;
    });
    CHECK(sampled > 10);
}

TEST_CASE("environments from real reductions are admissible and extendable") {
    // 4-face reduction on the cube lands in the 3.9 template.
    {
        PlaneMultigraph cube = fx::cube();
        Configuration cfg = find_configuration(cube);
        REQUIRE(cfg.kind == ConfigKind::C8FourCycle);
        ReductionStep step = reduce(cube, cfg);
        PartialColoring lifted = lift(cube, color5(step.reduced), step);
        const ConfigTemplate& tpl = lab_template("3.9");
        Environment env;
        REQUIRE(step.lift_classes.size() == 2);
        for (const auto& [mine, hosts] : step.lift_classes) {
            (void)mine;
            env.class_colors.push_back(lifted.color[hosts[0]]);
        }
        env.usets.assign(tpl.vertex_count, 0);
        const auto& cyc = cfg.vertices;
        for (int i = 0; i < 4; ++i) {
            int prev = cyc[(i + 3) % 4], next = cyc[(i + 1) % 4];
            int y = -1;
            for (int e : cube.incident_edges(cyc[i])) {
                int w = cube.edge(e).other(cyc[i]);
                if (w != prev && w != next) y = w;
            }
            REQUIRE(y >= 0);
            env.usets[4 + i] =
                static_cast<std::uint8_t>(used_colors(cube, lifted, y).mask());
        }
        CHECK(environment_admissible(tpl, 2, 5, env));
        CHECK(environment_extendable(tpl, 2, 5, env));
    }
    // Adjacent 5-faces on the dodecahedron land in the 5.1 template.
    {
        PlaneMultigraph d = fx::dodecahedron();
        Configuration cfg = find_configuration(d);
        REQUIRE(cfg.kind == ConfigKind::C14Adjacent55Faces);
        ReductionStep step = reduce(d, cfg);
        PartialColoring lifted = lift(d, color5(step.reduced), step);
        const ConfigTemplate& tpl = lab_template("5.1");
        Environment env;
        env.usets.assign(tpl.vertex_count, 0);
        REQUIRE(step.lift_classes.size() == 6);
        int slot = 0;
        for (const auto& [mine, hosts] : step.lift_classes) {
            (void)mine;
            REQUIRE(hosts.size() == 1);
            env.class_colors.push_back(lifted.color[hosts[0]]);
            const Edge& he = d.edge(hosts[0]);
            // The endpoint with uncolored incident edges sits on the removed
            // cycle; the other endpoint is y_i.
            int a_deg_uncolored = 0;
            for (int e : d.incident_edges(he.u)) a_deg_uncolored += !lifted.colored(e);
            int yv = a_deg_uncolored > 0 ? he.v : he.u;
            env.usets[tpl.boundary[slot]] =
                static_cast<std::uint8_t>(used_colors(d, lifted, yv).mask());
            ++slot;
        }
        CHECK(environment_admissible(tpl, 2, 5, env));
        CHECK(environment_extendable(tpl, 2, 5, env));
    }
}

TEST_CASE("budget exhaustion is reported, not hidden") {
    LabOptions opts;
    opts.budget_secs = 0.0;
    ReducibilityReport r = verify_reducible(lab_template("4.3"), 2, 5, opts);
    CHECK((r.budget_exhausted || r.certified));
    if (r.budget_exhausted) CHECK_FALSE(r.certified);
}

TEST_CASE("verify_all returns one report per id and rejects unknown ids") {
    auto reports = verify_all({"3.2", "3.6"}, 2, 5);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].lemma_id == "3.2");
    CHECK(reports[1].lemma_id == "3.6");
    CHECK(verify_all({}, 2, 5).empty());
    CHECK_THROWS_AS(verify_all({"1.1"}, 2, 5), Error);
}

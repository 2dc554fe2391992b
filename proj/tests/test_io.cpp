#include <doctest.h>

#include "fixtures.hpp"
#include "kix/corpus.hpp"
#include "kix/io.hpp"

using namespace kix;
namespace fx = kix::fixtures;

TEST_CASE("graph format round trip is lossless including rotation") {
    for (int seed = 0; seed < 30; ++seed) {
        PlaneMultigraph g = random_planar_multigraph(15, 7700 + seed);
        PlaneMultigraph back = parse_graph_string(print_graph(g));
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edge_count() == g.edge_count());
        CHECK(back.rotation() == g.rotation());
        for (int e = 0; e < g.edge_count(); ++e) {
            CHECK(back.edge(e).u == g.edge(e).u);
            CHECK(back.edge(e).v == g.edge(e).v);
        }
    }
}

TEST_CASE("graph format accepts comments and rejects junk") {
    PlaneMultigraph g = parse_graph_string(
        "# triangle\n"
        "kix-graph 1\n"
        "3 3\n"
        "edge 0 0 1\n"
        "edge 1 1 2  # second edge\n"
        "edge 2 2 0\n"
        "rot 0 0 2\n"
        "rot 1 0 1\n"
        "rot 2 1 2\n");
    CHECK(g.edge_count() == 3);
    CHECK_THROWS_WITH_AS(parse_graph_string("nope"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse_graph_string("kix-graph 2\n0 0\n"),
                         doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(
        parse_graph_string("kix-graph 1\n2 1\nedge 4 0 1\nrot 0 0\nrot 1 0\n"),
        doctest::Contains("ParseError"), Error);
}

TEST_CASE("coloring format round trip") {
    PlaneMultigraph g = fx::k4();
    PartialColoring phi = PartialColoring::empty(g, 5);
    phi.color = {1, 2, 4, 5, 3, 0};
    PartialColoring back = parse_coloring_string(print_coloring(phi), g);
    CHECK(back.palette == 5);
    CHECK(back.color == phi.color);
    CHECK_THROWS_WITH_AS(parse_coloring_string("color 0 1\n", g),
                         doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse_coloring_string("palette 5\ncolor 99 1\n", g),
                         doctest::Contains("ParseError"), Error);
}

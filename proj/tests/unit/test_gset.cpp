#include <doctest.h>

#include <random>
#include <string>

#include "brimsim/errors.hpp"
#include "brimsim/generator.hpp"
#include "brimsim/gset.hpp"

using namespace brimsim;

TEST_CASE("parses the documented layout") {
    const Graph g = parse_gset("3 2\n1 2 1\n2 3 -1\n");
    REQUIRE(g.n() == 3);
    REQUIRE(g.edge_count() == 2);
    CHECK(g.edges()[0] == Edge{0, 1, 1.0});
    CHECK(g.edges()[1] == Edge{1, 2, -1.0});
}

TEST_CASE("duplicate pairs merge by summation") {
    const Graph g = parse_gset("2 2\n1 2 1\n1 2 2\n");
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edges()[0] == Edge{0, 1, 3.0});
}

TEST_CASE("accepts blank lines and decimal weights") {
    const Graph g = parse_gset("\n  \n2 1\n1 2 0.25\n\n");
    CHECK(g.edges()[0] == Edge{0, 1, 0.25});
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_gset("2 1\n1 2\n"), "line 2: edge line must hold 'i j w'",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_gset("2 1\n1 3 1\n"),
                         "line 2: vertex index out of range [1, 2]", ParseError);
    CHECK_THROWS_WITH_AS(parse_gset("2 2\n1 2 1\n"),
                         "line 2: header promised 2 edges, file holds 1", ParseError);
    CHECK_THROWS_AS(parse_gset("2 0\n1 2 1\n"), ParseError); // count mismatch (excess)
    CHECK_THROWS_AS(parse_gset(""), ParseError);
    CHECK_THROWS_AS(parse_gset("x y\n"), ParseError);
    CHECK_THROWS_AS(parse_gset("2 1\n1 1 4\n"), ParseError); // self loop
}

TEST_CASE("serialize then parse is the identity") {
    std::mt19937_64 seeds(3);
    for (int trial = 0; trial < 8; ++trial) {
        const Graph g = trial % 2 == 0
                            ? gen_random_graph(20, 0.3, WeightModel::ints(-9, 9), seeds())
                            : gen_random_graph(15, 0.5, WeightModel::reals(-1, 1), seeds());
        const Graph back = parse_gset(serialize_gset(g));
        CHECK(back == g);
    }
}

TEST_CASE("integer weights print without a decimal point") {
    const Graph g(2, {{0, 1, 3.0}});
    CHECK(serialize_gset(g) == "2 1\n1 2 3\n");
}

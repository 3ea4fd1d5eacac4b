#include <random>
#include <stdexcept>

#include <doctest.h>

#include "oracles.hpp"
#include "test_util.hpp"
#include "walkpower/projective_cubes.hpp"
#include "walkpower/walk_powers.hpp"

using namespace walkpower;
using namespace walkpower::testutil;

TEST_CASE("the first walk-power is the graph itself") {
    for (const Graph& g : {cycle_graph(5), cycle_graph(6), complete_graph(4), path_graph(7)})
        CHECK(walk_power(g, 1) == g);
}

TEST_CASE("walk-powers preserve vertex labels") {
    Graph g = cycle_graph(5);
    g.set_label(2, "middle");
    CHECK(walk_power(g, 3).label(2) == "middle");
}

TEST_CASE("the cube of a pentagon is complete") {
    Graph power = walk_power(cycle_graph(5), 3);
    CHECK(power.edge_count() == 10);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) CHECK(power.has_edge(u, v));
}

TEST_CASE("the cube of a heptagon joins distances one and three") {
    Graph power = walk_power(cycle_graph(7), 3);
    CHECK(power.edge_count() == 14);
    CHECK(power.has_edge(0, 1));
    CHECK(power.has_edge(0, 3));
    CHECK(power.has_edge(0, 4));  // distance 3 the other way round
    CHECK_FALSE(power.has_edge(0, 2));
    CHECK_FALSE(power.has_edge(0, 5));
}

TEST_CASE("bipartite graphs admit every odd walk-power") {
    // No odd closed walk exists at all, so the precondition holds vacuously
    // and the power keeps exactly the odd-distance pairs reachable in k steps.
    CHECK(walk_power(cycle_graph(4), 3) == cycle_graph(4));
    Graph p = walk_power(cycle_graph(6), 3);
    CHECK(p.has_edge(0, 1));
    CHECK(p.has_edge(0, 3));
    CHECK_FALSE(p.has_edge(0, 2));
    CHECK(walk_power(path_graph(2), 99) == path_graph(2));
}

TEST_CASE("walk-powers reject graphs with short odd closed walks") {
    CHECK_THROWS_AS(walk_power(cycle_graph(3), 3), PowerPreconditionError);
    CHECK_THROWS_AS(walk_power(cycle_graph(5), 5), PowerPreconditionError);
    CHECK_THROWS_AS(walk_power(cycle_graph(5), 7), PowerPreconditionError);
    CHECK_THROWS_AS(walk_power(complete_graph(4), 3), PowerPreconditionError);

    try {
        walk_power(cycle_graph(3), 3);
        FAIL("expected a precondition failure");
    } catch (const PowerPreconditionError& e) {
        CHECK(std::string(e.what()).find("odd-girth") != std::string::npos);
        const std::vector<int>& walk = e.offending_closed_walk();
        REQUIRE(walk.size() == 4);  // a closed walk of length exactly k = 3
        CHECK(walk.front() == walk.back());
        Graph g = cycle_graph(3);
        for (std::size_t i = 0; i + 1 < walk.size(); ++i)
            CHECK(g.has_edge(walk[i], walk[i + 1]));
    }
}

TEST_CASE("walk-powers demand positive odd exponents") {
    CHECK_THROWS_AS(walk_power(cycle_graph(5), 2), std::invalid_argument);
    CHECK_THROWS_AS(walk_power(cycle_graph(5), 0), std::invalid_argument);
    CHECK_THROWS_AS(walk_power(cycle_graph(5), -3), std::invalid_argument);
}

TEST_CASE("the offending walk pads a short odd cycle up to the exponent") {
    try {
        walk_power(cycle_graph(5), 9);
        FAIL("expected a precondition failure");
    } catch (const PowerPreconditionError& e) {
        const std::vector<int>& walk = e.offending_closed_walk();
        REQUIRE(walk.size() == 10);
        CHECK(walk.front() == walk.back());
        Graph g = cycle_graph(5);
        for (std::size_t i = 0; i + 1 < walk.size(); ++i)
            CHECK(g.has_edge(walk[i], walk[i + 1]));
    }
}

TEST_CASE("signed powers join same-part pairs seeing both path signs") {
    SignedGraph sg = unbalanced_cycle(4);
    Graph power = signed_bipartite_power(sg, 2);
    CHECK(power.edge_count() == 2);
    CHECK(power.has_edge(0, 2));
    CHECK(power.has_edge(1, 3));

    // All-positive: both antipodal paths agree in sign, so nothing joins.
    CHECK(signed_bipartite_power(all_positive(cycle_graph(4)), 2).edge_count() == 0);
}

TEST_CASE("the signed square of the three-dimensional signed cube is two tetrahedra") {
    SignedGraph spc = signed_projective_cube(3);
    Graph power = signed_bipartite_power(spc, 2);
    CHECK(power.edge_count() == 12);
    auto parts = bipartition(spc.graph);
    REQUIRE(parts.has_value());
    std::set<int> first(parts->first.begin(), parts->first.end());
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
            CHECK(power.has_edge(u, v) == (first.count(u) == first.count(v)));
}

TEST_CASE("signed powers validate radius, bipartiteness, and unbalanced-girth") {
    CHECK_THROWS_AS(signed_bipartite_power(unbalanced_cycle(4), 3), std::invalid_argument);
    CHECK_THROWS_AS(signed_bipartite_power(unbalanced_cycle(4), 0), std::invalid_argument);
    CHECK_THROWS_AS(signed_bipartite_power(all_negative(cycle_graph(5)), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(signed_bipartite_power(unbalanced_cycle(4), 4), PowerPreconditionError);
    CHECK_NOTHROW(signed_bipartite_power(unbalanced_cycle(6), 4));
}

TEST_CASE("the refined cube of a pentagon is the pentagram") {
    Graph refined = refined_odd_power(cycle_graph(5), 3);
    CHECK(refined.edge_count() == 5);
    for (int v = 0; v < 5; ++v) {
        CHECK(refined.has_edge(v, (v + 2) % 5));
        CHECK_FALSE(refined.has_edge(v, (v + 1) % 5));
    }
}

TEST_CASE("the refined power is a subgraph of the walk-power") {
    std::mt19937 rng(3303);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = oracle::random_triple_subdivided_graph(24, 0.5, rng);
        for (int k : {3, 5}) {
            Graph walk = walk_power(g, k);
            Graph refined = refined_odd_power(g, k);
            for (const Edge& e : refined.edges()) CHECK(walk.has_edge(e.u, e.v));
        }
    }
}

TEST_CASE("refined powers reject the same inputs as walk-powers") {
    CHECK_THROWS_AS(refined_odd_power(cycle_graph(5), 2), std::invalid_argument);
    CHECK_THROWS_AS(refined_odd_power(cycle_graph(3), 3), PowerPreconditionError);
}

TEST_CASE("walk-powers agree with the matrix oracle on random graphs") {
    std::mt19937 rng(4404);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = trial % 2 == 0 ? oracle::random_bipartite_graph(6 + trial % 10, 0.3, rng)
                                 : oracle::random_triple_subdivided_graph(24, 0.5, rng);
        for (int k : {1, 3, 5, 7}) CHECK(walk_power(g, k) == oracle::walk_power_matrix(g, k));
    }
}

TEST_CASE("signed powers agree with the path-enumeration oracle on random graphs") {
    std::mt19937 rng(5505);
    int checked_r4 = 0;
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracle::random_bipartite_graph(6 + trial % 9, 0.3, rng);
        std::set<Edge> sigma;
        for (const Edge& e : g.edges())
            if (rng() % 3 == 0) sigma.insert(e);
        SignedGraph sg(g, sigma);

        // Simple bipartite graphs have no unbalanced cycle shorter than 4,
        // so radius 2 always meets the precondition.
        CHECK(signed_bipartite_power(sg, 2) == oracle::signed_power_paths(sg, 2));

        Girth ub = unbalanced_girth(sg);
        if (!ub || *ub >= 6) {
            CHECK(signed_bipartite_power(sg, 4) == oracle::signed_power_paths(sg, 4));
            ++checked_r4;
        }
    }
    CHECK(checked_r4 > 0);
}

TEST_CASE("refined powers agree with the path-enumeration oracle on random graphs") {
    std::mt19937 rng(6606);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = trial % 2 == 0 ? oracle::random_bipartite_graph(6 + trial % 8, 0.3, rng)
                                 : oracle::random_triple_subdivided_graph(21, 0.5, rng);
        for (int k : {3, 5})
            CHECK(refined_odd_power(g, k) == oracle::length_parity_power_paths(g, k));
    }
}

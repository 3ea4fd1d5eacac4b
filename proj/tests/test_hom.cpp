#include <set>

#include <doctest.h>

#include "test_util.hpp"
#include "walkpower/hom.hpp"
#include "walkpower/projective_cubes.hpp"
#include "walkpower/walk_powers.hpp"

using namespace walkpower;
using namespace walkpower::testutil;

namespace {

bool valid_graph_map(const Graph& g, const Graph& h, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != g.vertex_count()) return false;
    for (const Edge& e : g.edges())
        if (!h.has_edge(map[e.u], map[e.v])) return false;
    return true;
}

}  // namespace

TEST_CASE("graph homomorphisms fold cycles onto shorter odd cycles") {
    Graph c15 = cycle_graph(15);
    Graph c5 = cycle_graph(5);
    HomResult result = find_graph_hom(c15, c5);
    REQUIRE(result.status == SearchStatus::Found);
    REQUIRE(result.witness.has_value());
    CHECK(valid_graph_map(c15, c5, result.witness->map));
    CHECK(result.witness->switches.vertices.empty());
    CHECK(result.nodes >= 15);
}

TEST_CASE("no homomorphism raises the odd-girth") {
    CHECK(find_graph_hom(cycle_graph(5), cycle_graph(7)).status == SearchStatus::Absent);
    CHECK(find_graph_hom(cycle_graph(3), cycle_graph(5)).status == SearchStatus::Absent);
    CHECK(find_graph_hom(complete_graph(4), complete_graph(3)).status == SearchStatus::Absent);
}

TEST_CASE("homomorphism search handles degenerate instances") {
    CHECK(find_graph_hom(Graph(), complete_graph(3)).status == SearchStatus::Found);
    CHECK(find_graph_hom(Graph(3), Graph(1)).status == SearchStatus::Found);
    CHECK(find_graph_hom(Graph(1), Graph()).status == SearchStatus::Absent);
    HomResult loopless = find_graph_hom(path_graph(2), Graph(2));
    CHECK(loopless.status == SearchStatus::Absent);
}

TEST_CASE("an exhausted node budget is reported as unknown, not absent") {
    HomResult result = find_graph_hom(complete_graph(6), complete_graph(5), 2);
    CHECK(result.status == SearchStatus::BudgetExceeded);
    CHECK(result.nodes <= 2);
    CHECK_FALSE(result.witness.has_value());
}

TEST_CASE("signed homomorphisms respect switching classes") {
    // An unbalanced square maps to the signed 3-cube but not conversely
    // ordered targets: the balanced square hosts no unbalanced image.
    SignedGraph source = unbalanced_cycle(4);
    SignedGraph balanced = all_positive(cycle_graph(4));
    CHECK(find_signed_hom(source, balanced).status == SearchStatus::Absent);

    // A balanced square folds onto a single positive edge of any target
    // that has one, even an unbalanced square.
    HomResult fold = find_signed_hom(balanced, source);
    REQUIRE(fold.status == SearchStatus::Found);
    CHECK(verify_hom(balanced, source, *fold.witness));
}

TEST_CASE("signed homomorphism witnesses verify end to end") {
    SignedGraph source = unbalanced_cycle(6);
    SignedGraph target = signed_projective_cube(3);
    HomResult result = find_signed_hom(source, target);
    REQUIRE(result.status == SearchStatus::Found);
    REQUIRE(result.witness.has_value());
    CHECK(verify_hom(source, target, *result.witness));

    // Sending adjacent vertices to the same image must be caught.
    HomWitness bad = *result.witness;
    bad.map[0] = bad.map[1];
    CHECK_FALSE(verify_hom(source, target, bad));
    // A stray switch flips the signs at one vertex and breaks the match.
    bad = *result.witness;
    bad.switches.vertices.insert(0);
    CHECK_FALSE(verify_hom(source, target, bad));
}

TEST_CASE("unbalanced squares map into the signed cube of matching parity") {
    SignedGraph source = unbalanced_cycle(4);
    HomResult d3 = find_spc_hom(source, 3);
    REQUIRE(d3.status == SearchStatus::Found);
    CHECK(verify_hom(source, signed_projective_cube(3), *d3.witness));

    // Unbalanced closed walks in the signed cube of even dimension are odd,
    // so the unbalanced square cannot land there.
    CHECK(find_spc_hom(source, 2).status == SearchStatus::Absent);
}

TEST_CASE("the one-dimensional signed cube target degenerates to bipartiteness") {
    HomResult yes = find_spc_hom(all_positive(cycle_graph(4)), 1);
    REQUIRE(yes.status == SearchStatus::Found);
    REQUIRE(yes.witness.has_value());
    CHECK(yes.nodes == 0);
    const std::vector<int>& map = yes.witness->map;
    Graph g = cycle_graph(4);
    for (const Edge& e : g.edges()) CHECK(map[e.u] != map[e.v]);

    CHECK(find_spc_hom(all_negative(cycle_graph(3)), 1).status == SearchStatus::Absent);
    CHECK_THROWS_AS(find_spc_hom(all_positive(cycle_graph(4)), 0), std::invalid_argument);
}

TEST_CASE("verify_hom validates witness dimensions before judging") {
    SignedGraph source = unbalanced_cycle(4);
    SignedGraph target = signed_projective_cube(2);
    HomWitness w;
    w.map = {0, 1};
    CHECK_THROWS_AS(verify_hom(source, target, w), std::invalid_argument);
    w.map = {0, 1, 2, 9};
    CHECK_THROWS_AS(verify_hom(source, target, w), std::out_of_range);
    w.map = {0, 1, 2, 3};
    w.switches.vertices = {11};
    CHECK_THROWS_AS(verify_hom(source, target, w), std::out_of_range);
}

TEST_CASE("the signed K_4 packs into its three perfect matchings") {
    SignedGraph spc2 = signed_projective_cube(2);
    PackingResult packed = packing_to_spc(spc2, 2);
    REQUIRE(packed.status == SearchStatus::Found);
    REQUIRE(packed.witness.has_value());

    const std::vector<Edge> edges = spc2.graph.edges();
    REQUIRE(packed.witness->edge_class.size() == edges.size());
    std::vector<std::set<int>> touched(3);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int c = packed.witness->edge_class[i];
        REQUIRE(c >= 0);
        REQUIRE(c < 3);
        // Perfect matching: no vertex repeats inside a class.
        CHECK(touched[c].insert(edges[i].u).second);
        CHECK(touched[c].insert(edges[i].v).second);
    }
    for (const auto& side : touched) CHECK(side.size() == 4);

    // Each class, read as a signature, switches onto the original one.
    REQUIRE(packed.witness->class_witnesses.size() == 3);
    for (int c = 0; c < 3; ++c) {
        std::set<Edge> class_sigma;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (packed.witness->edge_class[i] == c) class_sigma.insert(edges[i]);
        CHECK(switched(SignedGraph(spc2.graph, class_sigma),
                       packed.witness->class_witnesses[c])
                  .sigma == spc2.sigma);
    }

    // The packing agrees with the direct search.
    CHECK(find_spc_hom(spc2, 2).status == SearchStatus::Found);
}

TEST_CASE("packings and direct search agree on absence") {
    SignedGraph source = unbalanced_cycle(4);
    PackingResult packed = packing_to_spc(source, 2);
    CHECK(packed.status == SearchStatus::Absent);
    CHECK(packed.nodes == 0);  // rejected by the parity screen, no search
    CHECK(find_spc_hom(source, 2).status == SearchStatus::Absent);

    PackingResult found = packing_to_spc(source, 3);
    CHECK(found.status == SearchStatus::Found);
}

TEST_CASE("packing rejects inconsistent inputs and respects the budget") {
    CHECK_THROWS_AS(packing_to_spc(all_positive(cycle_graph(5)), 2), std::invalid_argument);
    PackingResult result = packing_to_spc(signed_projective_cube(2), 2, 0);
    CHECK(result.status == SearchStatus::BudgetExceeded);
}

TEST_CASE("witnesses serialize as plain text") {
    HomWitness w;
    w.map = {2, 0, 1};
    w.switches.vertices = {1};
    CHECK(witness_text(w) == "map 0 -> 2\nmap 1 -> 0\nmap 2 -> 1\nswitch 1\n");

    SignedGraph spc2 = signed_projective_cube(2);
    PackingResult packed = packing_to_spc(spc2, 2);
    REQUIRE(packed.status == SearchStatus::Found);
    std::string text = witness_text(spc2.graph, *packed.witness);
    CHECK(text.find("class 0 1 ") != std::string::npos);
    CHECK(text.find("# class 0 switch set:") != std::string::npos);
    CHECK(text.find("# class 2 switch set:") != std::string::npos);
}

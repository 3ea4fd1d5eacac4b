#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "walkpower/graph.hpp"

namespace walkpower {

/// Sign of a cycle: balanced = even number of negative edges.
enum class CycleSign { Balanced, Unbalanced };

/// The two switching-invariant classes used throughout, plus everything else.
///   OddSigned:       signature switching-equivalent to the all-negative one
///   SignedBipartite: underlying graph bipartite
enum class ConsistencyClass { OddSigned, SignedBipartite, Inconsistent };

/// Girth-like quantities: empty when no qualifying cycle exists.
using Girth = std::optional<int>;

/// A set of vertices to switch at (signs flip on edges leaving the set).
struct SwitchSet {
    std::set<int> vertices;

    bool contains(int v) const { return vertices.count(v) != 0; }
    bool operator==(const SwitchSet&) const = default;
};

/// Graph together with a signature: the set of negative edges.
struct SignedGraph {
    Graph graph;
    std::set<Edge> sigma;

    SignedGraph() = default;
    SignedGraph(Graph g, std::set<Edge> negative_edges);

    bool is_negative(int u, int v) const;
    int negative_edge_count() const { return static_cast<int>(sigma.size()); }

    bool operator==(const SignedGraph&) const = default;
};

/// [G, E(G)]: every edge negative.
SignedGraph all_negative(const Graph& g);

/// [G, {}]: every edge positive.
SignedGraph all_positive(const Graph& g);

/// Result of switching: edges with exactly one endpoint in `s` change sign.
SignedGraph switched(const SignedGraph& sg, const SwitchSet& s);

/// Sign of a cycle given as a distinct vertex sequence (closing edge implied).
CycleSign cycle_sign(const SignedGraph& sg, const std::vector<int>& cycle);

/// Whether two signatures on the same graph differ by an edge cut; returns a
/// switch set taking s1 to s2 when they do.
std::optional<SwitchSet> signatures_equivalent(const Graph& g, const std::set<Edge>& s1,
                                               const std::set<Edge>& s2);

/// Length of a shortest unbalanced cycle; empty if every cycle is balanced.
Girth unbalanced_girth(const SignedGraph& sg);

/// A shortest unbalanced cycle as a vertex sequence, when one exists.
std::optional<std::vector<int>> shortest_unbalanced_cycle(const SignedGraph& sg);

/// Length of a shortest odd cycle; empty if the graph is bipartite.
Girth odd_girth(const Graph& g);

/// A shortest odd cycle as a vertex sequence, when one exists.
std::optional<std::vector<int>> shortest_odd_cycle(const Graph& g);

/// Two-coloring of the vertices when the graph is bipartite. Each component is
/// rooted at its smallest vertex, which lands in the first part; both parts
/// are sorted ascending.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

/// OddSigned if the signature is switching-equivalent to all-negative,
/// else SignedBipartite if the underlying graph is bipartite,
/// else Inconsistent.
ConsistencyClass classify_consistency(const SignedGraph& sg);

const char* to_string(ConsistencyClass c);

}  // namespace walkpower

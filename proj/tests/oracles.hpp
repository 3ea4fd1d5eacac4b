#pragma once

// Independent reference implementations used only by the test suites. Each
// deliberately uses a different algorithm than the library so agreement is
// meaningful: matrix powers instead of layered reachability, bitmask path
// enumeration instead of pruned DFS, exhaustive switching instead of tree
// propagation, subset dynamic programming instead of branch and bound.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "walkpower/signed_graph.hpp"

namespace walkpower::oracle {

/// Walk-power by boolean adjacency-matrix exponentiation: u~v iff (A^k)[u][v]
/// is nonzero and u != v. No girth precondition; callers compare only on
/// inputs where the library op is defined.
Graph walk_power_matrix(const Graph& g, int k);

/// Whether some closed walk of odd length k <= limit exists; the smallest such
/// k equals the shortest odd cycle length. Computed from matrix powers.
std::optional<int> odd_girth_matrix(const Graph& g);

/// Shortest unbalanced cycle by exhaustive simple-cycle search over
/// (start, visited-mask, last, parity) states. Requires <= 20 vertices.
std::optional<int> unbalanced_girth_cycles(const SignedGraph& sg);

/// Signed bipartite power by exhaustive simple-path enumeration with a
/// visited bitmask: same-part u,v joined iff paths of length <= r reach both
/// negative-count parities. Requires a bipartite graph with <= 25 vertices.
Graph signed_power_paths(const SignedGraph& sg, int r);

/// Same enumeration tracking length parity instead, no part restriction.
Graph length_parity_power_paths(const Graph& g, int k);

/// Whether s1 and s2 are switching-equivalent, by trying all 2^n switch sets.
/// Requires <= 20 vertices.
bool switch_equivalent_exhaustive(const Graph& g, const std::set<Edge>& s1,
                                  const std::set<Edge>& s2);

/// Maximum clique size by subset dynamic programming. Requires <= 22 vertices.
int max_clique_subsets(const Graph& g);

/// Erdos-Renyi style random graph from the given generator.
Graph random_graph(int n, double p, std::mt19937& rng);

/// Random bipartite graph: n vertices split in two fixed halves, cross edges
/// kept with probability p. Infinite odd-girth by construction.
Graph random_bipartite_graph(int n, double p, std::mt19937& rng);

/// Random graph with every edge subdivided twice, tripling all cycle lengths
/// so the odd-girth is at least 9. Base size picked so the result has at most
/// max_vertices vertices.
Graph random_triple_subdivided_graph(int max_vertices, double p, std::mt19937& rng);

}  // namespace walkpower::oracle

#pragma once

#include <string>
#include <vector>

#include "walkpower/graph.hpp"

namespace walkpower {

/// A pairwise-adjacent vertex set certifying omega >= omega_bound; proven
/// marks a completed search (the bound is exact).
struct CliqueCertificate {
    std::vector<int> vertices;  // sorted ascending
    int omega = 0;              // = vertices.size()
    bool proven = false;
};

/// True iff the (distinct, valid) vertices are pairwise adjacent.
bool is_clique(const Graph& g, const std::vector<int>& vertices);

/// Exact maximum clique by branch and bound with a greedy-coloring bound.
/// Branch order: vertices by descending degree, ties by index. node_budget
/// counts branch nodes; a negative budget means unlimited. When the budget
/// stops the search, the best clique found so far comes back with
/// proven == false.
CliqueCertificate max_clique(const Graph& g, long long node_budget = -1);

int min_degree(const Graph& g);

/// "omega = N" (proven) or "omega >= N" header plus the sorted vertex list.
std::string certificate_text(const CliqueCertificate& cert);

}  // namespace walkpower

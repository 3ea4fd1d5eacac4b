#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "walkpower/signed_graph.hpp"

namespace walkpower {

/// Girth precondition failure for a power operation. Carries a closed walk
/// (vertex sequence, first == last) that would turn into a loop.
class PowerPreconditionError : public std::runtime_error {
public:
    PowerPreconditionError(const std::string& what, std::vector<int> closed_walk)
        : std::runtime_error(what), walk_(std::move(closed_walk)) {}

    const std::vector<int>& offending_closed_walk() const { return walk_; }

private:
    std::vector<int> walk_;
};

/// k-th walk-power: same vertices, x~y iff some walk of length exactly k
/// joins them. Requires odd k and odd_girth(g) >= k+2 (looplessness).
Graph walk_power(const Graph& g, int k);

/// Signed bipartite r-power: same vertices, u~v iff u,v lie in the same part
/// and two simple u-v paths of length <= r have opposite negative-edge-count
/// parities. Requires even r, a bipartite underlying graph, and
/// unbalanced_girth(sg) >= r+2.
Graph signed_bipartite_power(const SignedGraph& sg, int r);

/// Path-based analogue of walk_power for all-negative signatures: u~v iff two
/// simple u-v paths of length <= k have opposite length parities. Always a
/// subgraph of walk_power(g, k). Same preconditions as walk_power.
Graph refined_odd_power(const Graph& g, int k);

}  // namespace walkpower

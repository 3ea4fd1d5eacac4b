#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walkpower/signed_graph.hpp"

namespace walkpower {

/// Absent means exhaustive search proved non-existence; BudgetExceeded is a
/// distinct unknown outcome and never stands in for absence.
enum class SearchStatus { Found, Absent, BudgetExceeded };

/// Vertex map plus the switch set under which it preserves signs.
struct HomWitness {
    std::vector<int> map;  // source vertex -> target vertex
    SwitchSet switches;    // source vertices switched to '-'
};

struct HomResult {
    SearchStatus status = SearchStatus::Absent;
    std::optional<HomWitness> witness;
    long long nodes = 0;
};

/// Plain graph homomorphism by backtracking with forward checking. Variable
/// order: source vertices by descending degree, ties by index; value order:
/// target vertices by index. Returned witnesses carry an empty switch set.
HomResult find_graph_hom(const Graph& g, const Graph& h, long long node_budget = -1);

/// Signed homomorphism: CSP over (target vertex, switch bit) pairs per source
/// vertex; an edge uv of sign s requires phi(u)phi(v) in E(H) with
/// sign_H = s xor b(u) xor b(v). The first vertex of each source component
/// (in variable order) is pinned to switch bit '+'.
HomResult find_signed_hom(const SignedGraph& sg, const SignedGraph& sh,
                          long long node_budget = -1);

/// Homomorphism to the signed projective cube of dimension d. d >= 2
/// delegates to find_signed_hom(sg, signed_projective_cube(d)). The d = 1
/// target is the two-vertex digon (one vertex pair carrying both signs),
/// which no simple SignedGraph represents; a hom to it exists iff the
/// underlying graph is bipartite, and the returned map is the bipartition
/// indicator onto {0, 1}.
HomResult find_spc_hom(const SignedGraph& sg, int d, long long node_budget = -1);

/// Checks every edge constraint of the witness.
bool verify_hom(const SignedGraph& sg, const SignedGraph& sh, const HomWitness& w);

/// Partition of E(G) into classes 0..d, each class (read as a signature on
/// all of G) switching-equivalent to sigma, with a per-class switch witness.
struct PackingWitness {
    std::vector<int> edge_class;             // aligned with g.edges() order
    std::vector<SwitchSet> class_witnesses;  // size d+1
};

struct PackingResult {
    SearchStatus status = SearchStatus::Absent;
    std::optional<PackingWitness> witness;
    long long nodes = 0;
};

/// Edge-class backtracking with fundamental-cycle parity pruning: every class
/// must meet every cycle with the parity of sigma on that cycle. Requires a
/// consistent input.
PackingResult packing_to_spc(const SignedGraph& sg, int d, long long node_budget = -1);

/// "map <u> -> <v>" lines then "switch <u>" lines.
std::string witness_text(const HomWitness& w);

/// "class <u> <v> <c>" lines, then per-class switch sets as '#' comments.
std::string witness_text(const Graph& g, const PackingWitness& w);

}  // namespace walkpower

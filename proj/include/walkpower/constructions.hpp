#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "walkpower/clique.hpp"
#include "walkpower/signed_graph.hpp"

namespace walkpower {

/// A structural self-check of a construction failed.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ConstructionCase { Odd, Bipartite };

const char* to_string(ConstructionCase c);

/// Subdivision path lengths (edge counts) for the six K_4 edges. Opposite
/// pairs must match: ab=cd, ac=bd, ad=bc; the three around a vertex must sum
/// to the facial target (2k+1 odd case, 2k signed case).
struct SubdividedK4Lengths {
    int ab = 1, ac = 1, ad = 1, bc = 1, bd = 1, cd = 1;
};

/// K_4 with subdivided edges, its four facial cycles, and (signed case) a
/// signature making every face unbalanced.
struct SubdividedK4 {
    SignedGraph host;  // empty signature in the odd case
    ConstructionCase kind = ConstructionCase::Odd;
    int k = 0;
    int a = 0, b = 1, c = 2, d = 3;
    SubdividedK4Lengths lengths;
    std::vector<std::vector<int>> faces;  // abc, abd, acd, bcd
    std::vector<std::vector<int>> paths;  // ab, ac, ad, bc, bd, cd with endpoints
};

SubdividedK4 subdivided_k4(int k, const SubdividedK4Lengths& lengths, bool signed_case);

/// Default lengths: the long pair subdivided into 2k-1 (odd) or 2k-2 (signed)
/// edges, the other four left whole.
SubdividedK4 subdivided_k4(int k, bool signed_case);

/// Odd case: confirms walk_power(host, 2k-1) is complete on all 4k vertices
/// (one certificate). Signed case: confirms signed_bipartite_power(host,
/// 2k-2) induces a complete graph on each part, size 2k-1, with no cross-part
/// edges (one certificate per part). Throws VerificationError naming the
/// first missing pair.
std::vector<CliqueCertificate> verify_subdivided_k4_power(const SubdividedK4& gadget);

/// Maximal path whose internal vertices have degree 2 in the host.
struct Thread {
    int u = -1, w = -1;
    std::vector<int> internal;  // v_1..v_r, in order from u to w
    bool eligible = false;
    std::string branch_pair;  // "ab" or "cd"

    int r() const { return static_cast<int>(internal.size()); }
    bool operator==(const Thread&) const = default;
};

/// State of the iterative constructions: host with its combinatorial
/// embedding (face list), thread registry, designated clique(s), step index.
struct PlaneConstruction {
    SignedGraph host;  // empty signature in the odd case
    ConstructionCase kind = ConstructionCase::Odd;
    int k = 0;
    int step = 1;
    std::vector<std::vector<int>> faces;
    std::vector<Thread> threads;
    std::vector<int> designated_x;  // odd: the whole designated clique
    std::vector<int> designated_y;  // signed: the second part's set; odd: empty
    std::vector<int> part_of;       // signed: 2-coloring; odd: empty
    std::vector<std::string> log;

    int facial_length() const { return kind == ConstructionCase::Odd ? 2 * k + 1 : 2 * k; }
    int eligible_count() const;
    std::vector<int> designated_all() const;
};

/// Doubles eligible thread `thread_index`: draws the parallel copy P' inside
/// the first registered face bounded by the thread, bridges v_1 to v'_r so
/// both new faces reach the facial target length, mirrors signs onto P'
/// (signed case) and flips one bridge edge if needed to make both new faces
/// unbalanced, updates faces/threads/designated sets. Pure: returns the new
/// state. The step counter is advanced by the construction drivers, not here.
PlaneConstruction thread_double(const PlaneConstruction& state, int thread_index);
PlaneConstruction thread_double(const PlaneConstruction& state, const Thread& t);

/// Runs the iterative family: subdivided K_4, then per step doubles every
/// thread that was eligible when the step began, in registry order. Requires
/// k >= 2 and 1 <= steps <= 2k-1.
PlaneConstruction odd_construction(int k, int steps);

/// Signed analogue; threads with no internal vertex (r = 0) are skipped.
PlaneConstruction signed_construction(int k, int steps);

/// Closed-form designated-clique size after step i:
///   odd:    4k + sum_{j=1}^{i-1} 2^j (2k-j-1)     (total)
///   signed: (2k-1) + sum_{j=1}^{i-1} 2^{j-1} (2k-j-2)  (per part)
long long clique_size_formula(int k, int i, ConstructionCase kind);

/// Path x_1..x_{2k+1} with every edge subdivided 2k-2 times, a shortcut chain
/// making the shortest odd walk between any two x's exactly 2k-1, and an apex
/// joined to every x. Self-verifying: odd-girth 2k+1 and the x's pairwise
/// adjacent in walk_power(graph, 2k-1), else VerificationError.
struct DegreeGadget {
    Graph graph;
    int apex = -1;
    std::vector<int> clique;  // x_1..x_{2k+1}
};

DegreeGadget degree_gadget(int k);

/// Structural invariants: connected host, Euler formula, every edge on
/// exactly two faces, all faces at the facial target length, signed case all
/// faces unbalanced and all edges crossing the 2-coloring.
void check_construction_invariants(const PlaneConstruction& state);

/// Plain-text sidecar: designated clique(s), face list, thread registry,
/// vertex labels, step log.
std::string construction_certificate(const PlaneConstruction& state);

}  // namespace walkpower

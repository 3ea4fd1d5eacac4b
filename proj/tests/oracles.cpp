#include "oracles.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace walkpower::oracle {

namespace {

using BitRows = std::vector<std::vector<std::uint64_t>>;

BitRows adjacency_rows(const Graph& g) {
    const int n = g.vertex_count();
    const int words = (n + 63) / 64;
    BitRows rows(n, std::vector<std::uint64_t>(words, 0));
    for (const Edge& e : g.edges()) {
        rows[e.u][e.v / 64] |= 1ULL << (e.v % 64);
        rows[e.v][e.u / 64] |= 1ULL << (e.u % 64);
    }
    return rows;
}

BitRows multiply(const BitRows& a, const BitRows& b) {
    const int n = static_cast<int>(a.size());
    const int words = n == 0 ? 0 : static_cast<int>(a[0].size());
    BitRows out(n, std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (a[i][j / 64] >> (j % 64) & 1) {
                for (int w = 0; w < words; ++w) out[i][w] |= b[j][w];
            }
        }
    }
    return out;
}

bool get_bit(const BitRows& rows, int i, int j) {
    return rows[i][j / 64] >> (j % 64) & 1;
}

}  // namespace

Graph walk_power_matrix(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("walk_power_matrix: k must be positive");
    const int n = g.vertex_count();
    BitRows adjacency = adjacency_rows(g);
    BitRows power = adjacency;
    for (int step = 1; step < k; ++step) power = multiply(power, adjacency);
    Graph out(n);
    for (int v = 0; v < n; ++v) out.set_label(v, g.label(v));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (get_bit(power, u, v)) out.add_edge(u, v);
    return out;
}

std::optional<int> odd_girth_matrix(const Graph& g) {
    const int n = g.vertex_count();
    BitRows adjacency = adjacency_rows(g);
    BitRows power = adjacency;
    for (int k = 1; k <= n; k += 2) {
        if (k > 1) power = multiply(multiply(power, adjacency), adjacency);
        for (int v = 0; v < n; ++v)
            if (get_bit(power, v, v)) return k;
    }
    return std::nullopt;
}

namespace {

/// Any unbalanced cycle of length exactly `target` rooted (as smallest
/// vertex) at `root`, by depth-limited search over simple paths.
bool unbalanced_cycle_of_length(const SignedGraph& sg, int root, int target) {
    struct Frame {
        std::uint32_t mask;
        int last;
        int parity;
        int length;
    };
    const Graph& g = sg.graph;
    std::vector<Frame> stack{{1u << root, root, 0, 0}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        for (int next : g.neighbors(f.last)) {
            if (next < root) continue;
            int parity = f.parity ^ (sg.is_negative(f.last, next) ? 1 : 0);
            if (next == root) {
                if (f.length + 1 == target && parity == 1) return true;
                continue;
            }
            if (f.mask >> next & 1) continue;
            if (f.length + 2 > target) continue;
            stack.push_back({f.mask | (1u << next), next, parity, f.length + 1});
        }
    }
    return false;
}

}  // namespace

std::optional<int> unbalanced_girth_cycles(const SignedGraph& sg) {
    const int n = sg.graph.vertex_count();
    if (n > 20) throw std::invalid_argument("unbalanced_girth_cycles: too many vertices");
    // Iterative deepening keeps the search near the answer instead of
    // wandering along long simple paths.
    for (int target = 3; target <= n; ++target)
        for (int root = 0; root < n; ++root)
            if (unbalanced_cycle_of_length(sg, root, target)) return target;
    return std::nullopt;
}

namespace {

/// reach[v] bits 0/1: some simple path from the fixed source to v of length
/// <= limit has even/odd parity, where parity is per-edge supplied.
template <typename ParityOf>
std::vector<int> path_parities(const Graph& g, int source, int limit, ParityOf parity_of) {
    const int n = g.vertex_count();
    if (n > 25) throw std::invalid_argument("path oracle: too many vertices");
    std::vector<int> reach(n, 0);
    struct Frame {
        std::uint32_t mask;
        int last;
        int parity;
        int length;
    };
    std::vector<Frame> stack{{1u << source, source, 0, 0}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.length == limit) continue;
        for (int next : g.neighbors(f.last)) {
            if (f.mask >> next & 1) continue;
            int parity = f.parity ^ parity_of(f.last, next);
            reach[next] |= 1 << parity;
            stack.push_back({f.mask | (1u << next), next, parity, f.length + 1});
        }
    }
    return reach;
}

}  // namespace

Graph signed_power_paths(const SignedGraph& sg, int r) {
    const Graph& g = sg.graph;
    const int n = g.vertex_count();
    auto parts = bipartition(g);
    if (!parts) throw std::invalid_argument("signed_power_paths: graph is not bipartite");
    std::vector<int> side(n, 0);
    for (int v : parts->second) side[v] = 1;
    Graph out(n);
    for (int v = 0; v < n; ++v) out.set_label(v, g.label(v));
    for (int u = 0; u < n; ++u) {
        std::vector<int> reach = path_parities(
            g, u, r, [&sg](int a, int b) { return sg.is_negative(a, b) ? 1 : 0; });
        for (int v = u + 1; v < n; ++v)
            if (side[u] == side[v] && reach[v] == 3) out.add_edge(u, v);
    }
    return out;
}

Graph length_parity_power_paths(const Graph& g, int k) {
    const int n = g.vertex_count();
    Graph out(n);
    for (int v = 0; v < n; ++v) out.set_label(v, g.label(v));
    for (int u = 0; u < n; ++u) {
        std::vector<int> reach = path_parities(g, u, k, [](int, int) { return 1; });
        for (int v = u + 1; v < n; ++v)
            if (reach[v] == 3) out.add_edge(u, v);
    }
    return out;
}

bool switch_equivalent_exhaustive(const Graph& g, const std::set<Edge>& s1,
                                  const std::set<Edge>& s2) {
    const int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("switch_equivalent_exhaustive: too many vertices");
    SignedGraph base(g, s1);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        SwitchSet s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.vertices.insert(v);
        if (switched(base, s).sigma == s2) return true;
    }
    return false;
}

int max_clique_subsets(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 22) throw std::invalid_argument("max_clique_subsets: too many vertices");
    if (n == 0) return 0;
    std::vector<std::uint32_t> adjacency(n, 0);
    for (const Edge& e : g.edges()) {
        adjacency[e.u] |= 1u << e.v;
        adjacency[e.v] |= 1u << e.u;
    }
    std::vector<char> is_clique(std::size_t(1) << n, 0);
    is_clique[0] = 1;
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int low = std::countr_zero(mask);
        std::uint32_t rest = mask & (mask - 1);
        if (is_clique[rest] && (rest & ~adjacency[low]) == 0) {
            is_clique[mask] = 1;
            best = std::max(best, std::popcount(mask));
        }
    }
    return best;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution keep(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (keep(rng)) g.add_edge(u, v);
    return g;
}

Graph random_bipartite_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution keep(p);
    Graph g(n);
    const int half = n / 2;
    for (int u = 0; u < half; ++u)
        for (int v = half; v < n; ++v)
            if (keep(rng)) g.add_edge(u, v);
    return g;
}

Graph random_triple_subdivided_graph(int max_vertices, double p, std::mt19937& rng) {
    // Base graph with n0 + 2*m0 <= max_vertices once every edge becomes a
    // 3-edge path.
    std::uniform_int_distribution<int> base_size(3, 7);
    const int n0 = std::min(base_size(rng), max_vertices / 3);
    Graph base = random_graph(n0, p, rng);
    std::vector<Edge> base_edges = base.edges();
    const int max_edges = (max_vertices - n0) / 2;
    if (static_cast<int>(base_edges.size()) > max_edges) base_edges.resize(max_edges);

    Graph g(n0);
    for (const Edge& e : base_edges) {
        int m1 = g.add_vertex();
        int m2 = g.add_vertex();
        g.add_edge(e.u, m1);
        g.add_edge(m1, m2);
        g.add_edge(m2, e.v);
    }
    return g;
}

}  // namespace walkpower::oracle

#include "walkpower/signed_graph.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <stdexcept>
#include <string>

namespace walkpower {

namespace {

std::string edge_text(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

void check_signature(const Graph& g, const std::set<Edge>& s, const char* name) {
    for (const Edge& e : s)
        if (!g.has_edge(e.u, e.v))
            throw std::invalid_argument(std::string(name) + " contains non-edge " + edge_text(e));
}

void check_switch_set(const Graph& g, const SwitchSet& s) {
    for (int v : s.vertices)
        if (v < 0 || v >= g.vertex_count())
            throw std::out_of_range("switch set vertex " + std::to_string(v) + " out of range");
}

}  // namespace

SignedGraph::SignedGraph(Graph g, std::set<Edge> negative_edges)
    : graph(std::move(g)), sigma(std::move(negative_edges)) {
    check_signature(graph, sigma, "signature");
}

bool SignedGraph::is_negative(int u, int v) const {
    if (!graph.has_edge(u, v))
        throw std::invalid_argument("is_negative: " + edge_text(Edge(u, v)) + " is not an edge");
    return sigma.count(Edge(u, v)) != 0;
}

SignedGraph all_negative(const Graph& g) {
    std::set<Edge> sigma;
    for (const Edge& e : g.edges()) sigma.insert(e);
    return SignedGraph(g, std::move(sigma));
}

SignedGraph all_positive(const Graph& g) {
    return SignedGraph(g, {});
}

SignedGraph switched(const SignedGraph& sg, const SwitchSet& s) {
    check_switch_set(sg.graph, s);
    std::set<Edge> sigma;
    for (const Edge& e : sg.graph.edges()) {
        bool crossing = s.contains(e.u) != s.contains(e.v);  // e ∈ δ(s)
        bool negative = sg.sigma.count(e) != 0;
        if (negative != crossing) sigma.insert(e);
    }
    return SignedGraph(sg.graph, std::move(sigma));
}

CycleSign cycle_sign(const SignedGraph& sg, const std::vector<int>& cycle) {
    const int len = static_cast<int>(cycle.size());
    if (len < 3) throw std::invalid_argument("cycle must have at least 3 vertices");
    std::set<int> seen(cycle.begin(), cycle.end());
    if (static_cast<int>(seen.size()) != len)
        throw std::invalid_argument("cycle repeats a vertex");
    int negatives = 0;
    for (int i = 0; i < len; ++i) {
        int u = cycle[i];
        int v = cycle[(i + 1) % len];
        if (!sg.graph.has_edge(u, v))
            throw std::invalid_argument("cycle uses non-edge " + edge_text(Edge(u, v)));
        if (sg.sigma.count(Edge(u, v))) ++negatives;
    }
    return negatives % 2 == 0 ? CycleSign::Balanced : CycleSign::Unbalanced;
}

std::optional<SwitchSet> signatures_equivalent(const Graph& g, const std::set<Edge>& s1,
                                               const std::set<Edge>& s2) {
    check_signature(g, s1, "first signature");
    check_signature(g, s2, "second signature");
    const int n = g.vertex_count();

    // s1 and s2 differ by a re-signing iff s1 Δ s2 is an edge cut δ(S). Root a
    // spanning tree per component, propagate the forced side of every vertex
    // across tree edges, then check the co-tree edges.
    std::set<Edge> diff;
    std::set_symmetric_difference(s1.begin(), s1.end(), s2.begin(), s2.end(),
                                  std::inserter(diff, diff.begin()));

    std::vector<int> side(n, -1);
    for (int root = 0; root < n; ++root) {
        if (side[root] != -1) continue;
        side[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                int want = side[u] ^ (diff.count(Edge(u, v)) ? 1 : 0);
                if (side[v] == -1) {
                    side[v] = want;
                    queue.push_back(v);
                } else if (side[v] != want) {
                    return std::nullopt;  // diff has odd intersection with some cycle
                }
            }
        }
    }

    SwitchSet w;
    for (int v = 0; v < n; ++v)
        if (side[v] == 1) w.vertices.insert(v);
    return w;
}

namespace {

// Signed double cover: vertices 2v (plus copy) and 2v+1 (minus copy); a
// positive edge joins equal copies, a negative edge joins opposite copies.
// The shortest unbalanced cycle length equals min over v of the cover
// distance between 2v and 2v+1.
struct CoverSearch {
    const SignedGraph& sg;
    std::vector<int> dist;
    std::vector<int> parent;

    explicit CoverSearch(const SignedGraph& s)
        : sg(s), dist(2 * s.graph.vertex_count()), parent(2 * s.graph.vertex_count()) {}

    // BFS from 2v; stops early once 2v+1 is settled or depth `limit` exceeded.
    int run(int v, int limit) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue;
        dist[2 * v] = 0;
        queue.push_back(2 * v);
        const int target = 2 * v + 1;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            if (cur == target) return dist[cur];
            if (dist[cur] >= limit) continue;
            int u = cur / 2;
            int bit = cur % 2;
            for (int w : sg.graph.neighbors(u)) {
                int wbit = bit ^ (sg.sigma.count(Edge(u, w)) ? 1 : 0);
                int node = 2 * w + wbit;
                if (dist[node] == -1) {
                    dist[node] = dist[cur] + 1;
                    parent[node] = cur;
                    queue.push_back(node);
                }
            }
        }
        return dist[target];
    }
};

}  // namespace

Girth unbalanced_girth(const SignedGraph& sg) {
    const int n = sg.graph.vertex_count();
    CoverSearch search(sg);
    int best = INT_MAX;
    for (int v = 0; v < n; ++v) {
        int d = search.run(v, best == INT_MAX ? INT_MAX : best - 1);
        if (d != -1 && d < best) best = d;
    }
    if (best == INT_MAX) return std::nullopt;
    return best;
}

std::optional<std::vector<int>> shortest_unbalanced_cycle(const SignedGraph& sg) {
    const int n = sg.graph.vertex_count();
    CoverSearch search(sg);
    int best = INT_MAX;
    int best_vertex = -1;
    for (int v = 0; v < n; ++v) {
        int d = search.run(v, best == INT_MAX ? INT_MAX : best - 1);
        if (d != -1 && d < best) {
            best = d;
            best_vertex = v;
        }
    }
    if (best_vertex == -1) return std::nullopt;

    search.run(best_vertex, INT_MAX);
    std::vector<int> cycle;
    for (int node = 2 * best_vertex + 1; node != -1; node = search.parent[node])
        cycle.push_back(node / 2);
    cycle.pop_back();  // both endpoints project to best_vertex; keep one copy
    std::reverse(cycle.begin(), cycle.end());

    // A globally shortest cover path projects to a simple cycle: any repeated
    // vertex would split it into two closed walks, one unbalanced and
    // shorter, contradicting minimality.
    std::set<int> seen(cycle.begin(), cycle.end());
    if (seen.size() != cycle.size())
        throw std::logic_error("shortest unbalanced cycle projection is not simple");
    return cycle;
}

Girth odd_girth(const Graph& g) {
    return unbalanced_girth(all_negative(g));
}

std::optional<std::vector<int>> shortest_odd_cycle(const Graph& g) {
    return shortest_unbalanced_cycle(all_negative(g));
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;  // lowest-indexed vertex of each component lands in X
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < n; ++v)
        (color[v] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

ConsistencyClass classify_consistency(const SignedGraph& sg) {
    std::set<Edge> all;
    for (const Edge& e : sg.graph.edges()) all.insert(e);
    if (signatures_equivalent(sg.graph, sg.sigma, all))
        return ConsistencyClass::OddSigned;
    if (bipartition(sg.graph))
        return ConsistencyClass::SignedBipartite;
    return ConsistencyClass::Inconsistent;
}

const char* to_string(ConsistencyClass c) {
    switch (c) {
        case ConsistencyClass::OddSigned: return "odd-signed";
        case ConsistencyClass::SignedBipartite: return "signed-bipartite";
        case ConsistencyClass::Inconsistent: return "inconsistent";
    }
    return "?";
}

}  // namespace walkpower

#include "walkpower/walk_powers.hpp"

#include <array>
#include <functional>

namespace walkpower {

namespace {

Graph empty_like(const Graph& g) {
    Graph out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.label(v).empty()) out.set_label(v, g.label(v));
    return out;
}

// Closed walk of length exactly k obtained by padding an odd cycle (length
// <= k, same parity) with back-and-forth steps on its first edge.
std::vector<int> pad_cycle_to_walk(const std::vector<int>& cycle, int k) {
    std::vector<int> walk(cycle);
    walk.push_back(cycle[0]);
    int len = static_cast<int>(cycle.size());
    for (int i = 0; i < (k - len) / 2; ++i) {
        walk.push_back(cycle[1]);
        walk.push_back(cycle[0]);
    }
    return walk;
}

void require_odd_girth(const Graph& g, int k, const char* op) {
    Girth og = odd_girth(g);
    if (og && *og <= k) {
        auto cycle = shortest_odd_cycle(g);
        throw PowerPreconditionError(
            std::string(op) + ": odd-girth " + std::to_string(*og) + " < k+2 = " +
                std::to_string(k + 2) + "; a closed walk of length " + std::to_string(k) +
                " exists",
            pad_cycle_to_walk(*cycle, k));
    }
}

// Parity-tagged reachability over simple paths of length <= max_len starting
// at source. reach[v][p] records that some simple source-v path of length
// >= 1 and <= max_len accumulates parity p, where each edge contributes
// edge_parity(x, y).
std::vector<std::array<bool, 2>> simple_path_parities(
    const Graph& g, int source, int max_len,
    const std::function<int(int, int)>& edge_parity) {
    std::vector<std::array<bool, 2>> reach(g.vertex_count(), {false, false});
    std::vector<char> on_path(g.vertex_count(), 0);
    on_path[source] = 1;

    std::function<void(int, int, int)> extend = [&](int x, int depth, int parity) {
        for (int y : g.neighbors(x)) {
            if (on_path[y]) continue;
            int p = parity ^ edge_parity(x, y);
            reach[y][p] = true;
            if (depth + 1 < max_len) {
                on_path[y] = 1;
                extend(y, depth + 1, p);
                on_path[y] = 0;
            }
        }
    };
    extend(source, 0, 0);
    return reach;
}

}  // namespace

Graph walk_power(const Graph& g, int k) {
    if (k < 1 || k % 2 == 0)
        throw std::invalid_argument("walk_power: k must be a positive odd integer");
    require_odd_girth(g, k, "walk_power");

    const int n = g.vertex_count();
    Graph out = empty_like(g);
    std::vector<char> cur(n), next(n);
    for (int x = 0; x < n; ++x) {
        std::fill(cur.begin(), cur.end(), 0);
        cur[x] = 1;
        for (int step = 0; step < k; ++step) {
            std::fill(next.begin(), next.end(), 0);
            for (int v = 0; v < n; ++v)
                if (cur[v])
                    for (int w : g.neighbors(v)) next[w] = 1;
            cur.swap(next);
        }
        for (int y = x + 1; y < n; ++y)
            if (cur[y]) out.add_edge(x, y);
    }
    return out;
}

Graph signed_bipartite_power(const SignedGraph& sg, int r) {
    if (r < 2 || r % 2 != 0)
        throw std::invalid_argument("signed_bipartite_power: r must be a positive even integer");
    auto parts = bipartition(sg.graph);
    if (!parts)
        throw std::invalid_argument("signed_bipartite_power: underlying graph is not bipartite");
    Girth ub = unbalanced_girth(sg);
    if (ub && *ub <= r + 1) {
        auto cycle = shortest_unbalanced_cycle(sg);
        std::vector<int> walk(*cycle);
        walk.push_back((*cycle)[0]);
        throw PowerPreconditionError("signed_bipartite_power: unbalanced-girth " +
                                         std::to_string(*ub) + " < r+2 = " + std::to_string(r + 2),
                                     walk);
    }

    const int n = sg.graph.vertex_count();
    std::vector<char> part(n, 0);
    for (int v : parts->second) part[v] = 1;

    Graph out = empty_like(sg.graph);
    auto sign_parity = [&sg](int x, int y) { return sg.sigma.count(Edge(x, y)) ? 1 : 0; };
    for (int u = 0; u < n; ++u) {
        auto reach = simple_path_parities(sg.graph, u, r, sign_parity);
        for (int v = u + 1; v < n; ++v)
            if (part[u] == part[v] && reach[v][0] && reach[v][1]) out.add_edge(u, v);
    }
    return out;
}

Graph refined_odd_power(const Graph& g, int k) {
    if (k < 1 || k % 2 == 0)
        throw std::invalid_argument("refined_odd_power: k must be a positive odd integer");
    require_odd_girth(g, k, "refined_odd_power");

    const int n = g.vertex_count();
    Graph out = empty_like(g);
    auto length_parity = [](int, int) { return 1; };
    for (int u = 0; u < n; ++u) {
        auto reach = simple_path_parities(g, u, k, length_parity);
        for (int v = u + 1; v < n; ++v)
            if (reach[v][0] && reach[v][1]) out.add_edge(u, v);
    }
    return out;
}

}  // namespace walkpower

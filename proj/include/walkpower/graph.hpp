#pragma once

#include <compare>
#include <string>
#include <vector>

namespace walkpower {

/// Undirected edge stored with u < v so edge sets order lexicographically.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph: no loops, no parallel edges.
/// Vertices are 0..n-1; each may carry a free-form text label.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    int add_vertex(std::string label = {});
    void add_edge(int u, int v);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;

    /// All edges in lexicographic (u,v) order.
    std::vector<Edge> edges() const;

    const std::string& label(int v) const;
    void set_label(int v, std::string label);

    bool operator==(const Graph& other) const;

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;  // neighbor lists, kept sorted
    std::vector<std::string> labels_;
    int m_ = 0;
};

}  // namespace walkpower

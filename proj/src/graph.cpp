#include "walkpower/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace walkpower {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    adj_.resize(n);
    labels_.resize(n);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
}

int Graph::add_vertex(std::string label) {
    adj_.emplace_back();
    labels_.push_back(std::move(label));
    return vertex_count() - 1;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (has_edge(u, v)) throw std::invalid_argument("parallel edge: " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), target);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

const std::string& Graph::label(int v) const {
    check_vertex(v);
    return labels_[v];
}

void Graph::set_label(int v, std::string label) {
    check_vertex(v);
    labels_[v] = std::move(label);
}

bool Graph::operator==(const Graph& other) const {
    return adj_ == other.adj_;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" +
                                std::to_string(vertex_count()) + ")");
}

}  // namespace walkpower

#include "walkpower/clique.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace walkpower {

bool is_clique(const Graph& g, const std::vector<int>& vertices) {
    std::set<int> seen;
    for (int v : vertices) {
        if (v < 0 || v >= g.vertex_count())
            throw std::out_of_range("is_clique: vertex " + std::to_string(v) + " out of range");
        if (!seen.insert(v).second)
            throw std::invalid_argument("is_clique: vertex " + std::to_string(v) + " repeated");
    }
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.has_edge(vertices[i], vertices[j])) return false;
    return true;
}

namespace {

// Branch and bound in reindexed space (vertices renamed by the branch
// order), with one adjacency bitset row per vertex.
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, long long budget) : budget_(budget) {
        n_ = g.vertex_count();
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&g](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        std::vector<int> rank(n_);
        for (int i = 0; i < n_; ++i) rank[order_[i]] = i;

        words_ = (n_ + 63) / 64;
        adj_.assign(n_, std::vector<uint64_t>(words_, 0));
        for (const Edge& e : g.edges()) {
            int a = rank[e.u], b = rank[e.v];
            adj_[a][b / 64] |= uint64_t(1) << (b % 64);
            adj_[b][a / 64] |= uint64_t(1) << (a % 64);
        }
    }

    CliqueCertificate run() {
        std::vector<int> cand(n_);
        std::iota(cand.begin(), cand.end(), 0);
        expand(cand);

        CliqueCertificate cert;
        for (int v : best_) cert.vertices.push_back(order_[v]);
        std::sort(cert.vertices.begin(), cert.vertices.end());
        cert.omega = static_cast<int>(cert.vertices.size());
        cert.proven = complete_;
        return cert;
    }

private:
    bool adjacent(int a, int b) const { return adj_[a][b / 64] >> (b % 64) & 1; }

    void expand(const std::vector<int>& cand) {
        if (!complete_) return;
        if (cand.empty()) {
            if (current_.size() > best_.size()) best_ = current_;
            return;
        }

        // Greedy coloring of the candidates, in candidate order; a vertex in
        // color class c can extend the clique by at most c vertices.
        std::vector<std::vector<int>> classes;
        for (int v : cand) {
            size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool conflict = false;
                for (int u : classes[c])
                    if (adjacent(u, v)) {
                        conflict = true;
                        break;
                    }
                if (!conflict) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
        }
        std::vector<int> by_color;
        std::vector<int> bound;
        for (size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) {
                by_color.push_back(v);
                bound.push_back(static_cast<int>(c) + 1);
            }

        for (int i = static_cast<int>(by_color.size()) - 1; i >= 0; --i) {
            if (current_.size() + bound[i] <= best_.size()) return;
            if (budget_ >= 0 && nodes_ >= budget_) {
                complete_ = false;
                return;
            }
            ++nodes_;
            int v = by_color[i];
            current_.push_back(v);
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (adjacent(v, by_color[j])) next.push_back(by_color[j]);
            expand(next);
            current_.pop_back();
            if (!complete_) return;
        }
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<int> order_;
    std::vector<std::vector<uint64_t>> adj_;
    std::vector<int> current_, best_;
    long long budget_ = -1;
    long long nodes_ = 0;
    bool complete_ = true;
};

}  // namespace

CliqueCertificate max_clique(const Graph& g, long long node_budget) {
    return CliqueSearch(g, node_budget).run();
}

int min_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        best = v == 0 ? g.degree(v) : std::min(best, g.degree(v));
    return best;
}

std::string certificate_text(const CliqueCertificate& cert) {
    std::ostringstream out;
    out << "omega " << (cert.proven ? "=" : ">=") << " " << cert.omega << "\n";
    for (size_t i = 0; i < cert.vertices.size(); ++i)
        out << cert.vertices[i] << (i + 1 < cert.vertices.size() ? " " : "");
    out << "\n";
    return out.str();
}

}  // namespace walkpower

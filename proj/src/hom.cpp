#include "walkpower/hom.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "walkpower/projective_cubes.hpp"

namespace walkpower {

namespace {

// Generic forward-checking backtracker over bitset domains. Values are
// 0..value_count-1; the constraint between an assigned value and each
// unassigned neighbor is a precomputed allowed-set mask per (value, edge).
class DomainSet {
public:
    DomainSet(int variables, int words) : words_(words), bits_(variables * words, 0) {}

    uint64_t* row(int var) { return bits_.data() + var * words_; }
    const uint64_t* row(int var) const { return bits_.data() + var * words_; }
    int words() const { return words_; }

private:
    int words_;
    std::vector<uint64_t> bits_;
};

std::vector<int> variable_order(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&g](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    return order;
}

std::vector<int> component_ids(const Graph& g) {
    std::vector<int> comp(g.vertex_count(), -1);
    int next = 0;
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (comp[root] != -1) continue;
        comp[root] = next;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u))
                if (comp[v] == -1) {
                    comp[v] = comp[u];
                    queue.push_back(v);
                }
        }
        ++next;
    }
    return comp;
}

// Shared search body for both homomorphism solvers. Each source vertex is a
// variable; `edge_mask(u, value, w)` returns the bitmask of values neighbor w
// may still take once u holds `value`.
class HomSearch {
public:
    HomSearch(const Graph& source, int value_count, long long budget)
        : source_(source),
          n_(source.vertex_count()),
          value_count_(value_count),
          words_((value_count + 63) / 64),
          budget_(budget),
          order_(variable_order(source)),
          position_(n_, -1),
          assigned_(n_, -1) {
        for (int i = 0; i < n_; ++i) position_[order_[i]] = i;
    }

    template <typename MaskFn>
    HomResult run(const std::vector<uint64_t>& initial_domains, const MaskFn& mask_of) {
        HomResult result;
        if (n_ == 0) {
            result.status = SearchStatus::Found;
            result.witness = HomWitness{{}, {}};
            return result;
        }
        std::vector<uint64_t> domains = initial_domains;
        SearchStatus status = dfs(0, domains, mask_of);
        result.status = status;
        result.nodes = nodes_;
        if (status == SearchStatus::Found) {
            HomWitness w;
            w.map.resize(n_);
            for (int v = 0; v < n_; ++v) w.map[v] = decode_vertex(assigned_[v]);
            for (int v = 0; v < n_; ++v)
                if (decode_bit(assigned_[v])) w.switches.vertices.insert(v);
            result.witness = std::move(w);
        }
        return result;
    }

    // Value encodings: plain hom stores target vertices directly; the signed
    // solver stores 2*target+bit. The bit decoder below is overridden by a
    // flag rather than virtuals to keep the search loop flat.
    bool signed_values = false;

private:
    int decode_vertex(int value) const { return signed_values ? value / 2 : value; }
    int decode_bit(int value) const { return signed_values ? value % 2 : 0; }

    template <typename MaskFn>
    SearchStatus dfs(int pos, std::vector<uint64_t>& domains, const MaskFn& mask_of) {
        if (pos == n_) return SearchStatus::Found;
        const int var = order_[pos];
        const uint64_t* dom = &domains[size_t(var) * words_];

        for (int word = 0; word < words_; ++word) {
            uint64_t bits = dom[word];
            while (bits) {
                int bit = std::countr_zero(bits);
                bits &= bits - 1;
                int value = word * 64 + bit;

                if (budget_ >= 0 && nodes_ >= budget_) return SearchStatus::BudgetExceeded;
                ++nodes_;

                std::vector<uint64_t> next(domains);
                uint64_t* mine = &next[size_t(var) * words_];
                std::fill(mine, mine + words_, 0);
                mine[word] = uint64_t(1) << bit;

                bool dead = false;
                for (int w : source_.neighbors(var)) {
                    if (position_[w] <= pos) continue;  // already assigned
                    const uint64_t* mask = mask_of(var, value, w);
                    uint64_t* dw = &next[size_t(w) * words_];
                    uint64_t any = 0;
                    for (int i = 0; i < words_; ++i) {
                        dw[i] &= mask[i];
                        any |= dw[i];
                    }
                    if (!any) {
                        dead = true;
                        break;
                    }
                }
                if (dead) continue;

                assigned_[var] = value;
                SearchStatus rec = dfs(pos + 1, next, mask_of);
                if (rec != SearchStatus::Absent) return rec;
                assigned_[var] = -1;
            }
        }
        return SearchStatus::Absent;
    }

    const Graph& source_;
    int n_;
    int value_count_;
    int words_;
    long long budget_;
    std::vector<int> order_;
    std::vector<int> position_;
    std::vector<int> assigned_;
    long long nodes_ = 0;
};

void set_bit(std::vector<uint64_t>& bits, int offset_words, int value) {
    bits[offset_words + value / 64] |= uint64_t(1) << (value % 64);
}

}  // namespace

HomResult find_graph_hom(const Graph& g, const Graph& h, long long node_budget) {
    const int n = g.vertex_count();
    const int hn = h.vertex_count();
    if (n > 0 && hn == 0) return HomResult{SearchStatus::Absent, std::nullopt, 0};

    const int words = (std::max(hn, 1) + 63) / 64;
    // Per target vertex: mask of its neighbors.
    std::vector<uint64_t> neighbor_mask(size_t(hn) * words, 0);
    for (const Edge& e : h.edges()) {
        set_bit(neighbor_mask, e.u * words, e.v);
        set_bit(neighbor_mask, e.v * words, e.u);
    }

    std::vector<uint64_t> domains(size_t(n) * words, 0);
    for (int v = 0; v < n; ++v)
        for (int t = 0; t < hn; ++t) set_bit(domains, v * words, t);

    HomSearch search(g, std::max(hn, 1), node_budget);
    auto mask_of = [&](int, int value, int) -> const uint64_t* {
        return &neighbor_mask[size_t(value) * words];
    };
    return search.run(domains, mask_of);
}

HomResult find_signed_hom(const SignedGraph& sg, const SignedGraph& sh, long long node_budget) {
    const Graph& g = sg.graph;
    const Graph& h = sh.graph;
    const int n = g.vertex_count();
    const int hn = h.vertex_count();
    if (n > 0 && hn == 0) return HomResult{SearchStatus::Absent, std::nullopt, 0};

    const int value_count = std::max(2 * hn, 1);
    const int words = (value_count + 63) / 64;

    // allowed[t][q] = values (t', b') with t' adjacent to t and
    // b' = sign_H(t t') xor q; assigning (t, b) to u constrains a neighbor w
    // across an edge of switched sign s to allowed[t][b xor s].
    std::vector<uint64_t> allowed(size_t(2 * hn) * words, 0);
    for (const Edge& e : h.edges()) {
        int s = sh.sigma.count(e) ? 1 : 0;
        for (int q = 0; q < 2; ++q) {
            set_bit(allowed, (2 * e.u + q) * words, 2 * e.v + (s ^ q));
            set_bit(allowed, (2 * e.v + q) * words, 2 * e.u + (s ^ q));
        }
    }

    std::vector<uint64_t> domains(size_t(n) * words, 0);
    for (int v = 0; v < n; ++v)
        for (int t = 0; t < 2 * hn; ++t) set_bit(domains, v * words, t);

    // Pin the first variable of each component to switch bit '+': switching a
    // whole component flips every bit in it without changing validity.
    std::vector<int> comp = component_ids(g);
    std::vector<int> order = variable_order(g);
    std::vector<char> seen(n, 0);
    for (int var : order) {
        if (seen[comp[var]]) continue;
        seen[comp[var]] = 1;
        uint64_t* dom = &domains[size_t(var) * words];
        for (int t = 0; t < hn; ++t) {
            int value = 2 * t + 1;
            dom[value / 64] &= ~(uint64_t(1) << (value % 64));
        }
    }

    auto edge_sign = [&sg](int a, int b) { return sg.sigma.count(Edge(a, b)) ? 1 : 0; };

    HomSearch search(g, value_count, node_budget);
    search.signed_values = true;
    auto mask_of = [&](int u, int value, int w) -> const uint64_t* {
        int t = value / 2;
        int b = value % 2;
        int q = b ^ edge_sign(u, w);
        return &allowed[size_t(2 * t + q) * words];
    };
    return search.run(domains, mask_of);
}

HomResult find_spc_hom(const SignedGraph& sg, int d, long long node_budget) {
    if (d < 1) throw std::invalid_argument("find_spc_hom: dimension must be at least 1");
    if (d == 1) {
        auto parts = bipartition(sg.graph);
        HomResult result;
        if (!parts) {
            result.status = SearchStatus::Absent;
            return result;
        }
        HomWitness w;
        w.map.assign(sg.graph.vertex_count(), 0);
        for (int v : parts->second) w.map[v] = 1;
        result.status = SearchStatus::Found;
        result.witness = std::move(w);
        return result;
    }
    return find_signed_hom(sg, signed_projective_cube(d), node_budget);
}

bool verify_hom(const SignedGraph& sg, const SignedGraph& sh, const HomWitness& w) {
    const int n = sg.graph.vertex_count();
    if (static_cast<int>(w.map.size()) != n)
        throw std::invalid_argument("verify_hom: map size does not match source");
    for (int v = 0; v < n; ++v)
        if (w.map[v] < 0 || w.map[v] >= sh.graph.vertex_count())
            throw std::out_of_range("verify_hom: image vertex out of range");
    for (int v : w.switches.vertices)
        if (v < 0 || v >= n) throw std::out_of_range("verify_hom: switch vertex out of range");

    for (const Edge& e : sg.graph.edges()) {
        int a = w.map[e.u];
        int b = w.map[e.v];
        if (a == b || !sh.graph.has_edge(a, b)) return false;
        bool switched_sign = (sg.sigma.count(e) != 0) ^ w.switches.contains(e.u) ^
                             w.switches.contains(e.v);
        if (switched_sign != (sh.sigma.count(Edge(a, b)) != 0)) return false;
    }
    return true;
}

PackingResult packing_to_spc(const SignedGraph& sg, int d, long long node_budget) {
    if (d < 0) throw std::invalid_argument("packing_to_spc: dimension must be nonnegative");
    if (classify_consistency(sg) == ConsistencyClass::Inconsistent)
        throw std::invalid_argument("packing_to_spc: input signed graph is inconsistent");

    const Graph& g = sg.graph;
    const int n = g.vertex_count();
    const std::vector<Edge> edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int classes = d + 1;

    std::map<Edge, int> edge_index;
    for (int i = 0; i < m; ++i) edge_index[edges[i]] = i;

    // Spanning forest; every co-tree edge closes one fundamental cycle.
    std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0);
    std::vector<char> in_tree(m, 0), visited(n, 0);
    for (int root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (visited[v]) continue;
                visited[v] = 1;
                parent[v] = u;
                depth[v] = depth[u] + 1;
                parent_edge[v] = edge_index[Edge(u, v)];
                in_tree[parent_edge[v]] = 1;
                queue.push_back(v);
            }
        }
    }

    std::vector<std::vector<int>> cycles;        // edge indices per fundamental cycle
    for (int i = 0; i < m; ++i) {
        if (in_tree[i]) continue;
        std::vector<int> cycle{i};
        int a = edges[i].u, b = edges[i].v;
        while (a != b) {
            if (depth[a] < depth[b]) std::swap(a, b);
            cycle.push_back(parent_edge[a]);
            a = parent[a];
        }
        cycles.push_back(std::move(cycle));
    }

    const int cycle_count = static_cast<int>(cycles.size());
    std::vector<std::vector<int>> cycles_of_edge(m);
    std::vector<int> sigma_parity(cycle_count, 0), cycle_size(cycle_count, 0);
    for (int c = 0; c < cycle_count; ++c) {
        cycle_size[c] = static_cast<int>(cycles[c].size());
        for (int e : cycles[c]) {
            cycles_of_edge[e].push_back(c);
            if (sg.sigma.count(edges[e])) sigma_parity[c] ^= 1;
        }
    }

    PackingResult result;
    // Parity sanity: summing the class parities over a cycle gives |cycle|,
    // so (d+1) * sigma_parity == |cycle| (mod 2) is necessary.
    for (int c = 0; c < cycle_count; ++c)
        if ((classes * sigma_parity[c]) % 2 != cycle_size[c] % 2) {
            result.status = SearchStatus::Absent;
            return result;
        }

    std::vector<int> assignment(m, -1);
    std::vector<std::vector<int>> class_parity(cycle_count, std::vector<int>(classes, 0));
    std::vector<int> remaining(cycle_size);
    long long nodes = 0;
    bool exceeded = false;

    // Depth-first over edges in lexicographic order; classes are
    // interchangeable, so edge i may open at most one fresh class.
    std::function<bool(int, int)> assign = [&](int e, int used) -> bool {
        if (e == m) return true;
        int limit = std::min(classes - 1, used);  // 'used' = highest class opened so far + 1
        for (int k = 0; k <= limit; ++k) {
            if (node_budget >= 0 && nodes >= node_budget) {
                exceeded = true;
                return false;
            }
            ++nodes;
            bool ok = true;
            assignment[e] = k;
            for (int c : cycles_of_edge[e]) {
                class_parity[c][k] ^= 1;
                --remaining[c];
            }
            for (int c : cycles_of_edge[e]) {
                if (remaining[c] == 0) {
                    for (int kk = 0; kk < classes && ok; ++kk)
                        if (class_parity[c][kk] != sigma_parity[c]) ok = false;
                }
            }
            if (ok && assign(e + 1, std::max(used, k + 1))) return true;
            for (int c : cycles_of_edge[e]) {
                class_parity[c][k] ^= 1;
                ++remaining[c];
            }
            assignment[e] = -1;
            if (exceeded) return false;
        }
        return false;
    };

    bool found = assign(0, 0);
    result.nodes = nodes;
    if (exceeded) {
        result.status = SearchStatus::BudgetExceeded;
        return result;
    }
    if (!found) {
        result.status = SearchStatus::Absent;
        return result;
    }

    PackingWitness witness;
    witness.edge_class = assignment;
    for (int k = 0; k < classes; ++k) {
        std::set<Edge> class_sigma;
        for (int i = 0; i < m; ++i)
            if (assignment[i] == k) class_sigma.insert(edges[i]);
        auto sw = signatures_equivalent(g, class_sigma, sg.sigma);
        if (!sw)
            throw std::logic_error("packing class failed signature equivalence certification");
        witness.class_witnesses.push_back(*sw);
    }
    result.status = SearchStatus::Found;
    result.witness = std::move(witness);
    return result;
}

std::string witness_text(const HomWitness& w) {
    std::ostringstream out;
    for (size_t u = 0; u < w.map.size(); ++u) out << "map " << u << " -> " << w.map[u] << "\n";
    for (int v : w.switches.vertices) out << "switch " << v << "\n";
    return out.str();
}

std::string witness_text(const Graph& g, const PackingWitness& w) {
    std::ostringstream out;
    const std::vector<Edge> edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i)
        out << "class " << edges[i].u << " " << edges[i].v << " " << w.edge_class[i] << "\n";
    for (size_t k = 0; k < w.class_witnesses.size(); ++k) {
        out << "# class " << k << " switch set:";
        for (int v : w.class_witnesses[k].vertices) out << " " << v;
        out << "\n";
    }
    return out.str();
}

}  // namespace walkpower

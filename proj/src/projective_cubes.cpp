#include "walkpower/projective_cubes.hpp"

#include <stdexcept>

namespace walkpower {

namespace {

void check_dimension(int d) {
    if (d < 2) throw std::invalid_argument("projective cube dimension must be at least 2");
    if (d > 25) throw std::invalid_argument("projective cube dimension too large");
}

}  // namespace

Graph projective_cube(int d) {
    check_dimension(d);
    const int n = 1 << d;
    const int antipode = n - 1;  // J, the all-ones vector
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int i = 0; i < d; ++i) {
            int v = u ^ (1 << i);
            if (u < v) g.add_edge(u, v);
        }
        int v = u ^ antipode;
        if (u < v) g.add_edge(u, v);
    }
    // J differs from every e_i as soon as d >= 2, so the generator set has
    // d+1 distinct involutions; verify rather than assume.
    for (int u = 0; u < n; ++u)
        if (g.degree(u) != d + 1)
            throw std::logic_error("projective cube is not (d+1)-regular");
    return g;
}

SignedGraph signed_projective_cube(int d) {
    check_dimension(d);
    Graph g = projective_cube(d);
    const int antipode = (1 << d) - 1;
    std::set<Edge> sigma;
    for (int u = 0; u < (1 << d); ++u) {
        int v = u ^ antipode;
        if (u < v) sigma.insert(Edge(u, v));
    }
    return SignedGraph(std::move(g), std::move(sigma));
}

}  // namespace walkpower

#pragma once

#include "walkpower/signed_graph.hpp"

namespace walkpower {

/// Cayley graph on Z_2^d with generators e_1..e_d and the all-ones vector J:
/// the d-dimensional hypercube plus all antipodal pairs. Vertex id = the bit
/// vector read as an integer. Requires d >= 2; (d+1)-regular on 2^d vertices.
Graph projective_cube(int d);

/// projective_cube(d) with exactly the antipodal matching negative.
SignedGraph signed_projective_cube(int d);

}  // namespace walkpower

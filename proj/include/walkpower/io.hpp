#pragma once

#include <iosfwd>
#include <string>

#include "walkpower/signed_graph.hpp"

namespace walkpower {

/// ".sg" text format, canonical on output:
///   line 1:           sg <n>
///   one line per edge: e <u> <v> <+|->     (0 <= u < v < n, lexicographic)
/// Lines starting with '#' are comments; blank lines are ignored. Unsigned
/// graphs are written with every edge '+'. Vertex labels are not part of the
/// format.
std::string write_sg(const SignedGraph& sg);
std::string write_sg(const Graph& g);

SignedGraph read_sg(std::istream& in);
SignedGraph read_sg_text(const std::string& text);
SignedGraph read_sg_file(const std::string& path);
void write_sg_file(const std::string& path, const SignedGraph& sg);

/// Graphviz export. Every edge carries sign="+" or sign="-"; negative edges
/// additionally carry style="dashed". Vertices with labels get a label
/// attribute.
std::string to_dot(const SignedGraph& sg, const std::string& name = "g");

}  // namespace walkpower

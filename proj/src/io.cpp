#include "walkpower/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace walkpower {

std::string write_sg(const SignedGraph& sg) {
    std::ostringstream out;
    out << "sg " << sg.graph.vertex_count() << "\n";
    for (const Edge& e : sg.graph.edges())
        out << "e " << e.u << " " << e.v << " " << (sg.sigma.count(e) ? '-' : '+') << "\n";
    return out.str();
}

std::string write_sg(const Graph& g) {
    return write_sg(all_positive(g));
}

SignedGraph read_sg(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    Graph g;
    std::set<Edge> sigma;

    auto fail = [&](const std::string& why) {
        throw std::runtime_error("sg parse error at line " + std::to_string(lineno) + ": " + why);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag)) continue;    // blank line
        if (tag[0] == '#') continue;       // comment
        if (!have_header) {
            if (tag != "sg") fail("expected 'sg <n>' header, got '" + tag + "'");
            int n;
            if (!(fields >> n) || n < 0) fail("bad vertex count");
            std::string extra;
            if (fields >> extra) fail("trailing text after header");
            g = Graph(n);
            have_header = true;
            continue;
        }
        if (tag != "e") fail("expected edge line 'e <u> <v> <+|->', got '" + tag + "'");
        int u, v;
        std::string sign;
        if (!(fields >> u >> v >> sign)) fail("malformed edge line");
        std::string extra;
        if (fields >> extra) fail("trailing text after edge");
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
            fail("edge endpoint out of range");
        if (u >= v) fail("edge endpoints must satisfy u < v");
        if (sign != "+" && sign != "-") fail("edge sign must be '+' or '-'");
        if (g.has_edge(u, v)) fail("duplicate edge");
        g.add_edge(u, v);
        if (sign == "-") sigma.insert(Edge(u, v));
    }
    if (!have_header) throw std::runtime_error("sg parse error: missing 'sg <n>' header");
    return SignedGraph(std::move(g), std::move(sigma));
}

SignedGraph read_sg_text(const std::string& text) {
    std::istringstream in(text);
    return read_sg(in);
}

SignedGraph read_sg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_sg(in);
}

void write_sg_file(const std::string& path, const SignedGraph& sg) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << write_sg(sg);
    if (!out) throw std::runtime_error("write failed for " + path);
}

namespace {

std::string quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_dot(const SignedGraph& sg, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < sg.graph.vertex_count(); ++v)
        if (!sg.graph.label(v).empty())
            out << "  " << v << " [label=" << quote(sg.graph.label(v)) << "];\n";
    for (const Edge& e : sg.graph.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (sg.sigma.count(e))
            out << " [sign=\"-\", style=\"dashed\"]";
        else
            out << " [sign=\"+\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace walkpower

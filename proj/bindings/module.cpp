#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "walkpower/clique.hpp"
#include "walkpower/constructions.hpp"
#include "walkpower/hom.hpp"
#include "walkpower/io.hpp"
#include "walkpower/projective_cubes.hpp"
#include "walkpower/signed_graph.hpp"
#include "walkpower/walk_powers.hpp"

namespace py = pybind11;

namespace {

using namespace walkpower;

using EdgePair = std::pair<int, int>;

std::vector<EdgePair> edge_pairs(const std::vector<Edge>& edges) {
    std::vector<EdgePair> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.emplace_back(e.u, e.v);
    return out;
}

std::vector<EdgePair> sigma_pairs(const std::set<Edge>& sigma) {
    std::vector<EdgePair> out;
    out.reserve(sigma.size());
    for (const Edge& e : sigma) out.emplace_back(e.u, e.v);
    return out;
}

std::set<Edge> to_sigma(const std::vector<EdgePair>& pairs) {
    std::set<Edge> sigma;
    for (const EdgePair& p : pairs) sigma.insert(Edge(p.first, p.second));
    return sigma;
}

SwitchSet to_switch_set(const std::vector<int>& vertices) {
    SwitchSet s;
    s.vertices.insert(vertices.begin(), vertices.end());
    return s;
}

std::vector<int> from_switch_set(const SwitchSet& s) {
    return std::vector<int>(s.vertices.begin(), s.vertices.end());
}

const char* status_name(SearchStatus status) {
    switch (status) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Absent: return "absent";
        case SearchStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "unknown";
}

py::dict hom_result_dict(const HomResult& result) {
    py::dict out;
    out["status"] = status_name(result.status);
    out["nodes"] = result.nodes;
    if (result.witness) {
        out["map"] = result.witness->map;
        out["switches"] = from_switch_set(result.witness->switches);
        out["text"] = witness_text(*result.witness);
    } else {
        out["map"] = py::none();
        out["switches"] = py::none();
        out["text"] = py::none();
    }
    return out;
}

py::dict packing_result_dict(const Graph& g, const PackingResult& result) {
    py::dict out;
    out["status"] = status_name(result.status);
    out["nodes"] = result.nodes;
    if (result.witness) {
        out["edge_class"] = result.witness->edge_class;
        std::vector<std::vector<int>> switch_sets;
        for (const SwitchSet& s : result.witness->class_witnesses)
            switch_sets.push_back(from_switch_set(s));
        out["class_witnesses"] = switch_sets;
        out["text"] = witness_text(g, *result.witness);
    } else {
        out["edge_class"] = py::none();
        out["class_witnesses"] = py::none();
        out["text"] = py::none();
    }
    return out;
}

py::dict clique_dict(const CliqueCertificate& cert) {
    py::dict out;
    out["vertices"] = cert.vertices;
    out["omega"] = cert.omega;
    out["proven"] = cert.proven;
    out["text"] = certificate_text(cert);
    return out;
}

py::dict construction_dict(const PlaneConstruction& state) {
    py::dict out;
    out["graph"] = state.host.graph;
    out["sigma"] = sigma_pairs(state.host.sigma);
    out["case"] = std::string(to_string(state.kind));
    out["k"] = state.k;
    out["step"] = state.step;
    out["faces"] = state.faces;
    out["designated_x"] = state.designated_x;
    out["designated_y"] = state.designated_y;
    out["part_of"] = state.part_of;
    out["log"] = state.log;
    out["certificate"] = construction_certificate(state);
    return out;
}

ConstructionCase parse_case(const std::string& text) {
    if (text == "odd") return ConstructionCase::Odd;
    if (text == "bipartite") return ConstructionCase::Bipartite;
    throw std::invalid_argument("case must be 'odd' or 'bipartite', got '" + text + "'");
}

}  // namespace

using namespace walkpower;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Walk-powers of graphs, signed graphs with switching, projective "
              "cubes, clique certificates, and homomorphism search.";

    py::register_exception<PowerPreconditionError>(m, "PowerPreconditionError",
                                                   PyExc_ValueError);
    py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph", "Simple undirected graph with optional vertex labels.")
        .def(py::init<>())
        .def(py::init<int>(), py::arg("n"))
        .def("add_vertex", &Graph::add_vertex, py::arg("label") = std::string())
        .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
        .def("vertex_count", &Graph::vertex_count)
        .def("edge_count", &Graph::edge_count)
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors",
             [](const Graph& g, int v) { return g.neighbors(v); },
             py::arg("v"))
        .def("edges", [](const Graph& g) { return edge_pairs(g.edges()); })
        .def("label", &Graph::label, py::arg("v"))
        .def("set_label", &Graph::set_label, py::arg("v"), py::arg("label"))
        .def("__eq__",
             [](const Graph& a, const Graph& b) { return a == b; },
             py::is_operator())
        .def("__repr__", [](const Graph& g) {
            std::ostringstream out;
            out << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ")";
            return out.str();
        });

    py::class_<SignedGraph>(m, "SignedGraph",
                            "Graph with a signature: the set of negative edges.")
        .def(py::init<>())
        .def(py::init([](const Graph& g, const std::vector<EdgePair>& negatives) {
                 return SignedGraph(g, to_sigma(negatives));
             }),
             py::arg("graph"), py::arg("negatives") = std::vector<EdgePair>{})
        .def_readonly("graph", &SignedGraph::graph)
        .def_property_readonly(
            "sigma", [](const SignedGraph& sg) { return sigma_pairs(sg.sigma); })
        .def("is_negative", &SignedGraph::is_negative, py::arg("u"), py::arg("v"))
        .def("negative_edge_count", &SignedGraph::negative_edge_count)
        .def("__eq__",
             [](const SignedGraph& a, const SignedGraph& b) { return a == b; },
             py::is_operator())
        .def("__repr__", [](const SignedGraph& sg) {
            std::ostringstream out;
            out << "SignedGraph(n=" << sg.graph.vertex_count() << ", m="
                << sg.graph.edge_count() << ", negatives=" << sg.negative_edge_count()
                << ")";
            return out.str();
        });

    // Signatures and switching.
    m.def("all_positive", &all_positive, py::arg("graph"));
    m.def("all_negative", &all_negative, py::arg("graph"));
    m.def(
        "switched",
        [](const SignedGraph& sg, const std::vector<int>& vertices) {
            return switched(sg, to_switch_set(vertices));
        },
        py::arg("signed_graph"), py::arg("vertices"),
        "Flip the sign of every edge with exactly one endpoint in `vertices`.");
    m.def(
        "cycle_sign",
        [](const SignedGraph& sg, const std::vector<int>& cycle) {
            return cycle_sign(sg, cycle) == CycleSign::Balanced ? "balanced" : "unbalanced";
        },
        py::arg("signed_graph"), py::arg("cycle"));
    m.def(
        "signatures_equivalent",
        [](const Graph& g, const std::vector<EdgePair>& s1,
           const std::vector<EdgePair>& s2) -> std::optional<std::vector<int>> {
            auto witness = signatures_equivalent(g, to_sigma(s1), to_sigma(s2));
            if (!witness) return std::nullopt;
            return from_switch_set(*witness);
        },
        py::arg("graph"), py::arg("sigma1"), py::arg("sigma2"),
        "Switch set taking sigma1 to sigma2, or None when inequivalent.");
    m.def(
        "classify_consistency",
        [](const SignedGraph& sg) { return std::string(to_string(classify_consistency(sg))); },
        py::arg("signed_graph"));

    // Girths and bipartitions.
    m.def("odd_girth", &odd_girth, py::arg("graph"),
          "Length of a shortest odd cycle, or None for bipartite graphs.");
    m.def("shortest_odd_cycle", &shortest_odd_cycle, py::arg("graph"));
    m.def("unbalanced_girth", &unbalanced_girth, py::arg("signed_graph"),
          "Length of a shortest unbalanced cycle, or None when balanced.");
    m.def("shortest_unbalanced_cycle", &shortest_unbalanced_cycle, py::arg("signed_graph"));
    m.def("bipartition", &bipartition, py::arg("graph"),
          "Pair of vertex parts when bipartite, or None.");

    // Powers.
    m.def("walk_power", &walk_power, py::arg("graph"), py::arg("k"),
          "k-th walk-power: x~y iff some walk of length exactly k joins them.");
    m.def("signed_bipartite_power", &signed_bipartite_power, py::arg("signed_graph"),
          py::arg("r"),
          "Signed r-power: same-part u~v joined by two short paths of opposite "
          "sign parity.");
    m.def("refined_odd_power", &refined_odd_power, py::arg("graph"), py::arg("k"),
          "Path-based analogue of walk_power; always a subgraph of it.");

    // Projective cubes.
    m.def("projective_cube", &projective_cube, py::arg("d"));
    m.def("signed_projective_cube",
          [](int d) { return signed_projective_cube(d); }, py::arg("d"));

    // Cliques.
    m.def("is_clique", &is_clique, py::arg("graph"), py::arg("vertices"));
    m.def(
        "max_clique",
        [](const Graph& g, long long budget) { return clique_dict(max_clique(g, budget)); },
        py::arg("graph"), py::arg("node_budget") = -1,
        "Branch-and-bound maximum clique; `proven` is False when the budget ran "
        "out first.");
    m.def("min_degree", &min_degree, py::arg("graph"));

    // Homomorphisms.
    m.def(
        "find_graph_hom",
        [](const Graph& g, const Graph& h, long long budget) {
            return hom_result_dict(find_graph_hom(g, h, budget));
        },
        py::arg("source"), py::arg("target"), py::arg("node_budget") = -1);
    m.def(
        "find_signed_hom",
        [](const SignedGraph& sg, const SignedGraph& sh, long long budget) {
            return hom_result_dict(find_signed_hom(sg, sh, budget));
        },
        py::arg("source"), py::arg("target"), py::arg("node_budget") = -1);
    m.def(
        "find_spc_hom",
        [](const SignedGraph& sg, int d, long long budget) {
            return hom_result_dict(find_spc_hom(sg, d, budget));
        },
        py::arg("source"), py::arg("d"), py::arg("node_budget") = -1);
    m.def(
        "verify_hom",
        [](const SignedGraph& sg, const SignedGraph& sh, const std::vector<int>& map,
           const std::vector<int>& switches) {
            HomWitness w{map, to_switch_set(switches)};
            return verify_hom(sg, sh, w);
        },
        py::arg("source"), py::arg("target"), py::arg("map"),
        py::arg("switches") = std::vector<int>{});
    m.def(
        "packing_to_spc",
        [](const SignedGraph& sg, int d, long long budget) {
            return packing_result_dict(sg.graph, packing_to_spc(sg, d, budget));
        },
        py::arg("source"), py::arg("d"), py::arg("node_budget") = -1,
        "Partition of the edges into d+1 classes, each switching-equivalent to "
        "the signature.");

    // Constructions.
    m.def(
        "odd_construction",
        [](int k, int steps) { return construction_dict(odd_construction(k, steps)); },
        py::arg("k"), py::arg("steps"));
    m.def(
        "signed_construction",
        [](int k, int steps) { return construction_dict(signed_construction(k, steps)); },
        py::arg("k"), py::arg("steps"));
    m.def(
        "clique_size_formula",
        [](int k, int i, const std::string& kind) {
            return clique_size_formula(k, i, parse_case(kind));
        },
        py::arg("k"), py::arg("i"), py::arg("case"));
    m.def(
        "degree_gadget",
        [](int k) {
            DegreeGadget gadget = degree_gadget(k);
            py::dict out;
            out["graph"] = gadget.graph;
            out["apex"] = gadget.apex;
            out["clique"] = gadget.clique;
            return out;
        },
        py::arg("k"));
    m.def(
        "subdivided_k4",
        [](int k, bool signed_case) {
            SubdividedK4 gadget = subdivided_k4(k, signed_case);
            py::dict out;
            out["graph"] = gadget.host.graph;
            out["sigma"] = sigma_pairs(gadget.host.sigma);
            out["faces"] = gadget.faces;
            out["paths"] = gadget.paths;
            return out;
        },
        py::arg("k"), py::arg("signed_case"));

    // Serialization.
    m.def("write_sg", [](const SignedGraph& sg) { return write_sg(sg); },
          py::arg("signed_graph"));
    m.def("write_sg", [](const Graph& g) { return write_sg(g); }, py::arg("graph"));
    m.def("read_sg_text", &read_sg_text, py::arg("text"));
    m.def("read_sg_file", &read_sg_file, py::arg("path"));
    m.def("write_sg_file", &write_sg_file, py::arg("path"), py::arg("signed_graph"));
    m.def("to_dot", &to_dot, py::arg("signed_graph"), py::arg("name") = std::string("g"));
}

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "walkpower/clique.hpp"
#include "walkpower/constructions.hpp"
#include "walkpower/hom.hpp"
#include "walkpower/io.hpp"
#include "walkpower/projective_cubes.hpp"
#include "walkpower/signed_graph.hpp"
#include "walkpower/walk_powers.hpp"

namespace {

using namespace walkpower;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;  // property violated, absence, precondition failure
constexpr int kExitUsage = 2;      // bad parameters, unreadable input, I/O failure

int parse_dimension(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    int d = 0;
    try {
        d = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(what + ": bad dimension '" + text + "'");
    }
    if (used != text.size()) throw std::invalid_argument(what + ": bad dimension '" + text + "'");
    return d;
}

/// Inputs are either a ".sg" file path or a generator spec pc:<d> / spc:<d>.
SignedGraph resolve_input(const std::string& spec) {
    if (spec.rfind("pc:", 0) == 0)
        return all_positive(projective_cube(parse_dimension(spec.substr(3), "pc")));
    if (spec.rfind("spc:", 0) == 0)
        return signed_projective_cube(parse_dimension(spec.substr(4), "spc"));
    return read_sg_file(spec);
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing '" + out_path + "'");
}

std::string girth_to_string(const Girth& g) {
    return g ? std::to_string(*g) : std::string("infinite");
}

// ---------------------------------------------------------------- construct

int cmd_construct(const std::string& the_case, int k, std::optional<int> steps,
                  std::string out_base) {
    const bool odd = the_case == "odd";
    const int effective_steps = steps ? *steps : 2 * k - 1;
    PlaneConstruction state = odd ? odd_construction(k, effective_steps)
                                  : signed_construction(k, effective_steps);
    if (out_base.empty())
        out_base = the_case + "-k" + std::to_string(k) + "-s" + std::to_string(effective_steps);

    write_sg_file(out_base + ".sg", state.host);
    write_output(out_base + ".cert.txt", construction_certificate(state));

    std::cout << "wrote " << out_base << ".sg (" << state.host.graph.vertex_count()
              << " vertices, " << state.host.graph.edge_count() << " edges)\n";
    std::cout << "wrote " << out_base << ".cert.txt\n";
    if (odd)
        std::cout << "designated clique size " << state.designated_x.size() << "\n";
    else
        std::cout << "designated clique sizes " << state.designated_x.size() << " and "
                  << state.designated_y.size() << "\n";
    return kExitOk;
}

// -------------------------------------------------------------------- power

int cmd_power(const std::string& in, std::optional<int> k, std::optional<int> r, bool signed_mode,
              bool refined, const std::string& out) {
    SignedGraph sg = resolve_input(in);
    Graph result;
    if (signed_mode) {
        if (!r) throw std::invalid_argument("--signed requires --r");
        if (!bipartition(sg.graph)) {
            std::cerr << "precondition violated: the input graph is not bipartite\n";
            return kExitViolation;
        }
        result = signed_bipartite_power(sg, *r);
    } else {
        if (!k) throw std::invalid_argument("walk powers require --k");
        result = refined ? refined_odd_power(sg.graph, *k) : walk_power(sg.graph, *k);
    }
    write_output(out, write_sg(result));
    return kExitOk;
}

// ------------------------------------------------------------- verify-paper

bool graph_map_valid(const Graph& g, const Graph& h, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != g.vertex_count()) return false;
    for (int image : map)
        if (image < 0 || image >= h.vertex_count()) return false;
    for (const Edge& e : g.edges())
        if (!h.has_edge(map[e.u], map[e.v])) return false;
    return true;
}

int cmd_verify_paper(const std::string& the_case, int k, bool emit_json, long long budget) {
    const bool odd = the_case == "odd";
    if (odd && (k < 2 || k > 4))
        throw std::invalid_argument("the odd case is desk-scale for k in {2,3,4}");
    if (!odd && (k < 2 || k > 3))
        throw std::invalid_argument("the bipartite case is desk-scale for k in {2,3}");
    const int steps = 2 * k - 1;

    json report;
    report["parameters"] = {{"case", the_case}, {"k", k}, {"steps", steps}};
    std::vector<std::pair<std::string, bool>> claims;
    std::vector<std::string> details;
    auto claim = [&](const std::string& name, bool ok, const std::string& detail = "") {
        claims.emplace_back(name, ok);
        details.push_back(detail);
    };

    PlaneConstruction state;
    bool built = false;
    std::string build_error;
    try {
        state = odd ? odd_construction(k, steps) : signed_construction(k, steps);
        built = true;
    } catch (const std::exception& e) {
        build_error = e.what();
    }
    claim("construction", built, built ? "" : build_error);

    long long solver_nodes = -1;
    if (built) {
        const Graph& host = state.host.graph;
        report["vertex_count"] = host.vertex_count();
        report["edge_count"] = host.edge_count();
        report["face_count"] = state.faces.size();

        const bool euler_ok = host.vertex_count() - host.edge_count() +
                                  static_cast<int>(state.faces.size()) ==
                              2;
        claim("euler", euler_ok);

        const long long formula = clique_size_formula(k, steps, state.kind);
        report["formula_value"] = formula;

        if (odd) {
            Girth og = odd_girth(host);
            report["odd_girth"] = og ? json(*og) : json(nullptr);
            claim("girth", og && *og == 2 * k + 1, "odd-girth " + girth_to_string(og) +
                                                       ", expected " + std::to_string(2 * k + 1));

            report["designated_clique"] = state.designated_x.size();
            const bool formula_ok =
                static_cast<long long>(state.designated_x.size()) == formula &&
                formula == (1LL << (2 * k));
            claim("formula", formula_ok,
                  std::to_string(state.designated_x.size()) + " vertices, closed form " +
                      std::to_string(formula));

            bool clique_ok = false;
            std::string clique_detail;
            try {
                Graph power = walk_power(host, 2 * k - 1);
                clique_ok = is_clique(power, state.designated_x);
                clique_detail = "clique of " + std::to_string(state.designated_x.size()) +
                                " in the " + std::to_string(2 * k - 1) + "-walk-power";
            } catch (const std::exception& e) {
                clique_detail = e.what();
            }
            claim("designated-clique", clique_ok, clique_detail);

            if (k == 2) {
                Graph cube = projective_cube(4);
                HomResult hom = find_graph_hom(host, cube, budget);
                solver_nodes = hom.nodes;
                bool hom_ok = hom.status == SearchStatus::Found && hom.witness &&
                              graph_map_valid(host, cube, hom.witness->map);
                std::string detail =
                    hom.status == SearchStatus::Found
                        ? "witness verified, " + std::to_string(hom.nodes) + " nodes"
                        : (hom.status == SearchStatus::Absent ? "no homomorphism"
                                                              : "node budget exceeded");
                claim("cube-homomorphism", hom_ok, detail);
            }
        } else {
            auto parts = bipartition(host);
            claim("bipartite", static_cast<bool>(parts));

            Girth ug = unbalanced_girth(state.host);
            report["unbalanced_girth"] = ug ? json(*ug) : json(nullptr);
            claim("girth", ug && *ug == 2 * k,
                  "unbalanced-girth " + girth_to_string(ug) + ", expected " +
                      std::to_string(2 * k));

            report["designated_clique_x"] = state.designated_x.size();
            report["designated_clique_y"] = state.designated_y.size();
            const bool formula_ok =
                static_cast<long long>(state.designated_x.size()) == formula &&
                static_cast<long long>(state.designated_y.size()) == formula &&
                formula == (1LL << (2 * k - 2));
            claim("formula", formula_ok,
                  std::to_string(state.designated_x.size()) + " and " +
                      std::to_string(state.designated_y.size()) + " vertices, closed form " +
                      std::to_string(formula));

            bool x_ok = false;
            bool y_ok = false;
            std::string clique_detail;
            try {
                Graph power = signed_bipartite_power(state.host, 2 * k - 2);
                x_ok = is_clique(power, state.designated_x);
                y_ok = is_clique(power, state.designated_y);
                clique_detail = "part cliques in the " + std::to_string(2 * k - 2) +
                                "-signed-power";
            } catch (const std::exception& e) {
                clique_detail = e.what();
            }
            claim("designated-clique-x", x_ok, clique_detail);
            claim("designated-clique-y", y_ok, clique_detail);
        }
    }

    bool all_ok = true;
    json claim_report = json::object();
    for (std::size_t i = 0; i < claims.size(); ++i) {
        all_ok = all_ok && claims[i].second;
        claim_report[claims[i].first] = claims[i].second;
        if (!emit_json) {
            std::cout << (claims[i].second ? "PASS " : "FAIL ") << claims[i].first;
            if (!details[i].empty()) std::cout << " (" << details[i] << ")";
            std::cout << "\n";
        }
    }
    report["claims"] = claim_report;
    report["all_pass"] = all_ok;
    if (solver_nodes >= 0) report["solver_nodes"] = solver_nodes;
    if (emit_json) std::cout << report.dump(2) << "\n";
    return all_ok ? kExitOk : kExitViolation;
}

// -------------------------------------------------------------------- girth

int cmd_girth(const std::string& in) {
    SignedGraph sg = resolve_input(in);
    std::cout << "odd-girth " << girth_to_string(odd_girth(sg.graph)) << "\n";
    std::cout << "unbalanced-girth " << girth_to_string(unbalanced_girth(sg)) << "\n";
    return kExitOk;
}

// ------------------------------------------------------------------- clique

int cmd_clique(const std::string& in, const std::vector<int>& verify_set, long long budget) {
    SignedGraph sg = resolve_input(in);
    const Graph& g = sg.graph;
    if (!verify_set.empty()) {
        if (is_clique(g, verify_set)) {
            std::cout << "clique verified (" << verify_set.size() << " vertices)\n";
            return kExitOk;
        }
        for (std::size_t i = 0; i < verify_set.size(); ++i)
            for (std::size_t j = i + 1; j < verify_set.size(); ++j)
                if (!g.has_edge(verify_set[i], verify_set[j])) {
                    std::cout << "not a clique: " << verify_set[i] << " and " << verify_set[j]
                              << " are not adjacent\n";
                    return kExitViolation;
                }
        std::cout << "not a clique\n";
        return kExitViolation;
    }
    CliqueCertificate cert = max_clique(g, budget);
    std::cout << certificate_text(cert);
    if (!cert.proven) {
        std::cout << "node budget exhausted; the bound is not proven maximum\n";
        return kExitViolation;
    }
    return kExitOk;
}

// --------------------------------------------------------------------- cube

int cmd_cube(int d, bool signed_cube, const std::string& out) {
    const std::string text = signed_cube ? write_sg(signed_projective_cube(d))
                                         : write_sg(projective_cube(d));
    write_output(out, text);
    return kExitOk;
}

// ---------------------------------------------------------------------- hom

int hom_outcome(SearchStatus status, long long nodes, const std::string& witness,
                const std::string& witness_path) {
    std::cout << "nodes " << nodes << "\n";
    switch (status) {
        case SearchStatus::Found:
            std::cout << "result: found\n" << witness;
            if (!witness_path.empty()) write_output(witness_path, witness);
            return kExitOk;
        case SearchStatus::Absent:
            std::cout << "result: absent\n";
            return kExitViolation;
        case SearchStatus::BudgetExceeded:
        default:
            std::cout << "result: unknown (node budget exceeded)\n";
            return kExitViolation;
    }
}

int cmd_hom(const std::string& from, const std::string& to, bool packing, long long budget,
            const std::string& witness_path) {
    SignedGraph source = resolve_input(from);

    if (packing) {
        if (to.rfind("spc:", 0) != 0)
            throw std::invalid_argument("--packing requires --to spc:<d>");
        const int d = parse_dimension(to.substr(4), "spc");
        PackingResult result = packing_to_spc(source, d, budget);
        std::string text =
            result.witness ? witness_text(source.graph, *result.witness) : std::string{};
        return hom_outcome(result.status, result.nodes, text, witness_path);
    }

    HomResult result;
    if (to.rfind("spc:", 0) == 0) {
        result = find_spc_hom(source, parse_dimension(to.substr(4), "spc"), budget);
    } else {
        SignedGraph target = resolve_input(to);
        if (source.negative_edge_count() == 0 && target.negative_edge_count() == 0)
            result = find_graph_hom(source.graph, target.graph, budget);
        else
            result = find_signed_hom(source, target, budget);
    }
    std::string text = result.witness ? witness_text(*result.witness) : std::string{};
    return hom_outcome(result.status, result.nodes, text, witness_path);
}

// ------------------------------------------------------------------- export

int cmd_export(const std::string& in, bool dot, const std::string& out) {
    if (!dot) throw std::invalid_argument("only DOT export is available; pass --dot");
    write_output(out, to_dot(resolve_input(in)));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar extremal constructions, walk-powers, projective cubes, and solvers"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "Build an iterative extremal family");
    std::string construct_case;
    int construct_k = 0;
    std::optional<int> construct_steps;
    std::string construct_out;
    construct->add_option("--case", construct_case, "odd or bipartite")
        ->required()
        ->check(CLI::IsMember({"odd", "bipartite"}));
    construct->add_option("--k", construct_k, "girth parameter (k >= 2)")->required();
    construct->add_option("--steps", construct_steps, "steps to run (default 2k-1)");
    construct->add_option("--out", construct_out, "output base path");

    // power
    auto* power = app.add_subcommand("power", "Compute a walk-power or signed bipartite power");
    std::string power_in, power_out;
    std::optional<int> power_k, power_r;
    bool power_signed = false, power_refined = false;
    power->add_option("--in", power_in, "input: file path, pc:<d>, or spc:<d>")->required();
    power->add_option("--k", power_k, "walk-power exponent (odd)");
    power->add_option("--r", power_r, "signed power radius (even)");
    power->add_flag("--signed", power_signed, "signed bipartite power (requires --r)");
    power->add_flag("--refined", power_refined, "path-based refined odd power (requires --k)");
    power->add_option("--out", power_out, "output path (default stdout)");

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper", "Run the end-to-end verification pipeline");
    std::string verify_case;
    int verify_k = 0;
    bool verify_json = false;
    long long verify_budget = 100000000;
    verify->add_option("--case", verify_case, "odd or bipartite")
        ->required()
        ->check(CLI::IsMember({"odd", "bipartite"}));
    verify->add_option("--k", verify_k, "girth parameter")->required();
    verify->add_flag("--json", verify_json, "emit a JSON report instead of PASS/FAIL lines");
    verify->add_option("--budget", verify_budget, "homomorphism node budget (odd k=2 step)");

    // girth
    auto* girth = app.add_subcommand("girth", "Report odd-girth and unbalanced-girth");
    std::string girth_in;
    girth->add_option("--in", girth_in, "input: file path, pc:<d>, or spc:<d>")->required();

    // clique
    auto* clique = app.add_subcommand("clique", "Maximum clique or clique verification");
    std::string clique_in;
    std::vector<int> clique_verify;
    long long clique_budget = -1;
    clique->add_option("--in", clique_in, "input: file path, pc:<d>, or spc:<d>")->required();
    clique->add_option("--verify", clique_verify, "verify this vertex set instead of searching")
        ->expected(-1);
    clique->add_option("--budget", clique_budget, "branch-node budget (-1 = unlimited)");

    // cube
    auto* cube = app.add_subcommand("cube", "Generate a projective cube");
    int cube_d = 0;
    bool cube_signed = false;
    std::string cube_out;
    cube->add_option("--d", cube_d, "dimension (>= 2)")->required();
    cube->add_flag("--signed", cube_signed, "negative antipodal matching");
    cube->add_option("--out", cube_out, "output path (default stdout)");

    // hom
    auto* hom = app.add_subcommand("hom", "Decide a (signed) homomorphism or an edge packing");
    std::string hom_from, hom_to, hom_witness;
    bool hom_packing = false;
    long long hom_budget = -1;
    hom->add_option("--from", hom_from, "source: file path, pc:<d>, or spc:<d>")->required();
    hom->add_option("--to", hom_to, "target: file path, pc:<d>, or spc:<d>")->required();
    hom->add_flag("--packing", hom_packing, "use the edge-packing characterization (spc targets)");
    hom->add_option("--budget", hom_budget, "search node budget (-1 = unlimited)");
    hom->add_option("--witness", hom_witness, "also write the witness to this path");

    // export
    auto* exp = app.add_subcommand("export", "Export a graph for rendering");
    std::string export_in, export_out;
    bool export_dot = false;
    exp->add_option("--in", export_in, "input: file path, pc:<d>, or spc:<d>")->required();
    exp->add_flag("--dot", export_dot, "Graphviz DOT format");
    exp->add_option("--out", export_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (construct->parsed())
            return cmd_construct(construct_case, construct_k, construct_steps, construct_out);
        if (power->parsed())
            return cmd_power(power_in, power_k, power_r, power_signed, power_refined, power_out);
        if (verify->parsed())
            return cmd_verify_paper(verify_case, verify_k, verify_json, verify_budget);
        if (girth->parsed()) return cmd_girth(girth_in);
        if (clique->parsed()) return cmd_clique(clique_in, clique_verify, clique_budget);
        if (cube->parsed()) return cmd_cube(cube_d, cube_signed, cube_out);
        if (hom->parsed()) return cmd_hom(hom_from, hom_to, hom_packing, hom_budget, hom_witness);
        if (exp->parsed()) return cmd_export(export_in, export_dot, export_out);
    } catch (const PowerPreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        std::cerr << "offending closed walk:";
        for (int v : e.offending_closed_walk()) std::cerr << " " << v;
        std::cerr << "\n";
        return kExitViolation;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

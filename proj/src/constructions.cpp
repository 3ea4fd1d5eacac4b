#include "walkpower/constructions.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "walkpower/walk_powers.hpp"

namespace walkpower {

namespace {

std::string join(const std::vector<int>& vs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out << ' ';
        out << vs[i];
    }
    return out.str();
}

std::vector<int> sorted_copy(std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    return vs;
}

void check_no_duplicates(const std::vector<int>& vs, const char* what) {
    std::vector<int> s = sorted_copy(vs);
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw VerificationError(std::string(what) + " contains a repeated vertex");
}

/// Position where `seq` occurs as a contiguous forward arc of the cyclic
/// sequence `face`, if any.
std::optional<int> find_arc(const std::vector<int>& face, const std::vector<int>& seq) {
    const int n = static_cast<int>(face.size());
    if (static_cast<int>(seq.size()) > n) return std::nullopt;
    for (int i = 0; i < n; ++i) {
        bool match = true;
        for (int j = 0; j < static_cast<int>(seq.size()); ++j) {
            if (face[(i + j) % n] != seq[j]) {
                match = false;
                break;
            }
        }
        if (match) return i;
    }
    return std::nullopt;
}

std::string thread_summary(const Thread& t) {
    std::ostringstream out;
    out << t.u << " -> " << t.w << " via [" << join(t.internal) << "] (" << t.branch_pair << ")";
    return out.str();
}

}  // namespace

const char* to_string(ConstructionCase c) {
    return c == ConstructionCase::Odd ? "odd" : "bipartite";
}

int PlaneConstruction::eligible_count() const {
    int count = 0;
    for (const auto& t : threads)
        if (t.eligible) ++count;
    return count;
}

std::vector<int> PlaneConstruction::designated_all() const {
    std::vector<int> all = designated_x;
    all.insert(all.end(), designated_y.begin(), designated_y.end());
    return sorted_copy(all);
}

SubdividedK4 subdivided_k4(int k, const SubdividedK4Lengths& lengths, bool signed_case) {
    if (k < 2) throw std::invalid_argument("subdivided_k4: k must be at least 2");
    auto check_pair = [](int x, int y, const char* nx, const char* ny) {
        if (x < 1 || y < 1)
            throw std::invalid_argument(std::string("subdivided_k4: path length ") +
                                        (x < 1 ? nx : ny) + " must be positive");
        if (x != y)
            throw std::invalid_argument(std::string("subdivided_k4: opposite path lengths must "
                                                    "match, got ") +
                                        nx + "=" + std::to_string(x) + " and " + ny + "=" +
                                        std::to_string(y));
    };
    check_pair(lengths.ab, lengths.cd, "ab", "cd");
    check_pair(lengths.ac, lengths.bd, "ac", "bd");
    check_pair(lengths.ad, lengths.bc, "ad", "bc");
    const int target = signed_case ? 2 * k : 2 * k + 1;
    if (lengths.ab + lengths.ac + lengths.ad != target)
        throw std::invalid_argument(
            "subdivided_k4: facial length ab+ac+ad = " +
            std::to_string(lengths.ab + lengths.ac + lengths.ad) + " must equal " +
            std::to_string(target));

    SubdividedK4 out;
    out.kind = signed_case ? ConstructionCase::Bipartite : ConstructionCase::Odd;
    out.k = k;
    out.lengths = lengths;

    Graph base;
    out.a = base.add_vertex("a");
    out.b = base.add_vertex("b");
    out.c = base.add_vertex("c");
    out.d = base.add_vertex("d");
    auto build_path = [&base](int x, int y, int t, const std::string& name) {
        std::vector<int> path{x};
        int prev = x;
        for (int j = 1; j < t; ++j) {
            int v = base.add_vertex(name + "." + std::to_string(j));
            base.add_edge(prev, v);
            path.push_back(v);
            prev = v;
        }
        base.add_edge(prev, y);
        path.push_back(y);
        return path;
    };
    out.paths.push_back(build_path(out.a, out.b, lengths.ab, "ab"));
    out.paths.push_back(build_path(out.a, out.c, lengths.ac, "ac"));
    out.paths.push_back(build_path(out.a, out.d, lengths.ad, "ad"));
    out.paths.push_back(build_path(out.b, out.c, lengths.bc, "bc"));
    out.paths.push_back(build_path(out.b, out.d, lengths.bd, "bd"));
    out.paths.push_back(build_path(out.c, out.d, lengths.cd, "cd"));

    // Facial cycle x..y..z..x from paths x->y, y->z and x->z (walked backwards).
    auto face_of = [](const std::vector<int>& xy, const std::vector<int>& yz,
                      const std::vector<int>& xz) {
        std::vector<int> face(xy);
        face.insert(face.end(), yz.begin() + 1, yz.end());
        for (int i = static_cast<int>(xz.size()) - 2; i >= 1; --i) face.push_back(xz[i]);
        return face;
    };
    const auto& pab = out.paths[0];
    const auto& pac = out.paths[1];
    const auto& pad = out.paths[2];
    const auto& pbc = out.paths[3];
    const auto& pbd = out.paths[4];
    const auto& pcd = out.paths[5];
    out.faces.push_back(face_of(pab, pbc, pac));
    out.faces.push_back(face_of(pab, pbd, pad));
    out.faces.push_back(face_of(pac, pcd, pad));
    out.faces.push_back(face_of(pbc, pcd, pbd));

    std::set<Edge> sigma;
    if (signed_case) {
        sigma.insert(Edge(pab[0], pab[1]));  // first edge of the a..b path, at a
        sigma.insert(Edge(pcd[0], pcd[1]));  // first edge of the c..d path, at c
    }
    out.host = SignedGraph(std::move(base), std::move(sigma));

    for (const auto& face : out.faces) {
        if (static_cast<int>(face.size()) != target)
            throw VerificationError("subdivided_k4: face length " +
                                    std::to_string(face.size()) + ", expected " +
                                    std::to_string(target));
        if (signed_case && cycle_sign(out.host, face) != CycleSign::Unbalanced)
            throw VerificationError("subdivided_k4: a facial cycle is balanced");
    }
    return out;
}

SubdividedK4 subdivided_k4(int k, bool signed_case) {
    SubdividedK4Lengths lengths;
    const int lp = signed_case ? 2 * k - 2 : 2 * k - 1;
    lengths.ab = lengths.cd = lp;
    lengths.ac = lengths.bd = lengths.ad = lengths.bc = 1;
    return subdivided_k4(k, lengths, signed_case);
}

std::vector<CliqueCertificate> verify_subdivided_k4_power(const SubdividedK4& gadget) {
    const Graph& g = gadget.host.graph;
    const int n = g.vertex_count();
    if (gadget.kind == ConstructionCase::Odd) {
        Graph power = walk_power(g, 2 * gadget.k - 1);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!power.has_edge(u, v))
                    throw VerificationError("verify_subdivided_k4_power: vertices " +
                                            std::to_string(u) + " and " + std::to_string(v) +
                                            " are not adjacent in the walk-power");
        CliqueCertificate cert;
        cert.vertices.resize(n);
        for (int v = 0; v < n; ++v) cert.vertices[v] = v;
        cert.omega = n;
        cert.proven = true;
        return {cert};
    }

    Graph power = signed_bipartite_power(gadget.host, 2 * gadget.k - 2);
    auto parts = bipartition(g);
    if (!parts) throw VerificationError("verify_subdivided_k4_power: host is not bipartite");
    std::vector<int> side(n, 0);
    for (int v : parts->second) side[v] = 1;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const bool same = side[u] == side[v];
            const bool edge = power.has_edge(u, v);
            if (same && !edge)
                throw VerificationError("verify_subdivided_k4_power: same-part vertices " +
                                        std::to_string(u) + " and " + std::to_string(v) +
                                        " are not adjacent in the signed power");
            if (!same && edge)
                throw VerificationError("verify_subdivided_k4_power: cross-part edge " +
                                        std::to_string(u) + " -- " + std::to_string(v) +
                                        " appeared in the signed power");
        }
    }
    std::vector<CliqueCertificate> certs;
    for (const auto& part : {parts->first, parts->second}) {
        CliqueCertificate cert;
        cert.vertices = part;
        cert.omega = static_cast<int>(part.size());
        cert.proven = true;
        certs.push_back(std::move(cert));
    }
    return certs;
}

void check_construction_invariants(const PlaneConstruction& state) {
    const Graph& g = state.host.graph;
    const int n = g.vertex_count();
    if (state.k < 2) throw VerificationError("construction state has k < 2");
    if (n == 0) throw VerificationError("construction state has no vertices");

    // Connectivity.
    std::vector<char> seen(n, 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push(w);
            }
        }
    }
    if (reached != n) throw VerificationError("construction host is disconnected");

    // Faces: correct length, made of edges, each edge on exactly two faces.
    const int target = state.facial_length();
    std::map<Edge, int> uses;
    for (const auto& face : state.faces) {
        if (static_cast<int>(face.size()) != target)
            throw VerificationError("face has length " + std::to_string(face.size()) +
                                    ", expected " + std::to_string(target));
        check_no_duplicates(face, "a face");
        for (std::size_t i = 0; i < face.size(); ++i) {
            int u = face[i];
            int v = face[(i + 1) % face.size()];
            if (!g.has_edge(u, v))
                throw VerificationError("face uses the non-edge " + std::to_string(u) + " -- " +
                                        std::to_string(v));
            ++uses[Edge(u, v)];
        }
    }
    if (static_cast<int>(uses.size()) != g.edge_count())
        throw VerificationError("some edge lies on no face");
    for (const auto& [edge, count] : uses)
        if (count != 2)
            throw VerificationError("edge " + std::to_string(edge.u) + " -- " +
                                    std::to_string(edge.v) + " lies on " + std::to_string(count) +
                                    " faces, expected 2");

    // Euler's formula for a plane graph.
    if (n - g.edge_count() + static_cast<int>(state.faces.size()) != 2)
        throw VerificationError("Euler check failed: " + std::to_string(n) + " - " +
                                std::to_string(g.edge_count()) + " + " +
                                std::to_string(state.faces.size()) + " != 2");

    // Eligible threads must still look like maximal degree-2 paths. Spent
    // threads are historical records and may have gained bridge attachments.
    for (const Thread& t : state.threads) {
        if (!t.eligible) continue;
        for (int v : t.internal)
            if (g.degree(v) != 2)
                throw VerificationError("eligible thread has an internal vertex of degree " +
                                        std::to_string(g.degree(v)));
        if (g.degree(t.u) < 3 || g.degree(t.w) < 3)
            throw VerificationError("eligible thread endpoint has degree below 3");
    }

    check_no_duplicates(state.designated_x, "the designated set");
    check_no_duplicates(state.designated_y, "the designated set");
    for (int v : state.designated_all())
        if (v < 0 || v >= n) throw VerificationError("designated set mentions an unknown vertex");

    if (state.kind == ConstructionCase::Odd) {
        if (!state.host.sigma.empty())
            throw VerificationError("odd-case construction carries negative edges");
        if (!state.designated_y.empty())
            throw VerificationError("odd-case construction has a second designated set");
    } else {
        if (static_cast<int>(state.part_of.size()) != n)
            throw VerificationError("part coloring does not cover every vertex");
        for (const Edge& e : g.edges())
            if (state.part_of[e.u] == state.part_of[e.v])
                throw VerificationError("edge " + std::to_string(e.u) + " -- " +
                                        std::to_string(e.v) + " does not cross the parts");
        for (const auto& face : state.faces)
            if (cycle_sign(state.host, face) != CycleSign::Unbalanced)
                throw VerificationError("a facial cycle is balanced");
        for (int v : state.designated_x)
            if (state.part_of[v] != 0)
                throw VerificationError("first designated set leaks into the second part");
        for (int v : state.designated_y)
            if (state.part_of[v] != 1)
                throw VerificationError("second designated set leaks into the first part");
    }
}

namespace {

/// Per-step bookkeeping: designated sizes match the closed form, eligible
/// thread count and lengths match the doubling schedule.
void verify_step_counts(const PlaneConstruction& state) {
    const long long want = clique_size_formula(state.k, state.step, state.kind);
    if (state.kind == ConstructionCase::Odd) {
        if (static_cast<long long>(state.designated_x.size()) != want)
            throw VerificationError("designated clique has " +
                                    std::to_string(state.designated_x.size()) +
                                    " vertices after step " + std::to_string(state.step) +
                                    ", expected " + std::to_string(want));
    } else {
        for (const auto* set : {&state.designated_x, &state.designated_y})
            if (static_cast<long long>(set->size()) != want)
                throw VerificationError("a designated part-set has " +
                                        std::to_string(set->size()) + " vertices after step " +
                                        std::to_string(state.step) + ", expected " +
                                        std::to_string(want));
    }

    const int cap = state.kind == ConstructionCase::Odd ? 2 * state.k - 1 : 2 * state.k - 2;
    const long long expect = 1LL << std::min(state.step, cap);
    if (state.eligible_count() != expect)
        throw VerificationError("after step " + std::to_string(state.step) + " there are " +
                                std::to_string(state.eligible_count()) +
                                " eligible threads, expected " + std::to_string(expect));

    const int len = state.kind == ConstructionCase::Odd
                        ? 2 * state.k - state.step
                        : std::max(2 * state.k - 1 - state.step, 1);
    for (const auto& t : state.threads)
        if (t.eligible && t.r() + 1 != len)
            throw VerificationError("an eligible thread has length " + std::to_string(t.r() + 1) +
                                    " after step " + std::to_string(state.step) + ", expected " +
                                    std::to_string(len));
}

PlaneConstruction init_construction(int k, ConstructionCase kind) {
    SubdividedK4 gadget = subdivided_k4(k, kind == ConstructionCase::Bipartite);
    PlaneConstruction state;
    state.host = gadget.host;
    state.kind = kind;
    state.k = k;
    state.step = 1;
    state.faces = gadget.faces;

    const auto& pab = gadget.paths[0];
    const auto& pcd = gadget.paths[5];
    Thread tab{gadget.a, gadget.b,
               std::vector<int>(pab.begin() + 1, pab.end() - 1), true, "ab"};
    Thread tcd{gadget.c, gadget.d,
               std::vector<int>(pcd.begin() + 1, pcd.end() - 1), true, "cd"};
    state.threads = {tab, tcd};

    const int n = state.host.graph.vertex_count();
    if (kind == ConstructionCase::Odd) {
        state.designated_x.resize(n);
        for (int v = 0; v < n; ++v) state.designated_x[v] = v;
    } else {
        auto parts = bipartition(state.host.graph);
        if (!parts) throw VerificationError("signed construction host is not bipartite");
        state.part_of.assign(n, 0);
        for (int v : parts->second) state.part_of[v] = 1;
        state.designated_x = parts->first;
        state.designated_y = parts->second;
    }

    std::ostringstream line;
    line << "step 1: subdivided K_4, " << n << " vertices, "
         << state.host.graph.edge_count() << " edges, facial length " << state.facial_length();
    state.log.push_back(line.str());

    check_construction_invariants(state);
    verify_step_counts(state);
    return state;
}

}  // namespace

PlaneConstruction thread_double(const PlaneConstruction& state, int thread_index) {
    if (thread_index < 0 || thread_index >= static_cast<int>(state.threads.size()))
        throw std::out_of_range("thread_double: no thread with index " +
                                std::to_string(thread_index));
    PlaneConstruction s = state;
    Thread& t = s.threads[thread_index];
    if (!t.eligible)
        throw std::invalid_argument("thread_double: thread " + std::to_string(thread_index) +
                                    " is not eligible");
    const int r = t.r();
    if (r < 1)
        throw std::invalid_argument("thread_double: thread " + std::to_string(thread_index) +
                                    " has no internal vertices");
    const int target = s.facial_length();
    const int bridge_edges = target - (r + 1);
    if (bridge_edges < 1)
        throw std::invalid_argument("thread_double: thread length " + std::to_string(r + 1) +
                                    " leaves no room for a bridge inside a face of length " +
                                    std::to_string(target));

    // The thread as a vertex sequence, u first.
    std::vector<int> seq;
    seq.reserve(r + 2);
    seq.push_back(t.u);
    seq.insert(seq.end(), t.internal.begin(), t.internal.end());
    seq.push_back(t.w);

    // First registered face bounded by the thread; normalize its orientation
    // so the thread reads forward.
    int face_index = -1;
    int arc_pos = -1;
    for (std::size_t fi = 0; fi < s.faces.size() && face_index < 0; ++fi) {
        std::optional<int> pos = find_arc(s.faces[fi], seq);
        if (!pos) {
            std::vector<int> reversed(s.faces[fi].rbegin(), s.faces[fi].rend());
            pos = find_arc(reversed, seq);
            if (pos) s.faces[fi] = std::move(reversed);
        }
        if (pos) {
            face_index = static_cast<int>(fi);
            arc_pos = *pos;
        }
    }
    if (face_index < 0)
        throw VerificationError("thread_double: no registered face is bounded by the thread");

    const bool signed_case = s.kind == ConstructionCase::Bipartite;
    std::vector<bool> edge_negative(r + 1, false);
    if (signed_case)
        for (int j = 0; j <= r; ++j) edge_negative[j] = s.host.is_negative(seq[j], seq[j + 1]);

    Graph& graph = s.host.graph;
    std::vector<Edge> added_edges;
    auto add = [&](int x, int y, bool negative) {
        graph.add_edge(x, y);
        added_edges.push_back(Edge(x, y));
        if (negative) s.host.sigma.insert(Edge(x, y));
    };

    // Parallel copy u, v'_1 .. v'_r, w with the signs of the original read
    // backwards: the j-th new edge copies the (r-j)-th old one.
    const std::string stem =
        "s" + std::to_string(s.step) + ".t" + std::to_string(thread_index);
    std::vector<int> par(r);
    for (int j = 0; j < r; ++j) par[j] = graph.add_vertex(stem + ".p" + std::to_string(j + 1));
    std::vector<int> par_seq;
    par_seq.reserve(r + 2);
    par_seq.push_back(t.u);
    par_seq.insert(par_seq.end(), par.begin(), par.end());
    par_seq.push_back(t.w);
    for (int j = 0; j <= r; ++j)
        add(par_seq[j], par_seq[j + 1], signed_case && edge_negative[r - j]);

    // Bridge v_1 .. v'_r, all positive for now.
    const int v1 = t.internal.front();
    const int par_r = par[r - 1];
    std::vector<int> bridge_internal(bridge_edges - 1);
    for (int j = 0; j + 1 < bridge_edges; ++j)
        bridge_internal[j] = graph.add_vertex(stem + ".b" + std::to_string(j + 1));
    std::vector<int> bridge_seq;
    bridge_seq.reserve(bridge_edges + 1);
    bridge_seq.push_back(v1);
    bridge_seq.insert(bridge_seq.end(), bridge_internal.begin(), bridge_internal.end());
    bridge_seq.push_back(par_r);
    for (int j = 0; j < bridge_edges; ++j) add(bridge_seq[j], bridge_seq[j + 1], false);

    // The hosting face keeps its length: the parallel copy takes the arc over.
    const int face_len = static_cast<int>(s.faces[face_index].size());
    for (int j = 1; j <= r; ++j)
        s.faces[face_index][(arc_pos + j) % face_len] = par[j - 1];

    // Two new faces on either side of the bridge.
    std::vector<int> face_a;  // v_1 .. v_r, w, v'_r, b_{B-1} .. b_1
    face_a.insert(face_a.end(), t.internal.begin(), t.internal.end());
    face_a.push_back(t.w);
    face_a.push_back(par_r);
    for (int j = static_cast<int>(bridge_internal.size()) - 1; j >= 0; --j)
        face_a.push_back(bridge_internal[j]);
    std::vector<int> face_b;  // v'_r .. v'_1, u, v_1, b_1 .. b_{B-1}
    for (int j = r - 1; j >= 0; --j) face_b.push_back(par[j]);
    face_b.push_back(t.u);
    face_b.push_back(v1);
    face_b.insert(face_b.end(), bridge_internal.begin(), bridge_internal.end());
    s.faces.push_back(std::move(face_a));
    s.faces.push_back(std::move(face_b));
    const auto& new_a = s.faces[s.faces.size() - 2];
    const auto& new_b = s.faces[s.faces.size() - 1];

    bool flipped_bridge = false;
    if (signed_case) {
        // Both new faces must be unbalanced; their negative-count parities
        // agree, so one flip on the shared bridge fixes both at once.
        if (cycle_sign(s.host, new_a) == CycleSign::Balanced) {
            Edge first_bridge(bridge_seq[0], bridge_seq[1]);
            if (s.host.sigma.count(first_bridge))
                s.host.sigma.erase(first_bridge);
            else
                s.host.sigma.insert(first_bridge);
            flipped_bridge = true;
        }
        if (cycle_sign(s.host, new_a) != CycleSign::Unbalanced ||
            cycle_sign(s.host, new_b) != CycleSign::Unbalanced)
            throw VerificationError("thread_double: could not make both new faces unbalanced");
        if (cycle_sign(s.host, s.faces[face_index]) != CycleSign::Unbalanced)
            throw VerificationError("thread_double: the hosting face became balanced");

        s.part_of.resize(graph.vertex_count(), -1);
        for (int j = 0; j < r; ++j) s.part_of[par[j]] = s.part_of[t.u] ^ ((j + 1) & 1);
        for (std::size_t j = 0; j < bridge_internal.size(); ++j)
            s.part_of[bridge_internal[j]] =
                s.part_of[v1] ^ (static_cast<int>(j + 1) & 1);
        for (const Edge& e : added_edges)
            if (s.part_of[e.u] == s.part_of[e.v])
                throw VerificationError("thread_double: a new edge does not cross the parts");
    }

    // The parallel vertices join the designated clique(s).
    for (int j = 0; j < r; ++j) {
        if (s.kind == ConstructionCase::Odd)
            s.designated_x.push_back(par[j]);
        else
            (s.part_of[par[j]] == 0 ? s.designated_x : s.designated_y).push_back(par[j]);
    }

    // Registry: the doubled thread is spent; its two halves take over, and the
    // bridge is recorded but never doubled.
    t.eligible = false;
    Thread child_a{v1, t.w, std::vector<int>(t.internal.begin() + 1, t.internal.end()), true,
                   t.branch_pair};
    Thread child_b{t.u, par_r, std::vector<int>(par.begin(), par.end() - 1), true,
                   t.branch_pair};
    Thread bridge{v1, par_r, bridge_internal, false, t.branch_pair};
    s.threads.push_back(std::move(child_a));
    s.threads.push_back(std::move(child_b));
    s.threads.push_back(std::move(bridge));

    std::ostringstream line;
    line << "step " << s.step << ": doubled thread " << thread_index << " ("
         << thread_summary(state.threads[thread_index]) << "), bridge of " << bridge_edges
         << " edge" << (bridge_edges == 1 ? "" : "s");
    if (flipped_bridge) line << ", first bridge edge made negative";
    s.log.push_back(line.str());

    check_construction_invariants(s);
    return s;
}

PlaneConstruction thread_double(const PlaneConstruction& state, const Thread& t) {
    for (std::size_t i = 0; i < state.threads.size(); ++i) {
        const Thread& cand = state.threads[i];
        if (cand.u == t.u && cand.w == t.w && cand.internal == t.internal)
            return thread_double(state, static_cast<int>(i));
    }
    throw std::invalid_argument("thread_double: thread " + thread_summary(t) +
                                " is not in the registry");
}

namespace {

PlaneConstruction run_construction(int k, int steps, ConstructionCase kind) {
    if (k < 2) throw std::invalid_argument("construction requires k >= 2");
    const int max_steps = 2 * k - 1;
    if (steps < 1 || steps > max_steps)
        throw std::invalid_argument("steps must lie between 1 and 2k-1 = " +
                                    std::to_string(max_steps) + ", got " + std::to_string(steps));

    PlaneConstruction state = init_construction(k, kind);
    for (int i = 2; i <= steps; ++i) {
        std::vector<int> todo;
        for (std::size_t idx = 0; idx < state.threads.size(); ++idx)
            if (state.threads[idx].eligible) todo.push_back(static_cast<int>(idx));
        state.step = i;
        int doubled = 0;
        int skipped = 0;
        for (int idx : todo) {
            if (state.threads[idx].r() == 0) {
                if (kind == ConstructionCase::Odd)
                    throw VerificationError("odd construction reached a bare thread");
                state.log.push_back("step " + std::to_string(i) + ": skipped thread " +
                                    std::to_string(idx) + " (no internal vertices)");
                ++skipped;
                continue;
            }
            state = thread_double(state, idx);
            ++doubled;
        }
        state.log.push_back("step " + std::to_string(i) + " complete: " +
                            std::to_string(doubled) + " doubled, " + std::to_string(skipped) +
                            " skipped, " + std::to_string(state.host.graph.vertex_count()) +
                            " vertices");
        verify_step_counts(state);
    }
    return state;
}

}  // namespace

PlaneConstruction odd_construction(int k, int steps) {
    return run_construction(k, steps, ConstructionCase::Odd);
}

PlaneConstruction signed_construction(int k, int steps) {
    return run_construction(k, steps, ConstructionCase::Bipartite);
}

long long clique_size_formula(int k, int i, ConstructionCase kind) {
    if (k < 2) throw std::invalid_argument("clique_size_formula: k must be at least 2");
    if (i < 1 || i > 2 * k - 1)
        throw std::invalid_argument("clique_size_formula: step must lie between 1 and 2k-1 = " +
                                    std::to_string(2 * k - 1) + ", got " + std::to_string(i));
    long long total = kind == ConstructionCase::Odd ? 4LL * k : 2LL * k - 1;
    for (int j = 1; j <= i - 1; ++j) {
        if (kind == ConstructionCase::Odd)
            total += (1LL << j) * (2 * k - j - 1);
        else
            total += (1LL << (j - 1)) * (2 * k - j - 2);
    }
    return total;
}

DegreeGadget degree_gadget(int k) {
    if (k < 2) throw std::invalid_argument("degree_gadget: k must be at least 2");
    Graph g;
    const int path_vertices = 2 * k + 1;
    std::vector<int> xs(path_vertices);
    for (int i = 0; i < path_vertices; ++i) xs[i] = g.add_vertex("x" + std::to_string(i + 1));

    // Each x_i x_{i+1} edge becomes a path with 2k-2 internal vertices.
    std::vector<std::vector<int>> sub(path_vertices - 1);
    for (int i = 0; i + 1 < path_vertices; ++i) {
        int prev = xs[i];
        for (int j = 1; j <= 2 * k - 2; ++j) {
            int v = g.add_vertex("p" + std::to_string(i + 1) + "." + std::to_string(j));
            g.add_edge(prev, v);
            sub[i].push_back(v);
            prev = v;
        }
        g.add_edge(prev, xs[i + 1]);
    }

    // Shortcut chain: member t sits on the path between x_{t+1} and x_{t+2},
    // at distance t from x_{t+1}; consecutive members are joined, the first to
    // x_1 and the last to x_{2k+1}.
    std::vector<int> chain(2 * k - 2);
    for (int t = 1; t <= 2 * k - 2; ++t) chain[t - 1] = sub[t][t - 1];
    g.add_edge(xs[0], chain.front());
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) g.add_edge(chain[j], chain[j + 1]);
    g.add_edge(chain.back(), xs[path_vertices - 1]);

    DegreeGadget out;
    out.apex = g.add_vertex("apex");
    for (int x : xs) g.add_edge(x, out.apex);
    out.clique = xs;
    out.graph = std::move(g);

    const int expected_vertices = 4 * k * k - 2 * k + 2;
    if (out.graph.vertex_count() != expected_vertices)
        throw VerificationError("degree_gadget: built " +
                                std::to_string(out.graph.vertex_count()) +
                                " vertices, expected " + std::to_string(expected_vertices));
    Girth og = odd_girth(out.graph);
    if (!og || *og != 2 * k + 1)
        throw VerificationError("degree_gadget: odd-girth is " +
                                (og ? std::to_string(*og) : std::string("absent")) +
                                ", expected " + std::to_string(2 * k + 1));
    Graph power = walk_power(out.graph, 2 * k - 1);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (!power.has_edge(xs[i], xs[j]))
                throw VerificationError("degree_gadget: " + out.graph.label(xs[i]) + " and " +
                                        out.graph.label(xs[j]) +
                                        " are not adjacent in the walk-power");
    return out;
}

std::string construction_certificate(const PlaneConstruction& state) {
    const Graph& g = state.host.graph;
    std::ostringstream out;
    out << "construction certificate\n";
    out << "case " << to_string(state.kind) << "\n";
    out << "k " << state.k << "\n";
    out << "steps " << state.step << "\n";
    out << "vertices " << g.vertex_count() << "\n";
    out << "edges " << g.edge_count() << "\n";
    out << "faces " << state.faces.size() << "\n";
    if (state.kind == ConstructionCase::Odd) {
        std::vector<int> clique = sorted_copy(state.designated_x);
        out << "clique " << clique.size() << ": " << join(clique) << "\n";
    } else {
        std::vector<int> cx = sorted_copy(state.designated_x);
        std::vector<int> cy = sorted_copy(state.designated_y);
        out << "clique-x " << cx.size() << ": " << join(cx) << "\n";
        out << "clique-y " << cy.size() << ": " << join(cy) << "\n";
    }
    out << "# faces\n";
    for (const auto& face : state.faces) out << "face " << face.size() << ": " << join(face) << "\n";
    out << "# threads\n";
    for (std::size_t i = 0; i < state.threads.size(); ++i) {
        const Thread& t = state.threads[i];
        out << "thread " << i << " " << (t.eligible ? "eligible" : "inactive") << " "
            << t.branch_pair << ": " << t.u;
        if (!t.internal.empty()) out << " " << join(t.internal);
        out << " " << t.w << "\n";
    }
    out << "# labels\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.label(v).empty()) out << "label " << v << " " << g.label(v) << "\n";
    out << "# history\n";
    for (const auto& line : state.log) out << line << "\n";
    return out.str();
}

}  // namespace walkpower

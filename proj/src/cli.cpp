#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "skew/certify.hpp"
#include "skew/cli.hpp"
#include "skew/families.hpp"
#include "skew/graph.hpp"
#include "skew/planarity.hpp"
#include "skew/report.hpp"
#include "skew/skewness.hpp"

namespace skew::cli {

namespace {

using nlohmann::ordered_json;

Graph load_graph(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return read_edge_list(in);
    std::ifstream f(path);
    if (!f) throw ParseError{0, 0, "cannot open '" + path + "'"};
    return read_edge_list(f);
}

void emit_graph(const Graph& g, const std::string& path, bool dot, std::ostream& out) {
    auto write = [&](std::ostream& os) { dot ? write_dot(g, os) : write_edge_list(g, os); };
    if (path.empty() || path == "-") {
        write(out);
    } else {
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
        write(f);
    }
}

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

ordered_json certificate_json(const SkewnessCertificate& c) {
    ordered_json j;
    j["W"] = c.total_weight;
    j["w_min"] = c.min_edge_weight;
    j["girth"] = c.girth;
    j["V"] = c.vertex_count;
    j["E"] = c.edge_count;
    j["numerator"] = c.numerator;
    j["denominator"] = c.denominator;
    j["bound"] = c.bound;
    j["assumption"] = c.assumption;
    return j;
}

void print_certificate(const SkewnessCertificate& c, bool json, std::ostream& out) {
    if (json) {
        out << certificate_json(c).dump(2) << "\n";
        return;
    }
    out << "total weight W        : " << c.total_weight << "\n";
    out << "minimum edge weight   : " << c.min_edge_weight << "\n";
    out << "weighted girth        : " << c.girth << "\n";
    out << "vertices / edges      : " << c.vertex_count << " / " << c.edge_count << "\n";
    out << "numerator g(E-V+2)-2W : " << c.numerator << "\n";
    out << "denominator g-2w_min  : " << c.denominator << "\n";
    out << "skewness lower bound  : " << c.bound << "\n";
    out << "assumption            : " << c.assumption << "\n";
}

EdgeWeighting read_weighting_file(const Graph& g, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError{0, 0, "cannot open '" + path + "'"};
    EdgeWeighting w;
    w.weights.assign(g.edge_count(), -1);
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        long long u, v, wt;
        std::istringstream ls2(line);
        if (!(ls2 >> u >> v >> wt))
            throw ParseError{lineno, 1, "expected 'u v weight'"};
        int idx = g.edge_index(static_cast<int>(u), static_cast<int>(v));
        if (idx < 0)
            throw ParseError{lineno, 1, "edge (" + std::to_string(u) + "," +
                                            std::to_string(v) + ") not in graph"};
        w.weights[idx] = wt;
    }
    for (int i = 0; i < g.edge_count(); ++i)
        if (w.weights[i] < 0)
            throw ParseError{0, 0, "weighting file misses edge " + edge_str(g.edges()[i])};
    return w;
}

struct GenArgs {
    std::string family;
    int s = 0, k = 0, n = 0;
    bool dot = false;
    std::string output;
};

Graph build_family(const GenArgs& a) {
    if (a.family == "q") {
        if (a.s <= 0 || a.k <= 0)
            throw std::invalid_argument("family q requires --s and --k");
        return q_graph(a.s, a.k);
    }
    if (a.family == "petersen") {
        if (a.n <= 0 || a.k <= 0)
            throw std::invalid_argument("family petersen requires --n and --k");
        return petersen(a.n, a.k);
    }
    throw std::invalid_argument("unknown family '" + a.family + "' (use q or petersen)");
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
    emit_graph(build_family(a), a.output, a.dot, out);
    return kOk;
}

int cmd_planar(const std::string& input, bool show_embed, bool show_witness, std::istream& in,
               std::ostream& out) {
    Graph g = load_graph(input, in);
    bool planar = is_planar(g);
    out << (planar ? "planar" : "nonplanar") << "\n";
    if (show_embed) {
        if (!planar) {
            out << "no embedding: graph is nonplanar\n";
        } else {
            auto emb = embed(g);
            out << "faces " << emb.face_count() << " components " << emb.component_count
                << "\n";
            for (int i = 0; i < emb.face_count(); ++i) {
                out << "face " << i << ":";
                const auto& f = emb.faces[i];
                for (size_t wi = 0; wi < f.walks.size(); ++wi) {
                    if (wi > 0) out << " |";
                    for (int v : f.walks[wi]) out << " " << v;
                    if (!f.walks[wi].empty()) out << " " << f.walks[wi].front();
                }
                out << "\n";
            }
        }
    }
    if (show_witness) {
        if (planar) {
            out << "no witness: graph is planar\n";
        } else {
            auto w = kuratowski_witness(g);
            out << "witness kind " << (w.kind == WitnessKind::K5 ? "K5" : "K3,3") << " with "
                << w.edges.size() << " edges:";
            for (const Edge& e : w.edges.edges) out << " " << edge_str(e);
            out << "\n";
        }
    }
    return kOk;
}

struct CertifyArgs {
    std::string family;
    int s = 0, k = 0;
    std::string weighting = "paper";
    bool json = false;
};

int cmd_certify(const CertifyArgs& a, std::ostream& out) {
    Graph g;
    EdgeWeighting w;
    if (a.family == "q") {
        if (a.s <= 0 || a.k <= 0)
            throw std::invalid_argument("family q requires --s and --k");
        g = q_graph(a.s, a.k);
        w = a.weighting == "paper" ? paper_weighting_q(a.s, a.k)
                                   : read_weighting_file(g, a.weighting);
    } else if (a.family == "petersen4k") {
        if (a.k <= 0) throw std::invalid_argument("family petersen4k requires --k");
        g = petersen(4 * a.k, a.k);
        w = a.weighting == "paper" ? paper_weighting_p(a.k)
                                   : read_weighting_file(g, a.weighting);
    } else {
        throw std::invalid_argument("unknown family '" + a.family +
                                    "' (use q or petersen4k)");
    }
    print_certificate(counting_bound(g, w), a.json, out);
    return kOk;
}

struct SkewnessArgs {
    std::string input;
    std::string mode = "exact";
    std::optional<std::int64_t> node_cap;
    std::optional<int> lower_bound;
    std::optional<double> time_budget;
    int restarts = 64;
    std::uint64_t seed = kDefaultSeed;
    bool json = false;
};

int cmd_skewness(const SkewnessArgs& a, std::istream& in, std::ostream& out,
                 std::ostream& err) {
    Graph g = load_graph(a.input, in);
    SkewnessResult r;
    if (a.mode == "exact") {
        ExactOptions opt;
        opt.node_cap = a.node_cap;
        opt.known_lower_bound = a.lower_bound;
        opt.seed = a.seed;
        r = skewness_exact(g, opt);
    } else if (a.mode == "brute") {
        r = skewness_bruteforce(g, g.edge_count());
    } else if (a.mode == "heuristic") {
        HeuristicOptions opt;
        opt.restarts = a.restarts;
        opt.seed = a.seed;
        opt.time_budget_seconds = a.time_budget;
        r = skewness_heuristic(g, opt);
    } else {
        throw std::invalid_argument("unknown mode '" + a.mode + "'");
    }
    std::string status = r.status == SolveStatus::Exact        ? "exact"
                         : r.status == SolveStatus::UpperBound ? "upper-bound"
                                                               : "lower-bound";
    if (a.json) {
        ordered_json j;
        j["value"] = r.value;
        j["status"] = status;
        j["deletion_set"] = ordered_json::array();
        for (const Edge& e : r.deletion_set.edges)
            j["deletion_set"].push_back(ordered_json::array({e.u, e.v}));
        j["nodes"] = r.stats.nodes;
        j["planarity_calls"] = r.stats.planarity_calls;
        out << j.dump(2) << "\n";
    } else {
        out << "skewness " << (r.status == SolveStatus::Exact ? "" : "(" + status + ") ")
            << r.value << "\n";
        out << "deletion set:";
        for (const Edge& e : r.deletion_set.edges) out << " " << edge_str(e);
        out << "\n";
        out << "nodes " << r.stats.nodes << " planarity-calls " << r.stats.planarity_calls
            << "\n";
    }
    err << "elapsed " << r.stats.elapsed_ms << " ms\n";
    if (a.mode == "exact" && r.status != SolveStatus::Exact) return kUnresolved;
    return kOk;
}

struct ConstructHArgs {
    int s = 0, k = 0;
    bool verify = false;
    bool dot = false;
    std::string output;
};

int cmd_construct_h(const ConstructHArgs& a, std::ostream& out) {
    Graph q = q_graph(a.s, a.k);
    EdgeSubset del = h_deletion_set(a.s, a.k);
    Graph h = delete_edges(q, del);
    if (a.verify) {
        bool planar = is_planar(h);
        out << del.size() << " edges deleted; residual planar: "
            << (planar ? "true" : "false") << "\n";
        return planar ? kOk : kVerificationFailed;
    }
    out << "# H_" << a.s << "(" << a.k << ") deletion set (" << del.size() << " edges):";
    for (const Edge& e : del.edges) out << " " << edge_str(e);
    out << "\n";
    emit_graph(h, a.output, a.dot, out);
    return kOk;
}

struct CyclesArgs {
    int k = 0;
    std::int64_t budget = -1;
    int threads = 1;
    bool json = false;
};

int cmd_cycles(const CyclesArgs& a, std::ostream& out) {
    Graph p = petersen(4 * a.k, a.k);
    EdgeWeighting w = paper_weighting_p(a.k);
    std::int64_t budget = a.budget >= 0 ? a.budget : 8 * a.k - 8;
    auto cycles = enumerate_min_cycles(p, w, budget, a.threads);
    auto type_name = [](CycleType t) {
        switch (t) {
            case CycleType::TypeI: return "i";
            case CycleType::TypeII_III: return "ii/iii";
            case CycleType::TypeIV: return "iv";
            default: return "other";
        }
    };
    if (a.json) {
        ordered_json j;
        j["k"] = a.k;
        j["budget"] = budget;
        j["count"] = cycles.size();
        j["cycles"] = ordered_json::array();
        for (const auto& c : cycles) {
            auto cls = classify_cycle(c, a.k);
            ordered_json row;
            row["vertices"] = c;
            row["type"] = type_name(cls.type);
            row["anchor"] = cls.anchor;
            j["cycles"].push_back(row);
        }
        out << j.dump(2) << "\n";
    } else {
        out << cycles.size() << " cycle(s) of weight <= " << budget << " in P(" << 4 * a.k
            << "," << a.k << ")\n";
        for (const auto& c : cycles) {
            auto cls = classify_cycle(c, a.k);
            out << "type " << type_name(cls.type);
            if (cls.anchor >= 0) out << " anchor " << cls.anchor;
            out << " :";
            for (int v : c) out << " " << (v < 4 * a.k ? "u" : "v") << v % (4 * a.k);
            out << "\n";
        }
    }
    return kOk;
}

struct AuditArgs {
    int s = 0, k = 0;
    bool x_solve = false;
};

int cmd_audit(const AuditArgs& a, std::ostream& out) {
    if (a.x_solve) {
        if (a.k <= 0) throw std::invalid_argument("--x-solve requires --k");
        auto x = type_one_face_count(3 * a.k + 1, 12 * a.k);
        out << "faces " << 3 * a.k + 1 << " total-w' " << 12 * a.k << " -> x = "
            << (x ? std::to_string(*x) : "no integer solution") << "\n";
        return kOk;
    }
    if (a.s <= 0 || a.k <= 0) throw std::invalid_argument("audit requires --s and --k");
    Graph q = q_graph(a.s, a.k);
    EdgeSubset del = h_deletion_set(a.s, a.k);
    Graph h = delete_edges(q, del);
    EdgeWeighting wq = paper_weighting_q(a.s, a.k);
    EdgeWeighting wh;
    for (const Edge& e : h.edges()) wh.weights.push_back(wq.of(q, e.u, e.v));
    auto emb = embed(h);
    auto rep = face_weight_audit(h, emb, wh);
    out << "face weights of H_" << a.s << "(" << a.k << "):\n";
    for (size_t i = 0; i < rep.face_weights.size(); ++i)
        out << "face " << i << " boundary " << emb.faces[i].boundary_length() << " weight "
            << rep.face_weights[i] << "\n";
    out << "sum " << rep.total_face_weight << " = 2 * " << rep.graph_weight << " : "
        << (rep.identity_holds ? "ok" : "VIOLATED") << "\n";
    return rep.identity_holds ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"skewness toolkit: generators, planarity, certificates, solvers"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* sub_gen = app.add_subcommand("gen", "generate a graph family");
    sub_gen->add_option("--family", gen.family, "q | petersen")->required();
    sub_gen->add_option("--s", gen.s, "Q_s(k): number of rim groups");
    sub_gen->add_option("--k", gen.k, "family parameter k");
    sub_gen->add_option("--n", gen.n, "petersen rim size n");
    sub_gen->add_flag("--dot", gen.dot, "emit DOT instead of edge list");
    sub_gen->add_option("-o,--output", gen.output, "output file (default stdout)");

    std::string planar_input;
    bool planar_embed = false, planar_witness = false;
    auto* sub_planar = app.add_subcommand("planar", "planarity verdict for an edge list");
    sub_planar->add_option("-i,--input", planar_input, "input file (default stdin)");
    sub_planar->add_flag("--embed", planar_embed, "dump faces of an embedding");
    sub_planar->add_flag("--witness", planar_witness, "dump a Kuratowski witness");

    CertifyArgs cert;
    auto* sub_cert = app.add_subcommand("certify", "counting-bound certificate");
    sub_cert->add_option("--family", cert.family, "q | petersen4k")->required();
    sub_cert->add_option("--s", cert.s, "s for family q");
    sub_cert->add_option("--k", cert.k, "family parameter k")->required();
    sub_cert->add_option("--weighting", cert.weighting, "'paper' or a weight file");
    sub_cert->add_flag("--json", cert.json, "machine-readable record");

    SkewnessArgs skewa;
    auto* sub_skew = app.add_subcommand("skewness", "compute or bound skewness");
    sub_skew->add_option("-i,--input", skewa.input, "input file (default stdin)");
    bool f_exact = false, f_brute = false, f_heur = false;
    sub_skew->add_flag("--exact", f_exact, "branch-and-bound exact search (default)");
    sub_skew->add_flag("--brute", f_brute, "brute-force oracle");
    sub_skew->add_flag("--heuristic", f_heur, "greedy upper bound");
    std::int64_t node_cap = -1;
    int lower_bound = -1;
    double time_budget = -1;
    sub_skew->add_option("--node-cap", node_cap, "node budget for exact mode");
    sub_skew->add_option("--lower-bound", lower_bound,
                         "known lower bound (e.g. a certificate); lets the exact "
                         "search stop once matched");
    sub_skew->add_option("--time-budget", time_budget, "seconds, heuristic mode");
    sub_skew->add_option("--restarts", skewa.restarts, "heuristic restarts");
    sub_skew->add_option("--seed", skewa.seed, "RNG seed");
    sub_skew->add_flag("--json", skewa.json, "machine-readable record");

    ConstructHArgs hargs;
    auto* sub_h = app.add_subcommand("construct-h", "H_s(k) deletion set and residual");
    sub_h->add_option("--s", hargs.s, "s")->required();
    sub_h->add_option("--k", hargs.k, "k")->required();
    sub_h->add_flag("--verify", hargs.verify, "print verdict line only");
    sub_h->add_flag("--dot", hargs.dot, "emit DOT residual");
    sub_h->add_option("-o,--output", hargs.output, "output file (default stdout)");

    CyclesArgs cargs;
    auto* sub_cycles = app.add_subcommand("cycles", "minimum-weight cycles of P(4k,k)");
    sub_cycles->add_option("--k", cargs.k, "k (odd, >= 9)")->required();
    sub_cycles->add_option("--budget", cargs.budget, "weight budget (default 8k-8)");
    sub_cycles->add_option("--threads", cargs.threads, "worker threads");
    sub_cycles->add_flag("--json", cargs.json, "machine-readable record");

    AuditArgs aargs;
    auto* sub_audit = app.add_subcommand("audit", "face-weight audit of H_s(k)");
    sub_audit->add_option("--s", aargs.s, "s");
    sub_audit->add_option("--k", aargs.k, "k");
    sub_audit->add_flag("--x-solve", aargs.x_solve, "solve 4x+8(F-x)=2W' instead");

    ReportOptions ropt;
    std::string grid = "full";
    auto* sub_report = app.add_subcommand("paper-report", "run the verification grid");
    sub_report->add_option("--grid", grid, "small | full");
    sub_report->add_option("--threads", ropt.threads, "worker threads");
    sub_report->add_flag("--stretch", ropt.stretch, "include the stretch instance");
    sub_report->add_flag("--json", ropt.json, "machine-readable record");
    sub_report->add_option("--seed", ropt.seed, "RNG seed");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (sub_gen->parsed()) return cmd_gen(gen, out);
        if (sub_planar->parsed())
            return cmd_planar(planar_input, planar_embed, planar_witness, in, out);
        if (sub_cert->parsed()) return cmd_certify(cert, out);
        if (sub_skew->parsed()) {
            int picked = (f_exact ? 1 : 0) + (f_brute ? 1 : 0) + (f_heur ? 1 : 0);
            if (picked > 1) {
                err << "usage error: --exact, --brute, --heuristic are exclusive\n";
                return kUsageError;
            }
            skewa.mode = f_brute ? "brute" : f_heur ? "heuristic" : "exact";
            if (node_cap >= 0) skewa.node_cap = node_cap;
            if (lower_bound >= 0) skewa.lower_bound = lower_bound;
            if (time_budget >= 0) skewa.time_budget = time_budget;
            return cmd_skewness(skewa, in, out, err);
        }
        if (sub_h->parsed()) return cmd_construct_h(hargs, out);
        if (sub_cycles->parsed()) return cmd_cycles(cargs, out);
        if (sub_audit->parsed()) return cmd_audit(aargs, out);
        if (sub_report->parsed()) {
            if (grid == "small")
                ropt.grid = ReportOptions::Grid::Small;
            else if (grid == "full")
                ropt.grid = ReportOptions::Grid::Full;
            else
                throw std::invalid_argument("unknown grid '" + grid + "'");
            return paper_report(ropt, out) == 0 ? kOk : kVerificationFailed;
        }
    } catch (const ParseError& e) {
        err << "parse error at line " << e.line << ", col " << e.column << ": " << e.message
            << "\n";
        return kParseError;
    } catch (const std::invalid_argument& e) {
        err << "infeasible parameters: " << e.what() << "\n";
        return kInfeasibleParams;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kVerificationFailed;
    }
    return kUsageError;
}

}  // namespace skew::cli

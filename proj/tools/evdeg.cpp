#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "evdeg/fsum.hpp"
#include "evdeg/generate.hpp"
#include "evdeg/graph.hpp"
#include "evdeg/graph_io.hpp"
#include "evdeg/indices.hpp"
#include "evdeg/products.hpp"
#include "evdeg/report.hpp"
#include "evdeg/transforms.hpp"
#include "evdeg/verifier.hpp"

namespace {

using namespace evdeg;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = slurp(path);
    if (format == "graph6") {
        std::istringstream ss(text);
        std::string line;
        while (std::getline(ss, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return from_graph6(line);
        }
        throw std::runtime_error(path + ": empty graph6 input");
    }
    return from_edge_list(text);
}

void emit(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::cout << data;
        std::cout.flush();
        if (!std::cout) throw std::runtime_error("write to stdout failed");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << data;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string compute_json(const Graph& g, const std::string& select) {
    nlohmann::ordered_json out;
    if (select == "all" || select == "classic") {
        ClassicInvariants c = classic_invariants(g);
        out["n"] = c.n;
        out["m"] = c.m;
        out["M1"] = c.M1;
        out["M2"] = c.M2;
        out["F"] = c.F;
        out["HM1"] = c.HM1;
        out["eta"] = c.eta;
    }
    if (select == "all" || select == "ev") {
        EvIndexBundle b = ev_indices(g);
        out["Mev"] = b.Mev;
        out["Fev"] = b.Fev;
        out["NKev"] = b.NKev.str();
        out["mMev"] = rational_string(b.mMev);
        out["Rev"] = b.Rev;
    }
    return out.dump(2) + "\n";
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::path, Family::cycle, Family::complete, Family::star,
                     Family::complete_bipartite, Family::random_gnp,
                     Family::random_bipartite_gnp}) {
        if (family_name(f) == name) return f;
    }
    throw std::runtime_error("unknown family: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ev-degree graph indices, constructions, and identity verification"};
    app.require_subcommand(1);

    std::string c_input = "-", c_format = "edgelist", c_select = "all";
    CLI::App* compute = app.add_subcommand("compute", "Index bundles of one graph as JSON");
    compute->add_option("--input,-i", c_input, "edge-list or graph6 file, - for stdin");
    compute->add_option("--format", c_format, "input format")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
    compute->add_option("--select", c_select, "which bundles to print")
        ->check(CLI::IsMember({"all", "classic", "ev"}));

    std::string t_op, t_input = "-", t_output = "-";
    CLI::App* transform = app.add_subcommand("transform", "Derived graph of one input graph");
    transform->add_option("--op", t_op, "line, sd, esto, vsto, or to")
        ->required()
        ->check(CLI::IsMember({"line", "sd", "esto", "vsto", "to"}));
    transform->add_option("--input,-i", t_input, "edge-list file, - for stdin");
    transform->add_option("--output,-o", t_output, "edge-list file, - for stdout");

    std::string p_op, p_g, p_h, p_output = "-";
    CLI::App* product = app.add_subcommand("product", "Binary graph construction");
    product->add_option("--op", p_op, "union, join, cartesian, composition, corona, tensor, or sum-sd/esto/vsto/to")
        ->required()
        ->check(CLI::IsMember({"union", "join", "cartesian", "composition", "corona", "tensor",
                               "sum-sd", "sum-esto", "sum-vsto", "sum-to"}));
    product->add_option("G", p_g, "edge-list file for the first factor")->required();
    product->add_option("H", p_h, "edge-list file for the second factor")->required();
    product->add_option("--output,-o", p_output, "edge-list file, - for stdout");

    std::string fs_kind, fs_g, fs_h, fs_output = "-";
    CLI::App* fsum_cmd = app.add_subcommand("fsum", "F-sum of two graphs");
    fsum_cmd->add_option("--kind", fs_kind, "sd, esto, vsto, or to")
        ->required()
        ->check(CLI::IsMember({"sd", "esto", "vsto", "to"}));
    fsum_cmd->add_option("G", fs_g, "edge-list file for G")->required();
    fsum_cmd->add_option("H", fs_h, "edge-list file for H")->required();
    fsum_cmd->add_option("--output,-o", fs_output, "edge-list file, - for stdout");

    std::string g_family, g_output = "-";
    int g_a = 1, g_b = 0;
    double g_p = 0.0;
    std::uint64_t g_seed = 0;
    CLI::App* gen = app.add_subcommand("gen", "Generate a family member as an edge list");
    gen->add_option("--family", g_family,
                    "path, cycle, complete, star, complete_bipartite, random_gnp, random_bipartite_gnp")
        ->required();
    gen->add_option("--a,--n", g_a, "size (vertices; leaves for star; left side when bipartite)");
    gen->add_option("--b", g_b, "right side for bipartite families");
    gen->add_option("--p", g_p, "edge probability for random families")
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", g_seed, "PRNG seed for random families");
    gen->add_option("--output,-o", g_output, "edge-list file, - for stdout");

    std::string v_suite = "all", v_corpus = "builtin", v_report = "-", v_format = "json";
    int v_n = 9, v_pair_n = 6, v_samples = 200, v_pair_samples = 100;
    double v_p = 0.4;
    std::uint64_t v_seed = 0;
    CLI::App* verify = app.add_subcommand("verify", "Check the identity suite over a corpus");
    verify->add_option("--suite", v_suite, "all, theorems, lemmas, or properties")
        ->check(CLI::IsMember({"all", "theorems", "lemmas", "properties"}));
    verify->add_option("--corpus", v_corpus, "builtin families or seeded random graphs")
        ->check(CLI::IsMember({"builtin", "random"}));
    verify->add_option("--n", v_n, "random corpus: max vertices per sample")
        ->check(CLI::Range(2, 64));
    verify->add_option("--p", v_p, "random corpus: edge probability")
        ->check(CLI::Range(0.0, 1.0));
    verify->add_option("--samples", v_samples, "random corpus: single-graph sample count")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--pair-n", v_pair_n, "random corpus: max vertices per pair member")
        ->check(CLI::Range(2, 64));
    verify->add_option("--pair-samples", v_pair_samples, "random corpus: pair sample count")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", v_seed, "corpus seed");
    verify->add_option("--report", v_report, "report file, - for stdout");
    verify->add_option("--format", v_format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*compute) {
            emit("-", compute_json(load_graph(c_input, c_format), c_select));
            return 0;
        }

        if (*transform) {
            Graph g = load_graph(t_input, "edgelist");
            Graph out;
            if (t_op == "line") {
                out = line_graph(g);
            } else if (t_op == "sd") {
                out = subdivision(g);
            } else if (t_op == "esto") {
                out = edge_semitotal(g);
            } else if (t_op == "vsto") {
                out = vertex_semitotal(g);
            } else {
                out = total_graph(g);
            }
            emit(t_output, to_edge_list(out));
            return 0;
        }

        if (*product) {
            if (p_g == "-" && p_h == "-") {
                throw std::runtime_error("at most one factor may come from stdin");
            }
            Graph g = load_graph(p_g, "edgelist");
            Graph h = load_graph(p_h, "edgelist");
            Graph out;
            if (p_op == "union") {
                out = disjoint_union(g, h);
            } else if (p_op == "join") {
                out = join(g, h);
            } else if (p_op == "cartesian") {
                out = cartesian_product(g, h);
            } else if (p_op == "composition") {
                out = composition(g, h);
            } else if (p_op == "corona") {
                out = corona(g, h);
            } else if (p_op == "tensor") {
                out = tensor_product(g, h);
            } else if (p_op == "sum-sd") {
                out = f_sum(g, h, FKind::sd);
            } else if (p_op == "sum-esto") {
                out = f_sum(g, h, FKind::esto);
            } else if (p_op == "sum-vsto") {
                out = f_sum(g, h, FKind::vsto);
            } else {
                out = f_sum(g, h, FKind::to);
            }
            emit(p_output, to_edge_list(out));
            return 0;
        }

        if (*fsum_cmd) {
            if (fs_g == "-" && fs_h == "-") {
                throw std::runtime_error("at most one factor may come from stdin");
            }
            Graph g = load_graph(fs_g, "edgelist");
            Graph h = load_graph(fs_h, "edgelist");
            FKind kind = fs_kind == "sd"     ? FKind::sd
                         : fs_kind == "esto" ? FKind::esto
                         : fs_kind == "vsto" ? FKind::vsto
                                             : FKind::to;
            emit(fs_output, to_edge_list(f_sum(g, h, kind)));
            return 0;
        }

        if (*gen) {
            FamilySpec spec;
            spec.family = parse_family(g_family);
            spec.a = g_a;
            spec.b = g_b;
            spec.p = g_p;
            spec.seed = g_seed;
            emit(g_output, to_edge_list(generate(spec)));
            return 0;
        }

        if (*verify) {
            Suite suite = v_suite == "all"        ? Suite::all
                          : v_suite == "theorems" ? Suite::theorems
                          : v_suite == "lemmas"   ? Suite::lemmas
                                                  : Suite::properties;
            CorpusSpec cs;
            if (v_corpus == "builtin") {
                cs.kind = CorpusSpec::Kind::builtin;
            } else {
                cs.kind = CorpusSpec::Kind::random;
                cs.samples = v_samples;
                cs.max_n = v_n;
                cs.p = v_p;
                cs.pair_samples = v_pair_samples;
                cs.pair_max_n = v_pair_n;
            }
            Report rep = run_suite(suite, {cs}, v_seed);
            emit(v_report, v_format == "json" ? report_json(rep) : report_csv(rep));
            return all_passed(rep) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "evdeg: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

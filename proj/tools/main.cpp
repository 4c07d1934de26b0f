// Command-line front end: catalog listing and verification, isomorphism
// classification, per-lattice invariants, SAT-certified chromatic bounds,
// and DIMACS / graph exports.
//
// Exit codes: 0 full agreement with embedded expected values (or pure
// informational run), 1 disagreement or failure, 2 usage error, 3 solver
// budget exhausted.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <latchroma/latchroma.hpp>

namespace {

using namespace latchroma;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string format_vec(const Vec& v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        out << v[i];
    }
    out << ')';
    return out.str();
}

// A lattice the CLI can talk about: a catalog row or a demo lattice.
struct ResolvedEntry {
    std::string name;
    GeneratorSet generators;
    int chi = 0;       // catalogued chromatic number
    int torus_c = 0;   // catalogued certifying torus scale
    int class_id = 0;  // 0 for demo lattices
    bool demo = false;
};

ResolvedEntry resolve_entry(const std::string& symbol) {
    if (const CatalogEntry* e = find_entry(symbol))
        return {e->symbol, strict_voronoi_vectors(e->form()),
                e->expected_chi, e->torus_scale_c, e->expected_class, false};
    if (const DemoLattice* d = find_demo(symbol))
        return {d->name, strict_voronoi_vectors(d->form),
                d->expected_chi, d->torus_scale_c, 0, true};
    throw std::runtime_error("unknown lattice '" + symbol + "' (see `catalog list`)");
}

void write_text_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

int cmd_catalog_list(bool as_json) {
    if (as_json) {
        std::cout << catalog_to_json().dump(2) << '\n';
        return 0;
    }
    std::cout << std::left << std::setw(12) << "symbol" << std::setw(6) << "zono"
              << std::setw(6) << "rays" << std::setw(5) << "dim" << std::setw(7) << "pairs"
              << std::setw(7) << "class" << std::setw(5) << "chi" << "c\n";
    for (const auto& e : catalog()) {
        std::cout << std::left << std::setw(12) << e.symbol << std::setw(6)
                  << (e.zonotopal ? "yes" : "no") << std::setw(6) << e.rays.size()
                  << std::setw(5) << e.secondary_cone_dim << std::setw(7)
                  << e.expected_voronoi.size() << std::setw(7) << e.expected_class
                  << std::setw(5) << e.expected_chi << e.torus_scale_c << '\n';
    }
    std::cout << catalog().size() << " catalog entries; demo lattices:";
    for (const auto& d : demo_lattices()) std::cout << ' ' << d.name;
    std::cout << '\n';
    return 0;
}

int cmd_catalog_verify(bool as_json) {
    const auto t0 = Clock::now();
    const VerifyReport rep = verify_catalog_vectors();
    if (as_json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : rep.rows)
            rows.push_back({{"symbol", r.symbol},
                            {"matched", r.matched},
                            {"computed_pairs", r.computed_pairs},
                            {"expected_pairs", r.expected_pairs}});
        std::cout << nlohmann::json{{"matches", rep.matches},
                                    {"mismatches", rep.mismatches},
                                    {"rows", rows}}
                         .dump(2)
                  << '\n';
    } else {
        for (const auto& r : rep.rows)
            if (!r.matched)
                std::cout << "MISMATCH " << r.symbol << ": computed " << r.computed_pairs
                          << " pairs, catalog lists " << r.expected_pairs << '\n';
        std::cout << rep.matches << "/" << rep.rows.size()
                  << " entries match their recomputed strict Voronoi vectors ("
                  << std::fixed << std::setprecision(0) << ms_since(t0) << " ms)\n";
    }
    return rep.mismatches == 0 ? 0 : 1;
}

int cmd_classify(bool as_json) {
    const auto t0 = Clock::now();
    const Table4Report rep = run_table4();
    if (as_json) {
        std::cout << classification_to_json(rep.classes).dump(2) << '\n';
    } else {
        std::cout << std::left << std::setw(4) << "id" << std::setw(14) << "name"
                  << std::setw(4) << "r" << std::setw(6) << "|E|" << std::setw(8) << "aut"
                  << std::setw(8) << "size" << "members\n";
        for (std::size_t i = 0; i < rep.classes.size(); ++i) {
            const IsoClass& cl = rep.classes[i];
            std::ostringstream members;
            for (std::size_t j = 0; j < cl.members.size(); ++j)
                members << (j ? " " : "") << cl.members[j];
            std::cout << std::left << std::setw(4) << cl.class_id << std::setw(14)
                      << cl.graph_name << std::setw(4) << cl.signature.regularity
                      << std::setw(6) << cl.signature.ball_edges << std::setw(8)
                      << cl.signature.aut_order << std::setw(8) << cl.members.size()
                      << members.str() << '\n';
        }
        for (const auto& f : rep.failures) std::cout << "FAIL " << f << '\n';
        std::cout << rep.classes.size() << " classes from " << catalog().size() << " entries"
                  << (rep.ok ? ", all rows match" : ", MISMATCH") << " (" << std::fixed
                  << std::setprecision(0) << ms_since(t0) << " ms)\n";
    }
    return rep.ok ? 0 : 1;
}

int cmd_invariants(const std::string& symbol) {
    const ResolvedEntry e = resolve_entry(symbol);
    const InvariantSignature sig = invariant_signature(e.generators);
    std::cout << e.name << ": " << e.generators.vectors.size() << " Voronoi pairs\n"
              << "  regularity      " << sig.regularity << '\n'
              << "  ball edges      " << sig.ball_edges << '\n'
              << "  aut order       " << sig.aut_order << '\n';
    if (!e.demo) {
        const ClassRow& row = class_row(e.class_id);
        std::cout << "  class           " << e.class_id << " (" << row.graph_name << ")\n";
    }
    std::cout << "  chi             " << e.chi << '\n'
              << "  torus scale     " << e.torus_c << '\n'
              << "  vectors        ";
    for (const auto& v : e.generators.vectors) std::cout << ' ' << format_vec(v);
    std::cout << '\n';
    return 0;
}

int cmd_chi_dpb(const std::string& symbol, int k, SolverConfig cfg, bool breaking) {
    const ResolvedEntry e = resolve_entry(symbol);
    const auto t0 = Clock::now();
    const DpbResult r = run_dpb(e.generators, e.name, k, cfg, breaking);
    std::cout << e.name << " ball C_1: " << r.graph.vertices << " vertices, " << r.graph.edges
              << " edges; " << k << "-coloring " << (r.satisfiable ? "FOUND" : "refuted (UNSAT)")
              << "  [" << r.solver.conflicts << " conflicts, " << std::fixed
              << std::setprecision(0) << ms_since(t0) << " ms]\n";
    if (!r.satisfiable)
        std::cout << "proves chi >= " << k + 1 << " (catalogued chi = " << e.chi << ")\n";
    const bool expected_sat = k >= e.chi;
    if (r.satisfiable != expected_sat) {
        std::cout << "UNEXPECTED: catalogued chi = " << e.chi << " predicts "
                  << (expected_sat ? "SAT" : "UNSAT") << '\n';
        return 1;
    }
    return 0;
}

int cmd_chi_dtb(const std::string& symbol, int c, SolverConfig cfg, bool breaking) {
    const ResolvedEntry e = resolve_entry(symbol);
    const auto t0 = Clock::now();
    const DtbResult r = run_dtb(e.generators, e.name, c, c, cfg, breaking);
    std::cout << e.name << " torus at scale " << c << ": " << r.graph.vertices << " vertices, "
              << r.graph.edges << " edges; " << c << "-coloring "
              << (r.satisfiable ? "found and verified" : "UNSAT") << "  [" << r.solver.conflicts
              << " conflicts, " << std::fixed << std::setprecision(0) << ms_since(t0) << " ms]\n";
    if (r.satisfiable) std::cout << "proves chi <= " << c << '\n';
    const bool expectation_known = c == e.torus_c && e.chi == e.torus_c;
    if (expectation_known && !r.satisfiable) {
        std::cout << "UNEXPECTED: catalogued certifying scale c = " << e.torus_c
                  << " predicts SAT\n";
        return 1;
    }
    return 0;
}

void print_certificate(const ChiCertificate& cert) {
    std::cout << (cert.class_id ? "class " + std::to_string(cert.class_id) + " " : "")
              << cert.representative << ": chi = " << cert.chi << "  [C_1 "
              << cert.dpb_graph.vertices << "v/" << cert.dpb_graph.edges << "e not "
              << cert.dpb_unsat_k << "-colorable, " << cert.dpb_solver.conflicts
              << " conflicts; torus/" << cert.torus_c << " " << cert.torus_stats.vertices
              << "v/" << cert.torus_stats.edges << "e " << cert.torus_colors << "-colored, "
              << cert.dtb_solver.conflicts << " conflicts]\n";
}

int cmd_chi_full(const std::optional<std::string>& symbol,
                 const std::optional<std::string>& out_dir, SolverConfig cfg) {
    if (out_dir) std::filesystem::create_directories(*out_dir);
    const auto t0 = Clock::now();
    if (symbol) {
        const ResolvedEntry e = resolve_entry(*symbol);
        const ChiCertificate cert =
            certify(e.generators, e.name, e.class_id, e.chi, e.torus_c, cfg);
        print_certificate(cert);
        if (out_dir) persist_certificate(cert, e.generators, *out_dir);
        std::cout << "certificate agrees with catalogued chi = " << e.chi << " (" << std::fixed
                  << std::setprecision(0) << ms_since(t0) << " ms)\n";
        return 0;
    }
    Table5Options opt;
    opt.solver = cfg;
    opt.out_dir = out_dir;
    const std::vector<ChiCertificate> certs = run_table5(opt);
    for (const auto& cert : certs) print_certificate(cert);
    std::cout << certs.size() << "/" << expected_classes().size()
              << " class representatives certified, all agree with the catalogued chi column ("
              << std::fixed << std::setprecision(0) << ms_since(t0) << " ms)\n";
    return 0;
}

int cmd_emit_cnf(const std::string& symbol, bool ball, std::optional<int> torus_c, int k,
                 const std::string& out_path, bool no_breaking) {
    const ResolvedEntry e = resolve_entry(symbol);
    FiniteGraph g;
    bool breaking;
    if (ball) {
        g = ball_graph(e.generators, 1);
        breaking = false;
    } else {
        g = torus_graph(e.generators, *torus_c);
        breaking = !no_breaking;
    }
    if (no_breaking) breaking = false;
    const CnfFormula f = encode_k_coloring(g, k, breaking);
    write_text_file(out_path, write_dimacs(f));
    std::cout << "wrote " << out_path << ": " << f.var_count << " variables, "
              << f.clauses.size() << " clauses (" << g.vertex_count << " vertices, "
              << g.edges.size() << " edges, k = " << k
              << (breaking ? ", symmetry breaking on" : "") << ")\n";
    return 0;
}

int cmd_graph_export(const std::string& symbol, std::optional<int> ball_d,
                     std::optional<int> torus_c, const std::string& out_path) {
    const ResolvedEntry e = resolve_entry(symbol);
    const FiniteGraph g =
        ball_d ? ball_graph(e.generators, *ball_d) : torus_graph(e.generators, *torus_c);
    write_text_file(out_path, graph_to_json(g).dump(2) + "\n");
    std::cout << "wrote " << out_path << ": " << g.vertex_count << " vertices, "
              << g.edges.size() << " edges\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromatic numbers of lattice Voronoi graphs via SAT certificates"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t budget = SolverConfig{}.conflict_budget;
    std::uint64_t seed = 1;
    bool no_breaking = false;
    app.add_option("--budget", budget, "solver conflict budget");
    app.add_option("--seed", seed, "solver branching seed");
    app.add_flag("--no-symmetry-breaking", no_breaking, "disable symmetry breaking clauses");

    bool json_list = false, json_verify = false, json_classify = false;
    auto* cat = app.add_subcommand("catalog", "inspect or verify the 52-entry catalog");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "print every catalog entry");
    cat_list->add_flag("--json", json_list, "emit JSON");
    auto* cat_verify =
        cat->add_subcommand("verify", "recompute all Voronoi vectors and compare");
    cat_verify->add_flag("--json", json_verify, "emit JSON");

    auto* classify_cmd =
        app.add_subcommand("classify", "group the catalog into isomorphism classes");
    classify_cmd->add_flag("--json", json_classify, "emit JSON");

    std::string inv_symbol;
    auto* inv = app.add_subcommand("invariants", "graph invariants of one lattice");
    inv->add_option("symbol", inv_symbol, "catalog symbol or demo name")->required();

    auto* chi = app.add_subcommand("chi", "chromatic number bounds");
    chi->require_subcommand(1);
    std::string dpb_entry;
    int dpb_k = 0;
    auto* dpb = chi->add_subcommand("dpb", "lower bound: k-color the ball graph C_1");
    dpb->add_option("--entry", dpb_entry, "catalog symbol or demo name")->required();
    dpb->add_option("--k", dpb_k, "number of colors")->required();
    std::string dtb_entry;
    int dtb_c = 0;
    auto* dtb = chi->add_subcommand("dtb", "upper bound: c-color the torus at scale c");
    dtb->add_option("--entry", dtb_entry, "catalog symbol or demo name")->required();
    dtb->add_option("--c", dtb_c, "sublattice scale = number of colors")->required();
    std::string full_entry, full_out;
    auto* full = chi->add_subcommand("full", "certify chi (one entry, or all 16 classes)");
    full->add_option("--entry", full_entry, "catalog symbol or demo name");
    full->add_option("--out", full_out, "directory for certificate + DIMACS files");

    std::string cnf_entry, cnf_out;
    bool cnf_ball = false;
    int cnf_torus = 0, cnf_k = 0;
    auto* emit = app.add_subcommand("emit-cnf", "write a coloring instance in DIMACS format");
    emit->add_option("--entry", cnf_entry, "catalog symbol or demo name")->required();
    auto* cnf_ball_opt = emit->add_flag("--ball", cnf_ball, "use the ball graph C_1");
    auto* cnf_torus_opt = emit->add_option("--torus", cnf_torus, "use the torus at this scale");
    cnf_ball_opt->excludes(cnf_torus_opt);
    emit->add_option("--k", cnf_k, "number of colors")->required();
    emit->add_option("--out", cnf_out, "output file ('-' for stdout)")->required();

    auto* graph_cmd = app.add_subcommand("graph", "graph exports");
    graph_cmd->require_subcommand(1);
    std::string gx_entry, gx_out;
    int gx_ball = -1, gx_torus = 0;
    auto* gx = graph_cmd->add_subcommand("export", "write a graph as JSON");
    gx->add_option("--entry", gx_entry, "catalog symbol or demo name")->required();
    auto* gx_ball_opt = gx->add_option("--ball", gx_ball, "ball graph radius");
    auto* gx_torus_opt = gx->add_option("--torus", gx_torus, "torus scale");
    gx_ball_opt->excludes(gx_torus_opt);
    gx->add_option("--out", gx_out, "output file ('-' for stdout)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the usage message
        return 2;
    }

    SolverConfig cfg;
    cfg.conflict_budget = budget;
    cfg.seed = seed;

    try {
        if (cat_list->parsed()) return cmd_catalog_list(json_list);
        if (cat_verify->parsed()) return cmd_catalog_verify(json_verify);
        if (classify_cmd->parsed()) return cmd_classify(json_classify);
        if (inv->parsed()) return cmd_invariants(inv_symbol);
        if (dpb->parsed()) return cmd_chi_dpb(dpb_entry, dpb_k, cfg, false);
        if (dtb->parsed()) return cmd_chi_dtb(dtb_entry, dtb_c, cfg, !no_breaking);
        if (full->parsed())
            return cmd_chi_full(
                full_entry.empty() ? std::nullopt : std::optional<std::string>(full_entry),
                full_out.empty() ? std::nullopt : std::optional<std::string>(full_out), cfg);
        if (emit->parsed()) {
            if (!cnf_ball && cnf_torus_opt->count() == 0)
                throw CLI::ValidationError("emit-cnf", "one of --ball / --torus is required");
            return cmd_emit_cnf(cnf_entry, cnf_ball,
                                cnf_torus_opt->count() ? std::optional<int>(cnf_torus)
                                                       : std::nullopt,
                                cnf_k, cnf_out, no_breaking);
        }
        if (gx->parsed()) {
            if (gx_ball_opt->count() == 0 && gx_torus_opt->count() == 0)
                throw CLI::ValidationError("graph export", "one of --ball / --torus is required");
            return cmd_graph_export(gx_entry,
                                    gx_ball_opt->count() ? std::optional<int>(gx_ball)
                                                         : std::nullopt,
                                    gx_torus_opt->count() ? std::optional<int>(gx_torus)
                                                          : std::nullopt,
                                    gx_out);
        }
    } catch (const CLI::Error& e) {
        app.exit(e);
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

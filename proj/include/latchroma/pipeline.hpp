#pragma once

// End-to-end orchestration: recompute and verify the catalog, classify it,
// and certify the chromatic number of every class representative by a pair
// of SAT runs — the ball graph C_1 is not (chi-1)-colorable (lower bound),
// the discrete torus Z^n / cZ^n is chi-colorable (upper bound).  Certificates
// carry both graphs' sizes, solver statistics, and the verified coloring, and
// can be persisted as JSON plus re-checkable DIMACS files.

#include <atomic>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "graph.hpp"
#include "iso.hpp"
#include "sat.hpp"
#include "voronoi.hpp"

namespace latchroma {

struct GraphStats {
    int vertices = 0;
    std::int64_t edges = 0;
};

inline GraphStats stats_of(const FiniteGraph& g) {
    return {g.vertex_count, static_cast<std::int64_t>(g.edges.size())};
}

struct DpbResult {
    std::string symbol;
    int k = 0;
    bool satisfiable = false;
    GraphStats graph;
    SolverStats solver;
};

struct DtbResult {
    std::string symbol;
    int c = 0;       // sublattice scale
    int colors = 0;  // palette size used for the torus
    bool satisfiable = false;
    GraphStats graph;
    SolverStats solver;
    Coloring witness;  // verified independently of the solver
};

struct ChiCertificate {
    int class_id = 0;
    std::string representative;
    int chi = 0;
    int dpb_unsat_k = 0;
    GraphStats dpb_graph;
    SolverStats dpb_solver;
    int torus_c = 0;
    int torus_colors = 0;
    GraphStats torus_stats;
    SolverStats dtb_solver;
    Coloring witness;
    std::string started_at;
    std::string finished_at;
};

namespace detail {

inline std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace detail

// Filesystem-safe spelling of a catalog symbol: +/-/' become p/m/q, braces
// vanish, any other non-alphanumeric becomes '_'.
inline std::string sanitize_symbol(const std::string& symbol) {
    std::string out;
    for (char ch : symbol) {
        if ((ch >= '0' && ch <= '9') || (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z'))
            out += ch;
        else if (ch == '+') out += 'p';
        else if (ch == '-') out += 'm';
        else if (ch == '\'') out += 'q';
        else if (ch == '{' || ch == '}') continue;
        else out += '_';
    }
    return out;
}

// Lower bound run: is the distance-1 ball graph k-colorable?  UNSAT proves
// chi >= k+1 for the whole lattice.  Symmetry breaking stays off so the
// refuted formula is exactly the plain encoding.
inline DpbResult run_dpb(const GeneratorSet& s, const std::string& symbol, int k,
                         SolverConfig cfg = {}, bool symmetry_breaking = false) {
    if (k < 1) throw std::domain_error("color count must be >= 1");
    const FiniteGraph ball = ball_graph(s, 1);
    const CnfFormula f = encode_k_coloring(ball, k, symmetry_breaking);
    DpbResult r;
    r.symbol = symbol;
    r.k = k;
    r.graph = stats_of(ball);
    const SatOutcome out = solve(f, cfg, r.solver);
    r.satisfiable = out.satisfiable;
    return r;
}

inline DpbResult run_dpb(const CatalogEntry& entry, int k, SolverConfig cfg = {},
                         bool symmetry_breaking = false) {
    return run_dpb(strict_voronoi_vectors(entry.form()), entry.symbol, k, cfg, symmetry_breaking);
}

// Upper bound run: color the torus Z^n / cZ^n with `colors` colors; a
// verified coloring proves chi <= colors.  The witness is re-checked with
// is_proper_coloring, never trusted from the solver.
inline DtbResult run_dtb(const GeneratorSet& s, const std::string& symbol, std::int64_t c,
                         int colors, SolverConfig cfg = {}, bool symmetry_breaking = true) {
    if (colors < 1) throw std::domain_error("color count must be >= 1");
    const FiniteGraph torus = torus_graph(s, c);
    const CnfFormula f = encode_k_coloring(torus, colors, symmetry_breaking);
    DtbResult r;
    r.symbol = symbol;
    r.c = static_cast<int>(c);
    r.colors = colors;
    r.graph = stats_of(torus);
    const SatOutcome out = solve(f, cfg, r.solver);
    r.satisfiable = out.satisfiable;
    if (out.satisfiable) {
        r.witness = decode_coloring(torus.vertex_count, colors, out);
        if (!is_proper_coloring(torus, r.witness))
            throw std::logic_error("decoded torus coloring failed verification");
    }
    return r;
}

inline DtbResult run_dtb(const CatalogEntry& entry, std::int64_t c, SolverConfig cfg = {},
                         bool symmetry_breaking = true) {
    return run_dtb(strict_voronoi_vectors(entry.form()), entry.symbol, c,
                   static_cast<int>(c), cfg, symmetry_breaking);
}

// Certify chi for one lattice: DPB must refute chi-1 colors on the ball,
// DTB must color the torus at scale c with chi colors.  Throws on any
// unexpected verdict; the caller chooses chi and c (equal for catalog rows).
inline ChiCertificate certify(const GeneratorSet& s, const std::string& symbol, int class_id,
                              int chi, std::int64_t torus_c, SolverConfig cfg = {}) {
    if (chi < 2) throw std::domain_error("certification needs chi >= 2");
    ChiCertificate cert;
    cert.class_id = class_id;
    cert.representative = symbol;
    cert.chi = chi;
    cert.started_at = detail::utc_timestamp();

    const DpbResult dpb = run_dpb(s, symbol, chi - 1, cfg);
    if (dpb.satisfiable)
        throw std::runtime_error(symbol + ": ball graph unexpectedly " +
                                 std::to_string(chi - 1) + "-colorable");
    cert.dpb_unsat_k = chi - 1;
    cert.dpb_graph = dpb.graph;
    cert.dpb_solver = dpb.solver;

    const DtbResult dtb = run_dtb(s, symbol, torus_c, chi, cfg);
    if (!dtb.satisfiable)
        throw std::runtime_error(symbol + ": torus at scale " + std::to_string(torus_c) +
                                 " not " + std::to_string(chi) + "-colorable");
    cert.torus_c = static_cast<int>(torus_c);
    cert.torus_colors = chi;
    cert.torus_stats = dtb.graph;
    cert.dtb_solver = dtb.solver;
    cert.witness = dtb.witness;
    cert.finished_at = detail::utc_timestamp();
    return cert;
}

inline ChiCertificate certify(const CatalogEntry& entry, SolverConfig cfg = {}) {
    const ClassRow& row = class_row(entry.expected_class);
    ChiCertificate cert = certify(strict_voronoi_vectors(entry.form()), entry.symbol,
                                  entry.expected_class, entry.expected_chi,
                                  entry.torus_scale_c, cfg);
    if (cert.dpb_unsat_k + 1 != cert.chi || cert.chi != cert.torus_c)
        throw std::logic_error(entry.symbol + ": certificate invariant chi = c violated");
    if (cert.chi != row.chi)
        throw std::logic_error(entry.symbol + ": certificate disagrees with class table");
    return cert;
}

inline ChiCertificate certify(const DemoLattice& demo, SolverConfig cfg = {}) {
    const GeneratorSet s = strict_voronoi_vectors(demo.form);
    return certify(s, demo.name, 0, demo.expected_chi, demo.torus_scale_c, cfg);
}

namespace detail {

inline nlohmann::json solver_stats_json(const SolverStats& st) {
    return {{"conflicts", st.conflicts}, {"decisions", st.decisions},
            {"propagations", st.propagations}, {"restarts", st.restarts},
            {"learned", st.learned}, {"deleted", st.deleted}};
}

}  // namespace detail

inline nlohmann::json certificate_to_json(const ChiCertificate& cert) {
    return {
        {"class_id", cert.class_id},
        {"representative", cert.representative},
        {"chi", cert.chi},
        {"dpb",
         {{"k", cert.dpb_unsat_k},
          {"verdict", "UNSATISFIABLE"},
          {"graph", {{"vertices", cert.dpb_graph.vertices}, {"edges", cert.dpb_graph.edges}}},
          {"solver", detail::solver_stats_json(cert.dpb_solver)}}},
        {"dtb",
         {{"c", cert.torus_c},
          {"colors", cert.torus_colors},
          {"verdict", "SATISFIABLE"},
          {"graph", {{"vertices", cert.torus_stats.vertices}, {"edges", cert.torus_stats.edges}}},
          {"solver", detail::solver_stats_json(cert.dtb_solver)},
          {"witness", cert.witness.colors}}},
        {"started_at", cert.started_at},
        {"finished_at", cert.finished_at},
    };
}

// Write <out_dir>/<symbol>.cert.json plus the two DIMACS instances backing
// the verdicts, re-encoded deterministically from the generator set.
inline void persist_certificate(const ChiCertificate& cert, const GeneratorSet& s,
                                const std::string& out_dir) {
    const std::string base = out_dir + "/" + sanitize_symbol(cert.representative);
    {
        std::ofstream out(base + ".cert.json");
        if (!out) throw std::runtime_error("cannot write " + base + ".cert.json");
        out << certificate_to_json(cert).dump(2) << '\n';
    }
    {
        std::ofstream out(base + ".dpb.cnf");
        if (!out) throw std::runtime_error("cannot write " + base + ".dpb.cnf");
        out << write_dimacs(encode_k_coloring(ball_graph(s, 1), cert.dpb_unsat_k, false));
    }
    {
        std::ofstream out(base + ".dtb.cnf");
        if (!out) throw std::runtime_error("cannot write " + base + ".dtb.cnf");
        out << write_dimacs(encode_k_coloring(torus_graph(s, cert.torus_c), cert.torus_colors, true));
    }
}

// ---------------------------------------------------------------------------
// Table 4: catalog verification + classification, checked row by row.

struct Table4Row {
    int class_id = 0;
    std::string name;
    int regularity = 0;
    int ball_edges = 0;
    std::uint64_t aut_order = 0;
    int member_count = 0;
    bool matched = false;
};

struct Table4Report {
    VerifyReport vectors;
    std::vector<IsoClass> classes;
    std::vector<Table4Row> rows;
    std::vector<std::string> failures;
    bool ok = false;
};

inline Table4Report run_table4() {
    Table4Report rep;
    rep.vectors = verify_catalog_vectors();
    if (rep.vectors.mismatches != 0)
        rep.failures.push_back(std::to_string(rep.vectors.mismatches) +
                               " catalog entries disagree with recomputed Voronoi vectors");

    rep.classes = classify(catalog());
    const auto& expected = expected_classes();
    if (rep.classes.size() != expected.size())
        rep.failures.push_back("expected " + std::to_string(expected.size()) + " classes, found " +
                               std::to_string(rep.classes.size()));

    for (std::size_t i = 0; i < rep.classes.size() && i < expected.size(); ++i) {
        const IsoClass& got = rep.classes[i];
        const ClassRow& want = expected[i];
        Table4Row row;
        row.class_id = want.class_id;
        row.name = got.graph_name;
        row.regularity = got.signature.regularity;
        row.ball_edges = got.signature.ball_edges;
        row.aut_order = got.signature.aut_order;
        row.member_count = static_cast<int>(got.members.size());
        row.matched = got.signature.regularity == want.regularity &&
                      got.signature.ball_edges == want.ball_edges &&
                      got.signature.aut_order == want.aut_order &&
                      got.members == want.members && got.graph_name == want.graph_name;
        if (!row.matched)
            rep.failures.push_back("class " + std::to_string(want.class_id) + " (" + want.graph_name +
                                   ") does not match the expected row");
        rep.rows.push_back(std::move(row));
    }
    rep.ok = rep.failures.empty();
    return rep;
}

// ---------------------------------------------------------------------------
// Table 5: one certificate per class, representatives solved concurrently.

struct Table5Options {
    SolverConfig solver;
    std::optional<std::string> out_dir;
    unsigned workers = 0;  // 0 = hardware concurrency
};

inline std::vector<ChiCertificate> run_table5(const Table5Options& opt = {}) {
    const auto& rows = expected_classes();
    std::vector<ChiCertificate> certs(rows.size());
    std::vector<std::exception_ptr> errors(rows.size());

    unsigned workers = opt.workers ? opt.workers : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(rows.size()));

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= rows.size()) return;
            try {
                const CatalogEntry& entry = catalog_entry(rows[i].representative);
                certs[i] = certify(entry, opt.solver);
                if (opt.out_dir)
                    persist_certificate(certs[i], strict_voronoi_vectors(entry.form()),
                                        *opt.out_dir);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    return certs;
}

}  // namespace latchroma

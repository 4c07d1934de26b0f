#include <catch2/catch_amalgamated.hpp>

#include <latchroma/catalog.hpp>
#include <latchroma/graph.hpp>
#include <latchroma/sat.hpp>
#include <latchroma/voronoi.hpp>

#include "test_util.hpp"

using namespace latchroma;

namespace {

// p pigeons into h holes; unsatisfiable whenever p > h
CnfFormula pigeonhole(int p, int h) {
    CnfFormula f;
    f.var_count = p * h;
    auto x = [h](int i, int j) { return (i - 1) * h + j; };
    for (int i = 1; i <= p; ++i) {
        std::vector<int> cl;
        for (int j = 1; j <= h; ++j) cl.push_back(x(i, j));
        f.add_clause(std::move(cl));
    }
    for (int j = 1; j <= h; ++j)
        for (int i1 = 1; i1 <= p; ++i1)
            for (int i2 = i1 + 1; i2 <= p; ++i2) f.add_clause({-x(i1, j), -x(i2, j)});
    return f;
}

FiniteGraph entry_ball(const std::string& symbol, int d) {
    return ball_graph(strict_voronoi_vectors(catalog_entry(symbol).form()), d);
}

bool assignment_satisfies(const CnfFormula& f, const std::vector<bool>& a) {
    for (const auto& cl : f.clauses) {
        bool sat = false;
        for (int l : cl)
            if (a[std::abs(l)] == (l > 0)) {
                sat = true;
                break;
            }
        if (!sat) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("formula construction rejects malformed clauses") {
    CnfFormula f;
    f.var_count = 3;
    CHECK_THROWS_AS(f.add_clause({}), std::invalid_argument);
    CHECK_THROWS_AS(f.add_clause({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(f.add_clause({4}), std::invalid_argument);
    CHECK_THROWS_AS(f.add_clause({-4}), std::invalid_argument);
    CHECK_NOTHROW(f.add_clause({1, -2, 3}));
    CHECK(f.clauses.size() == 1);
}

TEST_CASE("SAT outcomes verify themselves") {
    CnfFormula f;
    f.var_count = 2;
    f.add_clause({1, 2});
    f.add_clause({-1, 2});
    CHECK_NOTHROW(SatOutcome::sat(f, {false, false, true}));
    CHECK_THROWS_AS(SatOutcome::sat(f, {false, true}), std::logic_error);          // short
    CHECK_THROWS_AS(SatOutcome::sat(f, {false, true, false}), std::logic_error);   // violates
    CHECK_FALSE(SatOutcome::unsat().satisfiable);
}

TEST_CASE("DIMACS output is byte exact") {
    CnfFormula one;
    one.var_count = 1;
    one.add_clause({1});
    CHECK(write_dimacs(one) == "p cnf 1 1\n1 0\n");

    one.add_clause({-1});
    CHECK(write_dimacs(one) == "p cnf 1 2\n1 0\n-1 0\n");

    const FiniteGraph edge = testutil::make_graph(2, {{0, 1}});
    const CnfFormula f = encode_k_coloring(edge, 2, false);
    CHECK(write_dimacs(f) == "p cnf 4 4\n1 2 0\n3 4 0\n-1 -3 0\n-2 -4 0\n");
}

TEST_CASE("solution text mirrors the usual solver output") {
    CHECK(solution_text(SatOutcome::unsat()) == "s UNSATISFIABLE\n");

    CnfFormula f;
    f.var_count = 3;
    f.add_clause({1});
    f.add_clause({-2});
    const auto o = SatOutcome::sat(f, {false, true, false, true});
    CHECK(solution_text(o) == "s SATISFIABLE\nv 1 -2 3 0\n");

    CnfFormula wide;
    wide.var_count = 10;
    const auto o10 = SatOutcome::sat(wide, std::vector<bool>(11, true));
    CHECK(solution_text(o10) == "s SATISFIABLE\nv 1 2 3 4 5 6 7 8 9 10\nv 0\n");
}

TEST_CASE("solver handles degenerate formulas") {
    CnfFormula empty;
    const SatOutcome o = solve(empty);
    CHECK(o.satisfiable);
    CHECK(o.assignment.size() == 1);

    CnfFormula free_vars;
    free_vars.var_count = 3;
    SolverConfig cfg;
    const SatOutcome all_false = solve(free_vars, cfg);
    REQUIRE(all_false.satisfiable);
    for (int v = 1; v <= 3; ++v) CHECK_FALSE(all_false.assignment[v]);
    cfg.default_polarity = true;
    const SatOutcome all_true = solve(free_vars, cfg);
    REQUIRE(all_true.satisfiable);
    for (int v = 1; v <= 3; ++v) CHECK(all_true.assignment[v]);

    CnfFormula contradictory;
    contradictory.var_count = 1;
    contradictory.add_clause({1});
    contradictory.add_clause({-1});
    CHECK_FALSE(solve(contradictory).satisfiable);

    CnfFormula forced;
    forced.var_count = 2;
    forced.add_clause({1, 2});
    forced.add_clause({-1});
    forced.add_clause({-2});
    CHECK_FALSE(solve(forced).satisfiable);

    CnfFormula chain;  // unit propagation only, no decisions needed
    chain.var_count = 3;
    chain.add_clause({1});
    chain.add_clause({-1, 2});
    chain.add_clause({-2, 3});
    SolverStats stats;
    const SatOutcome co = solve(chain, {}, stats);
    REQUIRE(co.satisfiable);
    CHECK(co.assignment[1]);
    CHECK(co.assignment[2]);
    CHECK(co.assignment[3]);
    CHECK(stats.conflicts == 0);
}

TEST_CASE("pigeonhole instances") {
    CHECK(solve(pigeonhole(4, 4)).satisfiable);

    SolverStats stats;
    CHECK_FALSE(solve(pigeonhole(5, 4), {}, stats).satisfiable);
    CHECK(stats.conflicts > 0);

    CHECK_FALSE(solve(pigeonhole(7, 6)).satisfiable);
}

TEST_CASE("conflict budget aborts with a resource error") {
    SolverConfig cfg;
    cfg.conflict_budget = 1;
    CHECK_THROWS_AS(solve(pigeonhole(5, 4), cfg), resource_error);
    CHECK_THROWS_WITH(solve(pigeonhole(5, 4), cfg),
                      Catch::Matchers::ContainsSubstring("budget"));
}

TEST_CASE("verdicts agree with a truth-table oracle on random formulas") {
    testutil::Rng rng(0x3a7f00d);
    int sat_count = 0;
    for (int trial = 0; trial < 200; ++trial) {
        CnfFormula f;
        f.var_count = 8;
        const int m = 8 + rng.below(40);
        for (int c = 0; c < m; ++c) {
            std::vector<int> cl;
            for (int j = 0; j < 3; ++j) {
                const int v = 1 + rng.below(8);
                cl.push_back(rng.chance(0.5) ? v : -v);
            }
            f.add_clause(std::move(cl));
        }
        const bool expect = testutil::brute_force_satisfiable(f);
        const SatOutcome got = solve(f);
        CAPTURE(trial, m);
        REQUIRE(got.satisfiable == expect);
        if (got.satisfiable) {
            CHECK(assignment_satisfies(f, got.assignment));
            ++sat_count;
        }
    }
    CHECK(sat_count > 20);          // the mix actually exercises both verdicts
    CHECK(sat_count < 195);
}

TEST_CASE("same seed reproduces the run, different seeds agree on the verdict") {
    testutil::Rng rng(0xdecafbad);
    const FiniteGraph g = testutil::random_graph(12, 0.5, rng);
    const CnfFormula f = encode_k_coloring(g, 3, false);

    SolverConfig cfg;
    cfg.seed = 42;
    SolverStats s1, s2;
    const SatOutcome o1 = solve(f, cfg, s1);
    const SatOutcome o2 = solve(f, cfg, s2);
    CHECK(o1.satisfiable == o2.satisfiable);
    CHECK(o1.assignment == o2.assignment);
    CHECK(s1.conflicts == s2.conflicts);
    CHECK(s1.decisions == s2.decisions);
    CHECK(s1.propagations == s2.propagations);
    CHECK(s1.restarts == s2.restarts);
    CHECK(s1.learned == s2.learned);
    CHECK(s1.deleted == s2.deleted);

    for (std::uint64_t seed : {1ull, 7ull, 99ull}) {
        SolverConfig other;
        other.seed = seed;
        CHECK(solve(f, other).satisfiable == o1.satisfiable);
    }
}

TEST_CASE("coloring encodings have the expected shape") {
    const FiniteGraph edge = testutil::make_graph(2, {{0, 1}});
    const CnfFormula fe = encode_k_coloring(edge, 2, false);
    CHECK(fe.var_count == 4);
    CHECK(fe.clauses.size() == 4);
    const CnfFormula feb = encode_k_coloring(edge, 2, true);
    CHECK(feb.clauses.size() == 6);  // + unit color of vertex 1 and one exclusion

    const FiniteGraph star = entry_ball("1+1+1+1", 1);
    REQUIRE(star.vertex_count == 9);
    REQUIRE(star.edges.size() == 8);
    const CnfFormula fs = encode_k_coloring(star, 2, false);
    CHECK(fs.var_count == 18);
    CHECK(fs.clauses.size() == 25);

    const GeneratorSet k33 = strict_voronoi_vectors(catalog_entry("K_{3,3}").form());
    const FiniteGraph torus = torus_graph(k33, 7);
    REQUIRE(torus.vertex_count == 2401);
    REQUIRE(torus.edges.size() == 36015);
    const CnfFormula ft = encode_k_coloring(torus, 7, false);
    CHECK(ft.var_count == 16807);
    CHECK(ft.clauses.size() == 254506);
    const CnfFormula ftb = encode_k_coloring(torus, 7, true);
    CHECK(ftb.clauses.size() == 254506 + 22);

    CHECK_THROWS_AS(encode_k_coloring(edge, 0, false), std::domain_error);
}

TEST_CASE("decoding picks the lowest satisfied color") {
    CHECK_THROWS_AS(decode_coloring(2, 3, SatOutcome::unsat()), std::domain_error);

    SatOutcome o;
    o.satisfiable = true;
    //                 v1: colors 2,3   v2: color 1
    o.assignment = {false, false, true, true, true, false, false};
    const Coloring col = decode_coloring(2, 3, o);
    CHECK(col.colors == std::vector<int>{2, 1});

    SatOutcome bad;
    bad.satisfiable = true;
    bad.assignment = {false, false, false, false, true, false, false};  // v1 uncolored
    CHECK_THROWS_AS(decode_coloring(2, 3, bad), std::logic_error);
}

TEST_CASE("chromatic search on small graphs") {
    const auto tri = chromatic_number_sat(testutil::complete_graph(3), 1, 5);
    CHECK(tri.chi == 3);
    CHECK(tri.unsat_k == 2);
    CHECK(is_proper_coloring(testutil::complete_graph(3), tri.witness));

    CHECK(chromatic_number_sat(testutil::cycle_graph(5), 1, 5).chi == 3);
    CHECK(chromatic_number_sat(testutil::cycle_graph(6), 1, 5).chi == 2);
    CHECK(chromatic_number_sat(testutil::cycle_graph(6), 1, 5).unsat_k == 1);
    CHECK(chromatic_number_sat(testutil::petersen_graph(), 2, 5).chi == 3);

    CHECK_THROWS_AS(chromatic_number_sat(testutil::complete_graph(3), 3, 2),
                    std::domain_error);
    CHECK_THROWS_AS(chromatic_number_sat(testutil::complete_graph(3), 0, 2),
                    std::domain_error);
    CHECK_THROWS_AS(chromatic_number_sat(testutil::complete_graph(3), 1, 2),
                    std::range_error);
}

TEST_CASE("ball graph bounds from the catalog") {
    const FiniteGraph k5 = entry_ball("K_5", 1);
    REQUIRE(k5.vertex_count == 31);
    CHECK_FALSE(solve(encode_k_coloring(k5, 4, false)).satisfiable);
    const SatOutcome sat5 = solve(encode_k_coloring(k5, 5, true));
    REQUIRE(sat5.satisfiable);
    CHECK(is_proper_coloring(k5, decode_coloring(k5.vertex_count, 5, sat5)));

    const FiniteGraph k33 = entry_ball("K_{3,3}", 1);
    const auto r = chromatic_number_sat(k33, 2, 10);
    CHECK(r.chi == 7);
    CHECK(r.unsat_k == 6);
}

TEST_CASE("symmetry breaking preserves the answer") {
    testutil::Rng rng(0xbeef);
    for (int trial = 0; trial < 30; ++trial) {
        const FiniteGraph g = testutil::random_graph(3 + rng.below(6), 0.5, rng);
        const int k = 1 + rng.below(4);
        CAPTURE(trial, g.vertex_count, k);
        const bool plain = solve(encode_k_coloring(g, k, false)).satisfiable;
        const bool broken = solve(encode_k_coloring(g, k, true)).satisfiable;
        CHECK(plain == broken);
        CHECK(plain == testutil::brute_force_k_colorable(g, k));
    }

    for (int trial = 0; trial < 10; ++trial) {
        const FiniteGraph g = testutil::random_graph(4 + rng.below(5), 0.6, rng);
        CAPTURE(trial);
        CHECK(chromatic_number_sat(g, 1, 9, {}, true).chi ==
              chromatic_number_sat(g, 1, 9, {}, false).chi);
    }
}

TEST_CASE("sat chi agrees with the exact oracle on every small catalog ball") {
    for (const CatalogEntry& e : catalog()) {
        const FiniteGraph c1 = entry_ball(e.symbol, 1);
        if (c1.vertex_count > 24) continue;
        CAPTURE(e.symbol, c1.vertex_count);
        CHECK(chromatic_number_sat(c1, 1, 9).chi == chromatic_number_exact_small(c1));
    }
}

#pragma once

// CNF encoding of graph k-colorability, DIMACS export, and an embedded CDCL
// solver: two-watched-literal propagation, first-UIP clause learning with
// basic reason-side minimization, VSIDS branching, phase saving, geometric
// restarts, and activity-driven deletion of learnt clauses.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace latchroma {

// Thrown when a configured resource limit (conflict budget) is exhausted;
// deliberately distinct from an UNSAT verdict.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CnfFormula {
    int var_count = 0;
    std::vector<std::vector<int>> clauses;

    void add_clause(std::vector<int> lits) {
        if (lits.empty()) throw std::invalid_argument("clause may not be empty");
        for (int l : lits)
            if (l == 0 || std::abs(l) > var_count)
                throw std::invalid_argument("literal outside 1..var_count");
        clauses.push_back(std::move(lits));
    }
};

struct SatOutcome {
    bool satisfiable = false;
    std::vector<bool> assignment;  // 1-based, size var_count + 1 when SAT

    // SAT outcomes verify themselves against the formula they claim to satisfy.
    static SatOutcome sat(const CnfFormula& f, std::vector<bool> assign) {
        if (static_cast<int>(assign.size()) != f.var_count + 1)
            throw std::logic_error("assignment length mismatch");
        for (const auto& cl : f.clauses) {
            bool satisfied = false;
            for (int l : cl)
                if (assign[std::abs(l)] == (l > 0)) {
                    satisfied = true;
                    break;
                }
            if (!satisfied) throw std::logic_error("claimed assignment violates a clause");
        }
        SatOutcome o;
        o.satisfiable = true;
        o.assignment = std::move(assign);
        return o;
    }

    static SatOutcome unsat() { return {}; }
};

struct SolverConfig {
    std::uint64_t conflict_budget = 50'000'000;
    std::uint64_t seed = 1;          // perturbs initial branching order only
    bool default_polarity = false;   // initial saved phase for every variable
};

struct SolverStats {
    std::uint64_t conflicts = 0;
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t restarts = 0;
    std::uint64_t learned = 0;
    std::uint64_t deleted = 0;
};

class CdclSolver {
public:
    explicit CdclSolver(const CnfFormula& f, SolverConfig cfg = {})
        : formula_(f), cfg_(cfg), nvars_(f.var_count) {
        value_.assign(nvars_ + 1, -1);
        level_.assign(nvars_ + 1, 0);
        reason_.assign(nvars_ + 1, -1);
        phase_.assign(nvars_ + 1, cfg_.default_polarity ? 1 : 0);
        activity_.assign(nvars_ + 1, 0.0);
        seen_.assign(nvars_ + 1, 0);
        watches_.assign(2 * static_cast<std::size_t>(nvars_) + 2, {});
        heap_pos_.assign(nvars_ + 1, -1);

        // tiny deterministic per-seed jitter so different seeds explore
        // different trees while the same seed reproduces the same run
        std::uint64_t x = cfg_.seed ? cfg_.seed : 1;
        for (int v = 1; v <= nvars_; ++v) {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            activity_[v] = static_cast<double>(x % 1024) * 1e-12;
        }
        for (int v = 1; v <= nvars_; ++v) heap_insert(v);

        for (const auto& cl : f.clauses) {
            std::vector<int> lits = cl;
            std::sort(lits.begin(), lits.end(), [](int a, int b) {
                return std::pair(std::abs(a), a) < std::pair(std::abs(b), b);
            });
            lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
            bool tautology = false;
            for (std::size_t i = 0; i + 1 < lits.size(); ++i)
                if (lits[i] == -lits[i + 1]) {
                    tautology = true;
                    break;
                }
            if (tautology) continue;
            if (lits.size() == 1) {
                const int u = lits[0];
                if (lit_value(u) == 0) contradiction_ = true;
                else if (lit_value(u) < 0) enqueue(u, -1);
            } else {
                attach_clause(std::move(lits), false);
            }
        }
    }

    SatOutcome solve() {
        if (contradiction_) return SatOutcome::unsat();
        std::uint64_t restart_limit = 100;
        std::uint64_t conflicts_at_restart = 0;
        double max_learnts = std::max<double>(1000.0, formula_.clauses.size() / 3.0);

        for (;;) {
            const int confl = propagate();
            if (confl >= 0) {
                ++stats_.conflicts;
                if (decision_level() == 0) return SatOutcome::unsat();
                if (stats_.conflicts >= cfg_.conflict_budget)
                    throw resource_error("conflict budget exhausted after " +
                                         std::to_string(stats_.conflicts) + " conflicts");
                int bt_level = 0;
                std::vector<int> learnt = analyze(confl, bt_level);
                backtrack(bt_level);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], -1);
                } else {
                    const int ci = attach_clause(std::move(learnt), true);
                    bump_clause(ci);
                    enqueue(clauses_[ci].lits[0], ci);
                }
                ++stats_.learned;
                var_inc_ /= kVarDecay;
                cla_inc_ /= kClaDecay;
                if (stats_.conflicts - conflicts_at_restart >= restart_limit) {
                    ++stats_.restarts;
                    conflicts_at_restart = stats_.conflicts;
                    restart_limit = static_cast<std::uint64_t>(restart_limit * 1.5);
                    backtrack(0);
                }
                if (static_cast<double>(live_learnts_) > max_learnts) {
                    reduce_learnts();
                    max_learnts *= 1.1;
                }
            } else {
                if (static_cast<int>(trail_.size()) == nvars_) {
                    std::vector<bool> assign(nvars_ + 1, false);
                    for (int v = 1; v <= nvars_; ++v) assign[v] = value_[v] == 1;
                    return SatOutcome::sat(formula_, std::move(assign));
                }
                decide();
            }
        }
    }

    const SolverStats& stats() const { return stats_; }

private:
    struct Clause {
        std::vector<int> lits;
        double activity = 0.0;
        bool learnt = false;
        bool deleted = false;
    };

    static constexpr double kVarDecay = 0.95;
    static constexpr double kClaDecay = 0.999;

    const CnfFormula& formula_;
    SolverConfig cfg_;
    int nvars_;
    bool contradiction_ = false;

    std::vector<Clause> clauses_;
    std::vector<std::vector<int>> watches_;  // watch lists per literal index
    std::size_t live_learnts_ = 0;

    std::vector<std::int8_t> value_;   // -1 unset, else variable truth value
    std::vector<int> level_;
    std::vector<int> reason_;          // clause id or -1
    std::vector<std::int8_t> phase_;
    std::vector<int> trail_;
    std::vector<int> trail_lim_;
    std::size_t qhead_ = 0;

    std::vector<double> activity_;
    double var_inc_ = 1.0;
    double cla_inc_ = 1.0;
    std::vector<std::int8_t> seen_;

    std::vector<int> heap_;      // max-heap of variables by activity
    std::vector<int> heap_pos_;  // -1 when not in heap

    SolverStats stats_;

    static std::size_t widx(int lit) {
        return 2 * static_cast<std::size_t>(std::abs(lit) - 1) + (lit < 0 ? 1 : 0);
    }

    // 1 true, 0 false, -1 unassigned
    int lit_value(int lit) const {
        const std::int8_t v = value_[std::abs(lit)];
        if (v < 0) return -1;
        return v == (lit > 0 ? 1 : 0);
    }

    int decision_level() const { return static_cast<int>(trail_lim_.size()); }

    void enqueue(int lit, int reason) {
        const int v = std::abs(lit);
        value_[v] = lit > 0 ? 1 : 0;
        level_[v] = decision_level();
        reason_[v] = reason;
        trail_.push_back(lit);
    }

    int attach_clause(std::vector<int> lits, bool learnt) {
        const int ci = static_cast<int>(clauses_.size());
        watches_[widx(lits[0])].push_back(ci);
        watches_[widx(lits[1])].push_back(ci);
        clauses_.push_back({std::move(lits), 0.0, learnt, false});
        if (learnt) ++live_learnts_;
        return ci;
    }

    int propagate() {
        int confl = -1;
        while (qhead_ < trail_.size()) {
            const int p = trail_[qhead_++];
            ++stats_.propagations;
            auto& ws = watches_[widx(-p)];
            std::size_t i = 0, j = 0;
            while (i < ws.size()) {
                const int ci = ws[i++];
                auto& lits = clauses_[ci].lits;
                if (lits[0] == -p) std::swap(lits[0], lits[1]);
                if (lit_value(lits[0]) == 1) {  // already satisfied
                    ws[j++] = ci;
                    continue;
                }
                bool moved = false;
                for (std::size_t t = 2; t < lits.size(); ++t)
                    if (lit_value(lits[t]) != 0) {
                        std::swap(lits[1], lits[t]);
                        watches_[widx(lits[1])].push_back(ci);
                        moved = true;
                        break;
                    }
                if (moved) continue;
                ws[j++] = ci;
                if (lit_value(lits[0]) == 0) {  // all literals false
                    confl = ci;
                    qhead_ = trail_.size();
                    while (i < ws.size()) ws[j++] = ws[i++];
                    break;
                }
                enqueue(lits[0], ci);
            }
            ws.resize(j);
            if (confl >= 0) break;
        }
        return confl;
    }

    void bump_var(int v) {
        activity_[v] += var_inc_;
        if (activity_[v] > 1e100) {
            for (int u = 1; u <= nvars_; ++u) activity_[u] *= 1e-100;
            var_inc_ *= 1e-100;
        }
        if (heap_pos_[v] >= 0) sift_up(heap_pos_[v]);
    }

    void bump_clause(int ci) {
        auto& c = clauses_[ci];
        c.activity += cla_inc_;
        if (c.activity > 1e20) {
            for (auto& cl : clauses_)
                if (cl.learnt) cl.activity *= 1e-20;
            cla_inc_ *= 1e-20;
        }
    }

    std::vector<int> analyze(int confl, int& bt_level) {
        std::vector<int> learnt{0};
        std::vector<int> to_clear;
        int path_count = 0;
        int p = 0;
        int index = static_cast<int>(trail_.size()) - 1;
        do {
            auto& c = clauses_[confl];
            if (c.learnt) bump_clause(confl);
            for (std::size_t j = (p == 0 ? 0 : 1); j < c.lits.size(); ++j) {
                const int q = c.lits[j];
                const int v = std::abs(q);
                if (!seen_[v] && level_[v] > 0) {
                    seen_[v] = 1;
                    to_clear.push_back(v);
                    bump_var(v);
                    if (level_[v] == decision_level()) ++path_count;
                    else learnt.push_back(q);
                }
            }
            while (!seen_[std::abs(trail_[index])]) --index;
            p = trail_[index--];
            confl = reason_[std::abs(p)];
            seen_[std::abs(p)] = 0;
            --path_count;
        } while (path_count > 0);
        learnt[0] = -p;

        // drop literals whose reason clause is covered by the rest of the cut
        std::size_t w = 1;
        for (std::size_t i = 1; i < learnt.size(); ++i) {
            const int v = std::abs(learnt[i]);
            const int r = reason_[v];
            bool redundant = r >= 0;
            if (redundant)
                for (std::size_t j = 1; j < clauses_[r].lits.size(); ++j) {
                    const int u = std::abs(clauses_[r].lits[j]);
                    if (!seen_[u] && level_[u] > 0) {
                        redundant = false;
                        break;
                    }
                }
            if (!redundant) learnt[w++] = learnt[i];
        }
        learnt.resize(w);
        for (int v : to_clear) seen_[v] = 0;

        if (learnt.size() == 1) {
            bt_level = 0;
        } else {
            std::size_t max_i = 1;
            for (std::size_t i = 2; i < learnt.size(); ++i)
                if (level_[std::abs(learnt[i])] > level_[std::abs(learnt[max_i])]) max_i = i;
            std::swap(learnt[1], learnt[max_i]);
            bt_level = level_[std::abs(learnt[1])];
        }
        return learnt;
    }

    void backtrack(int target_level) {
        if (decision_level() <= target_level) return;
        const std::size_t keep = trail_lim_[target_level];
        for (std::size_t i = trail_.size(); i-- > keep;) {
            const int v = std::abs(trail_[i]);
            phase_[v] = value_[v];
            value_[v] = -1;
            reason_[v] = -1;
            if (heap_pos_[v] < 0) heap_insert(v);
        }
        trail_.resize(keep);
        trail_lim_.resize(target_level);
        qhead_ = keep;
    }

    void decide() {
        ++stats_.decisions;
        int v = 0;
        while (!heap_.empty()) {
            const int top = heap_pop();
            if (value_[top] < 0) {
                v = top;
                break;
            }
        }
        // heap exhaustion with unassigned vars cannot happen: every unassign reinserts
        trail_lim_.push_back(static_cast<int>(trail_.size()));
        enqueue(phase_[v] ? v : -v, -1);
    }

    void reduce_learnts() {
        std::vector<int> ids;
        for (int ci = 0; ci < static_cast<int>(clauses_.size()); ++ci) {
            const auto& c = clauses_[ci];
            if (!c.learnt || c.deleted || c.lits.size() <= 2) continue;
            const int v0 = std::abs(c.lits[0]);
            if (reason_[v0] == ci) continue;  // locked: currently a propagation reason
            ids.push_back(ci);
        }
        std::sort(ids.begin(), ids.end(), [&](int a, int b) {
            return clauses_[a].activity < clauses_[b].activity;
        });
        const std::size_t drop = ids.size() / 2;
        for (std::size_t i = 0; i < drop; ++i) {
            clauses_[ids[i]].deleted = true;
            clauses_[ids[i]].lits.clear();
            clauses_[ids[i]].lits.shrink_to_fit();
            --live_learnts_;
            ++stats_.deleted;
        }
        for (auto& ws : watches_) ws.clear();
        for (int ci = 0; ci < static_cast<int>(clauses_.size()); ++ci) {
            const auto& c = clauses_[ci];
            if (c.deleted) continue;
            watches_[widx(c.lits[0])].push_back(ci);
            watches_[widx(c.lits[1])].push_back(ci);
        }
    }

    // indexed binary max-heap keyed by activity, ties by variable index
    bool heap_less(int a, int b) const {
        return activity_[a] < activity_[b] || (activity_[a] == activity_[b] && a > b);
    }

    void heap_insert(int v) {
        heap_pos_[v] = static_cast<int>(heap_.size());
        heap_.push_back(v);
        sift_up(heap_pos_[v]);
    }

    int heap_pop() {
        const int top = heap_[0];
        heap_pos_[top] = -1;
        if (heap_.size() > 1) {
            heap_[0] = heap_.back();
            heap_pos_[heap_[0]] = 0;
            heap_.pop_back();
            sift_down(0);
        } else {
            heap_.pop_back();
        }
        return top;
    }

    void sift_up(int i) {
        while (i > 0) {
            const int parent = (i - 1) / 2;
            if (!heap_less(heap_[parent], heap_[i])) break;
            std::swap(heap_pos_[heap_[parent]], heap_pos_[heap_[i]]);
            std::swap(heap_[parent], heap_[i]);
            i = parent;
        }
    }

    void sift_down(int i) {
        const int n = static_cast<int>(heap_.size());
        for (;;) {
            int best = i;
            const int l = 2 * i + 1, r = 2 * i + 2;
            if (l < n && heap_less(heap_[best], heap_[l])) best = l;
            if (r < n && heap_less(heap_[best], heap_[r])) best = r;
            if (best == i) break;
            std::swap(heap_pos_[heap_[best]], heap_pos_[heap_[i]]);
            std::swap(heap_[best], heap_[i]);
            i = best;
        }
    }
};

inline SatOutcome solve(const CnfFormula& f, SolverConfig cfg = {}) {
    CdclSolver solver(f, cfg);
    return solver.solve();
}

inline SatOutcome solve(const CnfFormula& f, SolverConfig cfg, SolverStats& stats_out) {
    CdclSolver solver(f, cfg);
    SatOutcome out = solver.solve();
    stats_out = solver.stats();
    return out;
}

// Variable numbering x_{i,l} = (i-1)*k + l for 1-based vertex i and color l.
// Emits per-vertex at-least-one clauses, then k conflict clauses per edge; no
// at-most-one constraints (multi-colored vertices are resolved at decode).
// Symmetry breaking pins vertex 1 to color 1 and forbids vertex i < k from
// colors above i.
inline CnfFormula encode_k_coloring(const FiniteGraph& g, int k, bool symmetry_breaking) {
    if (k < 1) throw std::domain_error("color count must be >= 1");
    CnfFormula f;
    f.var_count = g.vertex_count * k;
    auto x = [k](int i, int l) { return (i - 1) * k + l; };
    for (int i = 1; i <= g.vertex_count; ++i) {
        std::vector<int> clause(k);
        for (int l = 1; l <= k; ++l) clause[l - 1] = x(i, l);
        f.add_clause(std::move(clause));
    }
    for (auto [u, v] : g.edges)
        for (int l = 1; l <= k; ++l) f.add_clause({-x(u + 1, l), -x(v + 1, l)});
    if (symmetry_breaking && g.vertex_count >= 1) {
        f.add_clause({x(1, 1)});
        for (int l = 2; l <= k; ++l) f.add_clause({-x(1, l)});
        for (int i = 2; i <= std::min(k, g.vertex_count); ++i)
            for (int l = i + 1; l <= k; ++l) f.add_clause({-x(i, l)});
    }
    return f;
}

// Lowest true color per vertex.
inline Coloring decode_coloring(int vertex_count, int k, const SatOutcome& out) {
    if (!out.satisfiable) throw std::domain_error("cannot decode an UNSAT outcome");
    std::vector<int> colors(vertex_count, 0);
    for (int i = 1; i <= vertex_count; ++i) {
        for (int l = 1; l <= k; ++l)
            if (out.assignment[(i - 1) * k + l]) {
                colors[i - 1] = l;
                break;
            }
        if (colors[i - 1] == 0) throw std::logic_error("satisfying assignment left a vertex uncolored");
    }
    return Coloring(k, std::move(colors));
}

struct ChromaticResult {
    int chi = 0;
    Coloring witness;
    int unsat_k = 0;  // last refuted k; lo - 1 when lo itself is satisfiable
};

inline ChromaticResult chromatic_number_sat(const FiniteGraph& g, int lo, int hi,
                                            SolverConfig cfg = {}, bool symmetry_breaking = true) {
    if (lo < 1 || lo > hi) throw std::domain_error("invalid chromatic search range");
    for (int k = lo; k <= hi; ++k) {
        const CnfFormula f = encode_k_coloring(g, k, symmetry_breaking);
        const SatOutcome out = solve(f, cfg);
        if (out.satisfiable) {
            Coloring col = decode_coloring(g.vertex_count, k, out);
            if (!is_proper_coloring(g, col))
                throw std::logic_error("decoded coloring failed verification");
            return {k, std::move(col), k - 1};
        }
    }
    throw std::range_error("chromatic number exceeds search upper bound");
}

inline std::string write_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.var_count << ' ' << f.clauses.size() << '\n';
    for (const auto& cl : f.clauses) {
        for (int l : cl) out << l << ' ';
        out << "0\n";
    }
    return out.str();
}

// Interop text: verdict line plus "v" literal lines (10 literals per line,
// closed by 0) in the style external solvers emit.
inline std::string solution_text(const SatOutcome& o) {
    if (!o.satisfiable) return "s UNSATISFIABLE\n";
    std::ostringstream out;
    out << "s SATISFIABLE\n";
    int on_line = 0;
    for (std::size_t v = 1; v < o.assignment.size(); ++v) {
        if (on_line == 0) out << 'v';
        out << ' ' << (o.assignment[v] ? static_cast<int>(v) : -static_cast<int>(v));
        if (++on_line == 10) {
            out << '\n';
            on_line = 0;
        }
    }
    if (on_line == 0) out << 'v';
    out << " 0\n";
    return out.str();
}

}  // namespace latchroma

#pragma once

// Finite graphs cut out of a lattice: distance-d ball graphs around the
// origin, discrete torus quotients Z^n / cZ^n, automorphism-group order by
// refinement + backtracking, and a branch-and-bound coloring oracle for
// small graphs.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "voronoi.hpp"

namespace latchroma {

struct FiniteGraph {
    int vertex_count = 0;
    std::vector<Vec> labels;                   // vertex index -> lattice point / coset rep
    std::vector<std::pair<int, int>> edges;    // u < v, sorted, unique

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(vertex_count);
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return adj;
    }
};

struct Coloring {
    int k = 0;
    std::vector<int> colors;  // vertex index -> color in 1..k

    Coloring() = default;
    Coloring(int k_, std::vector<int> colors_) : k(k_), colors(std::move(colors_)) {
        for (int c : colors)
            if (c < 1 || c > k) throw std::invalid_argument("color out of range 1..k");
    }
};

// Vertices within graph distance d of the origin; edges are generator
// differences.  Vertices are indexed breadth-first with each distance layer
// sorted lexicographically, so for d = 1 the order is {0} then S u -S sorted.
inline FiniteGraph ball_graph(const GeneratorSet& s, int d) {
    if (d < 0) throw std::domain_error("ball radius must be nonnegative");
    const int n = s.n;
    const auto gens = s.expanded();

    std::vector<Vec> vertices{Vec(n, 0)};
    std::map<Vec, int> index{{vertices[0], 0}};
    std::vector<Vec> frontier = vertices;
    for (int layer = 0; layer < d; ++layer) {
        std::set<Vec> next;
        for (const auto& u : frontier)
            for (const auto& g : gens) {
                Vec w(n);
                for (int i = 0; i < n; ++i) w[i] = u[i] + g[i];
                if (!index.count(w)) next.insert(std::move(w));
            }
        frontier.assign(next.begin(), next.end());
        for (const auto& w : frontier) {
            index.emplace(w, static_cast<int>(vertices.size()));
            vertices.push_back(w);
        }
        if (frontier.empty()) break;
    }

    FiniteGraph g;
    g.vertex_count = static_cast<int>(vertices.size());
    g.labels = vertices;
    for (int ui = 0; ui < g.vertex_count; ++ui)
        for (const auto& gen : gens) {
            Vec w(n);
            for (int i = 0; i < n; ++i) w[i] = vertices[ui][i] + gen[i];
            auto it = index.find(w);
            if (it != index.end() && it->second > ui) g.edges.emplace_back(ui, it->second);
        }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

// True iff no expanded generator lies in cZ^n.
inline bool sublattice_avoids_generators(const GeneratorSet& s, std::int64_t c) {
    if (c < 1) throw std::domain_error("sublattice scale must be >= 1");
    for (const auto& v : s.vectors)
        if (std::all_of(v.begin(), v.end(), [c](auto x) { return x % c == 0; }))
            return false;
    return true;
}

// Quotient graph on the c^n cosets of cZ^n, labeled by their representatives
// in {0..c-1}^n; x~y iff x - y hits a generator mod c.
inline FiniteGraph torus_graph(const GeneratorSet& s, std::int64_t c) {
    if (c < 2) throw std::domain_error("torus scale must be >= 2");
    if (!sublattice_avoids_generators(s, c))
        throw std::domain_error("sublattice contains a Voronoi vector");
    const int n = s.n;
    std::int64_t count = 1;
    for (int i = 0; i < n; ++i) {
        count *= c;
        if (count > (std::int64_t(1) << 31)) throw std::domain_error("torus too large");
    }

    FiniteGraph g;
    g.vertex_count = static_cast<int>(count);
    g.labels.resize(count);
    for (std::int64_t idx = 0; idx < count; ++idx) {
        Vec x(n);
        std::int64_t rem = idx;
        for (int i = n - 1; i >= 0; --i) {
            x[i] = rem % c;
            rem /= c;
        }
        g.labels[idx] = std::move(x);
    }
    auto encode = [&](const Vec& x) {
        std::int64_t idx = 0;
        for (int i = 0; i < n; ++i) idx = idx * c + x[i];
        return idx;
    };

    const auto gens = s.expanded();
    for (std::int64_t idx = 0; idx < count; ++idx)
        for (const auto& gen : gens) {
            Vec y(n);
            for (int i = 0; i < n; ++i) y[i] = ((g.labels[idx][i] + gen[i]) % c + c) % c;
            std::int64_t jdx = encode(y);
            if (jdx > idx) g.edges.emplace_back(static_cast<int>(idx), static_cast<int>(jdx));
        }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

// Exact automorphism group order: refine a vertex coloring by (color, sorted
// neighbor colors) to a fixpoint, then count color-preserving bijections that
// respect adjacency.
inline std::uint64_t automorphism_order(const FiniteGraph& g) {
    const int n = g.vertex_count;
    if (n == 0) return 1;
    std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
    for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;

    std::vector<int> color(n);
    for (int u = 0; u < n; ++u)
        color[u] = static_cast<int>(std::count(adj[u].begin(), adj[u].end(), 1));
    for (int round = 0; round <= n + 1; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int u = 0; u < n; ++u) {
            std::vector<int> nb;
            for (int v = 0; v < n; ++v)
                if (adj[u][v]) nb.push_back(color[v]);
            std::sort(nb.begin(), nb.end());
            sig[u] = {color[u], std::move(nb)};
        }
        std::map<std::pair<int, std::vector<int>>, int> ids;
        std::vector<int> next(n);
        for (int u = 0; u < n; ++u) {
            auto it = ids.find(sig[u]);
            if (it == ids.end()) it = ids.emplace(sig[u], static_cast<int>(ids.size())).first;
            next[u] = it->second;
        }
        if (next == color) break;
        color = std::move(next);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair(color[a], a) < std::pair(color[b], b);
    });

    std::vector<int> mapping(n, -1);
    std::vector<std::uint8_t> used(n, 0);
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            ++count;
            return;
        }
        const int u = order[depth];
        for (int w = 0; w < n; ++w) {
            if (used[w] || color[w] != color[u]) continue;
            bool ok = true;
            for (int e = 0; e < depth; ++e) {
                const int x = order[e];
                if (adj[u][x] != adj[w][mapping[x]]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            mapping[u] = w;
            used[w] = 1;
            self(self, depth + 1);
            used[w] = 0;
            mapping[u] = -1;
        }
    };
    rec(rec, 0);
    return count;
}

// Exact chromatic number by branch and bound with a greedy clique lower
// bound; refuses graphs with more than 24 vertices.
inline int chromatic_number_exact_small(const FiniteGraph& g) {
    const int n = g.vertex_count;
    if (n > 24) throw std::domain_error("exact coloring oracle is limited to 24 vertices");
    if (n == 0) return 0;
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }

    std::vector<int> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
        return std::popcount(adj[a]) > std::popcount(adj[b]);
    });

    // greedy clique for the lower bound and the initial vertex block
    std::vector<int> clique;
    std::uint32_t common = ~0u;
    for (int u : by_degree)
        if ((common >> u) & 1) {
            clique.push_back(u);
            common &= adj[u];
        }
    std::vector<int> vorder = clique;
    for (int u : by_degree)
        if (std::find(clique.begin(), clique.end(), u) == clique.end()) vorder.push_back(u);

    std::vector<int> assigned(n, 0);
    auto feasible = [&](int k) {
        auto rec = [&](auto&& self, int depth, int used) -> bool {
            if (depth == n) return true;
            const int u = vorder[depth];
            const int limit = std::min(k, used + 1);
            for (int col = 1; col <= limit; ++col) {
                bool clash = false;
                std::uint32_t nb = adj[u];
                while (nb) {
                    const int v = std::countr_zero(nb);
                    nb &= nb - 1;
                    if (assigned[v] == col) {
                        clash = true;
                        break;
                    }
                }
                if (clash) continue;
                assigned[u] = col;
                if (self(self, depth + 1, std::max(used, col))) return true;
                assigned[u] = 0;
            }
            return false;
        };
        std::fill(assigned.begin(), assigned.end(), 0);
        return rec(rec, 0, 0);
    };

    for (int k = std::max<int>(1, static_cast<int>(clique.size()));; ++k)
        if (feasible(k)) return k;
}

inline bool is_proper_coloring(const FiniteGraph& g, const Coloring& col) {
    if (static_cast<int>(col.colors.size()) != g.vertex_count)
        throw std::domain_error("coloring does not cover the vertex set");
    for (auto [u, v] : g.edges)
        if (col.colors[u] == col.colors[v]) return false;
    return true;
}

// Plain text export: "p <n> <m>" header, then 1-based "u v" lines.
inline std::string to_edge_list(const FiniteGraph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

inline nlohmann::json graph_to_json(const FiniteGraph& g) {
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& l : g.labels) labels.push_back(l);
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges) edges.push_back({u + 1, v + 1});
    return {{"vertices", g.vertex_count}, {"labels", labels}, {"edges", edges}};
}

}  // namespace latchroma

#pragma once

// Linear isomorphism of lattice Cayley graphs: a graph isomorphism fixing 0
// must map generator sets onto each other linearly, so we search GL_n(Z) maps
// sending one expanded generator set onto the other.  Classification buckets
// by cheap invariants first, then unions within buckets.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "graph.hpp"
#include "voronoi.hpp"

namespace latchroma {

namespace detail {

inline std::int64_t det_i64(const Mat& m) {
    const int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    std::int64_t acc = 0;
    Mat sub(n - 1, Vec(n - 1));
    for (int col = 0; col < n; ++col) {
        if (m[0][col] == 0) continue;
        for (int i = 1; i < n; ++i) {
            int sj = 0;
            for (int j = 0; j < n; ++j)
                if (j != col) sub[i - 1][sj++] = m[i][j];
        }
        const std::int64_t minor = det_i64(sub);
        acc += (col % 2 ? -1 : 1) * m[0][col] * minor;
    }
    return acc;
}

inline Mat adjugate_i64(const Mat& m) {
    const int n = static_cast<int>(m.size());
    Mat adj(n, Vec(n));
    if (n == 1) {
        adj[0][0] = 1;
        return adj;
    }
    Mat sub(n - 1, Vec(n - 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int si = 0;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                int sj = 0;
                for (int c = 0; c < n; ++c)
                    if (c != j) sub[si][sj++] = m[r][c];
                ++si;
            }
            adj[j][i] = ((i + j) % 2 ? -1 : 1) * det_i64(sub);
        }
    return adj;
}

inline Mat columns_matrix(const std::vector<Vec>& cols) {
    const int n = static_cast<int>(cols.front().size());
    Mat m(n, Vec(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < n; ++i) m[i][j] = cols[j][i];
    return m;
}

}  // namespace detail

// Integer matrix with determinant +-1, acting on column vectors.
struct UnimodularMap {
    Mat matrix;

    explicit UnimodularMap(Mat m) : matrix(std::move(m)) {
        const std::size_t n = matrix.size();
        if (n == 0) throw std::invalid_argument("empty matrix");
        for (const auto& row : matrix)
            if (row.size() != n) throw std::invalid_argument("matrix must be square");
        Int d = 0;
        {  // exact determinant via cofactor expansion in big integers
            std::vector<std::vector<Int>> big(n, std::vector<Int>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) big[i][j] = matrix[i][j];
            auto det = [&](auto&& self, std::vector<std::vector<Int>>& m) -> Int {
                const std::size_t k = m.size();
                if (k == 1) return m[0][0];
                Int acc = 0;
                for (std::size_t col = 0; col < k; ++col) {
                    if (m[0][col] == 0) continue;
                    std::vector<std::vector<Int>> sub(k - 1, std::vector<Int>(k - 1));
                    for (std::size_t i = 1; i < k; ++i) {
                        std::size_t sj = 0;
                        for (std::size_t j = 0; j < k; ++j)
                            if (j != col) sub[i - 1][sj++] = m[i][j];
                    }
                    Int term = m[0][col] * self(self, sub);
                    acc += (col % 2 ? -term : term);
                }
                return acc;
            };
            d = det(det, big);
        }
        if (d != 1 && d != -1)
            throw std::invalid_argument("matrix is not unimodular (|det| != 1)");
    }

    int dim() const { return static_cast<int>(matrix.size()); }

    Vec apply(const Vec& v) const {
        const int n = dim();
        Vec out(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out[i] += matrix[i][j] * v[j];
        return out;
    }
};

struct InvariantSignature {
    int regularity = 0;
    int ball_edges = 0;
    std::uint64_t aut_order = 0;
    auto operator<=>(const InvariantSignature&) const = default;
};

inline InvariantSignature invariant_signature(const GeneratorSet& s) {
    FiniteGraph c1 = ball_graph(s, 1);
    return {2 * static_cast<int>(s.vectors.size()),
            static_cast<int>(c1.edges.size()), automorphism_order(c1)};
}

// Search for A in GL_n(Z) with A(S u -S) = S' u -S'.  Fixes the first
// full-rank n-tuple of the sorted expanded S, then tries every same-|det|
// n-subset of the expanded S' in lexicographic order, in all arrangements.
// Absence of a map certifies the Cayley graphs are non-isomorphic.
inline std::optional<UnimodularMap> find_linear_isomorphism(const GeneratorSet& sa,
                                                            const GeneratorSet& sb) {
    if (sa.n != sb.n) throw std::invalid_argument("dimension mismatch");
    const int n = sa.n;
    const auto ea = sa.expanded();
    const auto eb = sb.expanded();

    // first full-rank n-tuple of ea, scanning index combinations lexicographically
    std::vector<Vec> basis;
    std::int64_t det_basis = 0;
    {
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        const int m = static_cast<int>(ea.size());
        if (m >= n)
            while (true) {
                std::vector<Vec> cand;
                for (int i : idx) cand.push_back(ea[i]);
                const std::int64_t d = detail::det_i64(detail::columns_matrix(cand));
                if (d != 0) {
                    basis = std::move(cand);
                    det_basis = d;
                    break;
                }
                int pos = n - 1;
                while (pos >= 0 && idx[pos] == m - n + pos) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (int i = pos + 1; i < n; ++i) idx[i] = idx[i - 1] + 1;
            }
    }
    if (basis.empty()) throw std::domain_error("generator set does not span the lattice");

    const Mat adj_basis = detail::adjugate_i64(detail::columns_matrix(basis));
    if (ea.size() != eb.size()) return std::nullopt;

    // target must span too (otherwise no bijective linear image exists)
    const std::set<Vec> eb_set(eb.begin(), eb.end());

    const int m = static_cast<int>(eb.size());
    if (m < n) return std::nullopt;
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    bool saw_full_rank = false;
    while (true) {
        std::vector<Vec> cand(n);
        for (int i = 0; i < n; ++i) cand[i] = eb[idx[i]];
        const std::int64_t d = detail::det_i64(detail::columns_matrix(cand));
        if (d != 0) saw_full_rank = true;
        if (d == det_basis || d == -det_basis) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<Vec> cols(n);
                for (int i = 0; i < n; ++i) cols[i] = cand[perm[i]];
                const Mat c = detail::columns_matrix(cols);
                // A = C * adj(B) / det(B); integrality makes |det A| = 1 automatic
                Mat a(n, Vec(n));
                bool integral = true;
                for (int i = 0; i < n && integral; ++i)
                    for (int j = 0; j < n && integral; ++j) {
                        std::int64_t acc = 0;
                        for (int k = 0; k < n; ++k) acc += c[i][k] * adj_basis[k][j];
                        if (acc % det_basis != 0) integral = false;
                        else a[i][j] = acc / det_basis;
                    }
                if (!integral) continue;
                bool maps = true;
                for (const auto& v : ea) {
                    Vec w(n, 0);
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) w[i] += a[i][j] * v[j];
                    if (!eb_set.count(w)) {
                        maps = false;
                        break;
                    }
                }
                if (maps) return UnimodularMap(std::move(a));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        int pos = n - 1;
        while (pos >= 0 && idx[pos] == m - n + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < n; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!saw_full_rank) throw std::domain_error("generator set does not span the lattice");
    return std::nullopt;
}

struct IsoWitness {
    std::string from, to;
    Mat matrix;
};

struct IsoClass {
    int class_id = 0;
    std::string graph_name;
    std::vector<std::string> members;
    std::string representative;
    InvariantSignature signature;
    std::vector<IsoWitness> witnesses;  // non-identity links found during union
};

// Partition entries into Cayley-graph isomorphism classes: bucket by
// (regularity, |E(C1)|, |Aut(C1)|), then union within buckets — identical
// vector sets merge directly, the rest by explicit isomorphism search.
// Cross-bucket pairs are non-isomorphic because the invariants differ.
inline std::vector<IsoClass> classify(const std::vector<CatalogEntry>& entries) {
    const int count = static_cast<int>(entries.size());
    {
        std::set<std::string> seen;
        for (const auto& e : entries)
            if (!seen.insert(e.symbol).second)
                throw std::invalid_argument("duplicate catalog symbol: " + e.symbol);
    }

    // canonical processing order: full-catalog position, then symbol
    std::map<std::string, int> catalog_pos;
    for (std::size_t i = 0; i < catalog().size(); ++i) catalog_pos[catalog()[i].symbol] = static_cast<int>(i);
    auto canon_key = [&](int i) {
        auto it = catalog_pos.find(entries[i].symbol);
        const int pos = it == catalog_pos.end() ? static_cast<int>(catalog_pos.size()) : it->second;
        return std::pair(pos, entries[i].symbol);
    };

    std::vector<GeneratorSet> gens;
    std::vector<InvariantSignature> sigs;
    gens.reserve(count);
    for (int i = 0; i < count; ++i) {
        gens.push_back(strict_voronoi_vectors(entries[i].form()));
        sigs.push_back(invariant_signature(gens.back()));
    }

    std::vector<int> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find_root = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::map<InvariantSignature, std::vector<int>> buckets;
    for (int i = 0; i < count; ++i) buckets[sigs[i]].push_back(i);

    std::vector<IsoWitness> witnesses;
    for (auto& [sig, bucket] : buckets) {
        std::sort(bucket.begin(), bucket.end(),
                  [&](int a, int b) { return canon_key(a) < canon_key(b); });
        for (std::size_t bi = 0; bi < bucket.size(); ++bi)
            for (std::size_t bj = bi + 1; bj < bucket.size(); ++bj) {
                const int i = bucket[bi], j = bucket[bj];
                if (find_root(i) == find_root(j)) continue;
                if (gens[i].vectors == gens[j].vectors) {
                    parent[find_root(j)] = find_root(i);
                    continue;
                }
                if (auto map = find_linear_isomorphism(gens[i], gens[j])) {
                    parent[find_root(j)] = find_root(i);
                    witnesses.push_back({entries[i].symbol, entries[j].symbol, map->matrix});
                }
            }
    }

    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < count; ++i) groups[find_root(i)].push_back(i);

    std::vector<IsoClass> classes;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end(),
                  [&](int a, int b) { return canon_key(a) < canon_key(b); });
        IsoClass cls;
        cls.signature = sigs[root];
        bool any_z = false, any_n = false;
        for (int i : members) {
            cls.members.push_back(entries[i].symbol);
            (entries[i].zonotopal ? any_z : any_n) = true;
        }
        cls.representative = cls.members.front();
        const char* super = any_z && any_n ? "z,n" : (any_z ? "z" : "n");
        cls.graph_name = "V_{" + std::to_string(cls.signature.regularity) + "}^{" + super + "}";
        for (const auto& w : witnesses)
            if (std::find(cls.members.begin(), cls.members.end(), w.from) != cls.members.end())
                cls.witnesses.push_back(w);
        classes.push_back(std::move(cls));
    }

    // published order: regularity descending, then all-zonotopal < mixed < all-non
    auto status_rank = [](const IsoClass& c) {
        const bool has_z = c.graph_name.find('z') != std::string::npos;
        const bool has_n = c.graph_name.find('n') != std::string::npos;
        return has_z && has_n ? 1 : (has_z ? 0 : 2);
    };
    std::sort(classes.begin(), classes.end(), [&](const IsoClass& a, const IsoClass& b) {
        if (a.signature.regularity != b.signature.regularity)
            return a.signature.regularity > b.signature.regularity;
        if (status_rank(a) != status_rank(b)) return status_rank(a) < status_rank(b);
        if (a.signature.ball_edges != b.signature.ball_edges)
            return a.signature.ball_edges < b.signature.ball_edges;
        if (a.signature.aut_order != b.signature.aut_order)
            return a.signature.aut_order > b.signature.aut_order;
        return a.members.front() < b.members.front();
    });
    for (std::size_t i = 0; i < classes.size(); ++i) classes[i].class_id = static_cast<int>(i + 1);
    return classes;
}

inline nlohmann::json classification_to_json(const std::vector<IsoClass>& classes) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : classes) {
        nlohmann::json wits = nlohmann::json::array();
        for (const auto& w : c.witnesses)
            wits.push_back({{"from", w.from}, {"to", w.to}, {"matrix", w.matrix}});
        arr.push_back({{"class_id", c.class_id},
                       {"graph_name", c.graph_name},
                       {"signature",
                        {{"regularity", c.signature.regularity},
                         {"ball_edges", c.signature.ball_edges},
                         {"aut_order", c.signature.aut_order}}},
                       {"members", c.members},
                       {"representative", c.representative},
                       {"witnesses", wits}});
    }
    return arr;
}

}  // namespace latchroma

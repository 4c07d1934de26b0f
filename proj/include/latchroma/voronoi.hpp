#pragma once

// Strict Voronoi vectors of a positive definite form.  A vector v is strict
// iff +-v are the unique minimizers of Q[x] over the nonzero coset
// x = v (mod 2Z^n); we enumerate each coset inside the box |x_i| <= B and
// double B whenever a minimizer touches the boundary.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "catalog.hpp"
#include "qform.hpp"

namespace latchroma {

inline Vec canonical_pair_rep(Vec v) {
    for (auto c : v) {
        if (c > 0) return v;
        if (c < 0) {
            for (auto& x : v) x = -x;
            return v;
        }
    }
    throw std::invalid_argument("zero vector has no canonical representative");
}

// Centrally symmetric generator set, stored one representative per +- pair.
struct GeneratorSet {
    int n = 0;
    std::vector<Vec> vectors;               // canonical reps, lexicographic
    std::optional<QuadraticForm> form;      // provenance, if derived from one

    static GeneratorSet from_vectors(int n, const std::vector<Vec>& vs,
                                     std::optional<QuadraticForm> provenance = std::nullopt) {
        GeneratorSet s;
        s.n = n;
        s.form = std::move(provenance);
        for (const auto& v : vs) {
            if (static_cast<int>(v.size()) != n)
                throw std::invalid_argument("generator has wrong dimension");
            bool zero = std::all_of(v.begin(), v.end(), [](auto c) { return c == 0; });
            if (zero) throw std::invalid_argument("generator set may not contain zero");
            s.vectors.push_back(canonical_pair_rep(v));
        }
        std::sort(s.vectors.begin(), s.vectors.end());
        if (std::adjacent_find(s.vectors.begin(), s.vectors.end()) != s.vectors.end())
            throw std::invalid_argument("generator set contains an equal or negated duplicate");
        return s;
    }

    // S together with -S, sorted lexicographically.
    std::vector<Vec> expanded() const {
        std::vector<Vec> out;
        out.reserve(2 * vectors.size());
        for (const auto& v : vectors) {
            out.push_back(v);
            Vec neg(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
            out.push_back(std::move(neg));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

namespace detail {

// One coset scan at box size B.  Returns the strict representative if the
// coset minimum is attained by exactly one +- pair, nullopt for non-strict
// ties; sets boundary_hit when a minimizer touches the box (result invalid).
template <typename Value, typename Eval>
std::optional<Vec> coset_minimum(int n, const std::vector<int>& parity, int box,
                                 const Eval& eval, bool& boundary_hit) {
    Vec x(n, 0);
    bool have_best = false;
    Value best{};
    std::vector<Vec> minimizers;
    auto scan = [&](auto&& self, int i) -> void {
        if (i == n) {
            Value q = eval(x);
            if (!have_best || q < best) {
                have_best = true;
                best = q;
                minimizers.assign(1, x);
            } else if (q == best) {
                minimizers.push_back(x);
            }
            return;
        }
        for (int c = -box + ((box + parity[i]) & 1); c <= box; c += 2) {
            x[i] = c;
            self(self, i + 1);
        }
    };
    scan(scan, 0);
    assert(have_best && minimizers.size() % 2 == 0);
    for (const auto& m : minimizers)
        for (auto c : m)
            if (c == box || c == -box) {
                boundary_hit = true;
                return std::nullopt;
            }
    if (minimizers.size() != 2) return std::nullopt;  // Voronoi but not strict
    return canonical_pair_rep(minimizers.front());
}

template <typename Value, typename Eval>
std::optional<std::vector<Vec>> strict_pairs_at_box(int n, int box, const Eval& eval) {
    std::vector<Vec> out;
    std::vector<int> parity(n, 0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        for (int i = 0; i < n; ++i) parity[i] = (mask >> i) & 1;
        bool boundary_hit = false;
        auto rep = coset_minimum<Value>(n, parity, box, eval, boundary_hit);
        if (boundary_hit) return std::nullopt;
        if (rep) out.push_back(std::move(*rep));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

inline GeneratorSet strict_voronoi_vectors(const QuadraticForm& q) {
    if (!is_positive_definite(q))
        throw std::domain_error("strict Voronoi vectors require a positive definite form");
    const int n = q.dim();

    // int64 evaluation is safe while maxQ * (n*B)^2 stays below 2^62
    std::vector<std::vector<std::int64_t>> qi;
    bool small = q.max_abs_entry() < (Int(1) << 40);
    if (small) {
        qi.assign(n, std::vector<std::int64_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) qi[i][j] = static_cast<std::int64_t>(q.at(i, j));
    }

    for (int box = 3;; box *= 2) {
        std::optional<std::vector<Vec>> pairs;
        const std::int64_t span = static_cast<std::int64_t>(n) * box;
        if (small && q.max_abs_entry() * span * span < (Int(1) << 62)) {
            auto eval = [&](const Vec& x) {
                std::int64_t acc = 0;
                for (int i = 0; i < n; ++i) {
                    if (x[i] == 0) continue;
                    for (int j = 0; j < n; ++j) acc += qi[i][j] * x[i] * x[j];
                }
                return acc;
            };
            pairs = detail::strict_pairs_at_box<std::int64_t>(n, box, eval);
        } else {
            auto eval = [&](const Vec& x) { return q.evaluate(x); };
            pairs = detail::strict_pairs_at_box<Int>(n, box, eval);
        }
        if (pairs) return GeneratorSet::from_vectors(n, *pairs, q);
    }
}

struct VerifyRow {
    std::string symbol;
    bool matched = false;
    int computed_pairs = 0;
    int expected_pairs = 0;
};

struct VerifyReport {
    int matches = 0;
    int mismatches = 0;
    std::vector<VerifyRow> rows;
};

// Recompute strict Voronoi vectors for each entry and compare against the
// published lists as +- pair sets (order-insensitive).
inline VerifyReport verify_catalog_vectors(const std::vector<CatalogEntry>& entries) {
    VerifyReport rep;
    for (const auto& e : entries) {
        GeneratorSet computed = strict_voronoi_vectors(e.form());
        GeneratorSet expected = GeneratorSet::from_vectors(4, e.expected_voronoi);
        VerifyRow row;
        row.symbol = e.symbol;
        row.computed_pairs = static_cast<int>(computed.vectors.size());
        row.expected_pairs = static_cast<int>(expected.vectors.size());
        row.matched = computed.vectors == expected.vectors;
        (row.matched ? rep.matches : rep.mismatches)++;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

inline VerifyReport verify_catalog_vectors() { return verify_catalog_vectors(catalog()); }

inline nlohmann::json generator_set_to_json(const GeneratorSet& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : s.vectors) arr.push_back(v);
    return arr;
}

}  // namespace latchroma

#pragma once

// Exact integer quadratic forms (Gram matrices) and the twelve rank-1/rank-4
// ray matrices whose 0/1-sums produce every catalogued form.

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace latchroma {

using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<std::int64_t>;  // lattice vector
using Mat = std::vector<Vec>;           // small integer matrix, row-major

// Symmetric integer Gram matrix; evaluates Q[x] = x^T Q x exactly.
class QuadraticForm {
public:
    explicit QuadraticForm(std::vector<std::vector<Int>> entries)
        : e_(std::move(entries)) {
        const std::size_t n = e_.size();
        if (n < 2 || n > 5)
            throw std::invalid_argument("form dimension must be in 2..5");
        for (const auto& row : e_)
            if (row.size() != n)
                throw std::invalid_argument("form matrix must be square");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (e_[i][j] != e_[j][i])
                    throw std::invalid_argument("form matrix must be symmetric");
    }

    static QuadraticForm from_int_rows(const std::vector<std::vector<std::int64_t>>& rows) {
        std::vector<std::vector<Int>> e(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            e[i].assign(rows[i].begin(), rows[i].end());
        return QuadraticForm(std::move(e));
    }

    static QuadraticForm identity(int n) {
        std::vector<std::vector<Int>> e(n, std::vector<Int>(n, 0));
        for (int i = 0; i < n; ++i) e[i][i] = 1;
        return QuadraticForm(std::move(e));
    }

    int dim() const { return static_cast<int>(e_.size()); }

    const Int& at(int i, int j) const { return e_.at(i).at(j); }

    const std::vector<std::vector<Int>>& entries() const { return e_; }

    Int evaluate(const Vec& x) const {
        const int n = dim();
        if (static_cast<int>(x.size()) != n)
            throw std::invalid_argument("vector length does not match form dimension");
        Int acc = 0;
        for (int i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < n; ++j) {
                if (x[j] == 0) continue;
                acc += e_[i][j] * x[i] * x[j];
            }
        }
        return acc;
    }

    QuadraticForm operator+(const QuadraticForm& o) const {
        if (o.dim() != dim())
            throw std::invalid_argument("dimension mismatch in form sum");
        auto e = e_;
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) e[i][j] += o.e_[i][j];
        return QuadraticForm(std::move(e));
    }

    QuadraticForm scaled(const Int& k) const {
        auto e = e_;
        for (auto& row : e)
            for (auto& v : row) v *= k;
        return QuadraticForm(std::move(e));
    }

    // A^T Q A for an integer matrix A (columns are images of basis vectors).
    QuadraticForm conjugated(const Mat& a) const {
        const int n = dim();
        if (static_cast<int>(a.size()) != n)
            throw std::invalid_argument("dimension mismatch in conjugation");
        std::vector<std::vector<Int>> qa(n, std::vector<Int>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) qa[i][j] += e_[i][k] * a[k][j];
        std::vector<std::vector<Int>> out(n, std::vector<Int>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) out[i][j] += Int(a[k][i]) * qa[k][j];
        return QuadraticForm(std::move(out));
    }

    Int max_abs_entry() const {
        Int m = 0;
        for (const auto& row : e_)
            for (const auto& v : row)
                if (abs(v) > m) m = abs(v);
        return m;
    }

    bool operator==(const QuadraticForm& o) const { return e_ == o.e_; }

private:
    std::vector<std::vector<Int>> e_;
};

// True iff all leading principal minors are strictly positive.  Fraction-free
// (Bareiss) elimination: after step k the pivot a[k][k] equals the (k+1)-st
// leading principal minor, so the test is exact.
inline bool is_positive_definite(const QuadraticForm& q) {
    const int n = q.dim();
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = q.at(i, j);
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        if (a[k][k] <= 0) return false;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return true;
}

// The twelve 4x4 ray matrices: R1..R4 = e_i e_i^T, R5..R10 = (e_i - e_j)(e_i - e_j)^T
// over the pairs (1,2),(1,3),(1,4),(2,3),(2,4),(3,4), and two further rank-1/rank-4
// generators R11, R12.
inline QuadraticForm ray_matrix(int index) {
    auto rank1 = [](std::array<std::int64_t, 4> v) {
        std::vector<std::vector<Int>> e(4, std::vector<Int>(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) e[i][j] = v[i] * v[j];
        return QuadraticForm(std::move(e));
    };
    switch (index) {
        case 1: return rank1({1, 0, 0, 0});
        case 2: return rank1({0, 1, 0, 0});
        case 3: return rank1({0, 0, 1, 0});
        case 4: return rank1({0, 0, 0, 1});
        case 5: return rank1({1, -1, 0, 0});
        case 6: return rank1({1, 0, -1, 0});
        case 7: return rank1({1, 0, 0, -1});
        case 8: return rank1({0, 1, -1, 0});
        case 9: return rank1({0, 1, 0, -1});
        case 10: return rank1({0, 0, 1, -1});
        case 11:
            return QuadraticForm::from_int_rows({{4, 2, -2, -2},
                                                 {2, 4, -2, -2},
                                                 {-2, -2, 4, 0},
                                                 {-2, -2, 0, 4}});
        case 12: return rank1({1, 1, -1, -1});
        default: throw std::domain_error("ray index must be in 1..12");
    }
}

// Entrywise sum of the selected ray matrices (multiset, repetitions allowed).
inline QuadraticForm build_form(const std::vector<int>& rays) {
    if (rays.empty()) throw std::domain_error("ray multiset must be nonempty");
    QuadraticForm q = ray_matrix(rays.front());
    for (std::size_t i = 1; i < rays.size(); ++i) q = q + ray_matrix(rays[i]);
    return q;
}

// Text format: first line n, then n rows of whitespace-separated integers.
inline QuadraticForm read_gram(std::istream& in) {
    int n = 0;
    if (!(in >> n)) throw std::domain_error("gram input: missing dimension line");
    if (n < 2 || n > 5) throw std::domain_error("gram input: dimension must be in 2..5");
    std::vector<std::vector<Int>> e(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(in >> e[i][j]))
                throw std::domain_error("gram input: truncated matrix");
    return QuadraticForm(std::move(e));  // symmetry enforced by the constructor
}

inline QuadraticForm read_gram(const std::string& text) {
    std::istringstream in(text);
    return read_gram(in);
}

inline void write_gram(const QuadraticForm& q, std::ostream& out) {
    out << q.dim() << '\n';
    for (int i = 0; i < q.dim(); ++i) {
        for (int j = 0; j < q.dim(); ++j) out << (j ? " " : "") << q.at(i, j);
        out << '\n';
    }
}

inline std::string write_gram(const QuadraticForm& q) {
    std::ostringstream out;
    write_gram(q, out);
    return out.str();
}

}  // namespace latchroma

#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qpoincare/rational.hpp"

namespace qpoincare {

// Dense matrix over Q. Small and unclever on purpose: the exact elimination
// routines below are where the work happens.
class MatQ {
public:
    MatQ() = default;
    MatQ(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static MatQ identity(std::size_t n) {
        MatQ m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    [[nodiscard]] bool is_zero() const {
        for (const Rat& v : a_)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const MatQ& a, const MatQ& b) = default;

    friend MatQ operator+(const MatQ& a, const MatQ& b) {
        check_same(a, b);
        MatQ out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
        return out;
    }

    friend MatQ operator-(const MatQ& a, const MatQ& b) {
        check_same(a, b);
        MatQ out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
        return out;
    }

    friend MatQ operator*(const MatQ& a, const MatQ& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        MatQ out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rat& v = a(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Rat& w = b(k, j);
                    if (w != 0) out(i, j) += v * w;
                }
            }
        return out;
    }

    friend MatQ operator*(const Rat& s, const MatQ& m) {
        MatQ out = m;
        for (Rat& v : out.a_) v *= s;
        return out;
    }

private:
    static void check_same(const MatQ& a, const MatQ& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Clear denominators of a rational row; the scale factor is dropped (row
// span is unchanged), content is NOT removed here.
inline std::vector<Int> integer_row(const std::vector<Rat>& row) {
    Int lcm(1);
    for (const Rat& v : row)
        if (v != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Int> out(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] == 0) continue;
        Int num(row[i].get_num());
        Int den(row[i].get_den());
        out[i] = num * (lcm / den);
    }
    return out;
}

/*
 * Incremental fraction-free row echelon accumulator over Z.
 *
 * Rows are reduced against existing pivots by integer cross-multiplication,
 * divided by their content, and become new pivots when nonzero. Pivoting is
 * first-nonzero, processing is deterministic. rank() is the pivot count and
 * rows() is a row basis of everything pushed so far.
 */
class IntEchelon {
public:
    explicit IntEchelon(std::size_t cols) : cols_(cols) {}

    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] std::size_t rank() const { return rows_.size(); }
    [[nodiscard]] const std::vector<std::vector<Int>>& rows() const { return rows_; }

    // returns true when the row enlarged the span
    bool push(std::vector<Int> row) {
        if (row.size() != cols_) throw std::invalid_argument("echelon row width mismatch");
        for (std::size_t p = 0; p < rows_.size(); ++p) {
            const Int& rl = row[leads_[p]];
            if (rl == 0) continue;
            const Int& pl = rows_[p][leads_[p]];
            // row <- pl*row - rl*pivot ; the pivot row is zero left of its lead
            Int rlc = rl;  // row[lead] aliases into row, copy before overwrite
            for (std::size_t j = 0; j < leads_[p]; ++j) row[j] *= pl;
            for (std::size_t j = leads_[p]; j < cols_; ++j)
                row[j] = pl * row[j] - rlc * rows_[p][j];
            strip_content(row);
        }
        std::size_t lead = cols_;
        for (std::size_t j = 0; j < cols_; ++j)
            if (row[j] != 0) { lead = j; break; }
        if (lead == cols_) return false;
        if (row[lead] < 0)
            for (Int& v : row) v = -v;
        strip_content(row);
        // keep pivot list ordered by leading column
        std::size_t pos = 0;
        while (pos < leads_.size() && leads_[pos] < lead) ++pos;
        leads_.insert(leads_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
        return true;
    }

    bool push(const std::vector<Rat>& row) { return push(integer_row(row)); }

private:
    static void strip_content(std::vector<Int>& row) {
        Int g(0);
        for (const Int& v : row) {
            if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) return;
        }
        if (g <= 1) return;
        for (Int& v : row)
            if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }

    std::size_t cols_;
    std::vector<std::vector<Int>> rows_;
    std::vector<std::size_t> leads_;
};

inline long mat_rank(const MatQ& m) {
    IntEchelon ech(m.cols());
    std::vector<Rat> row(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
        ech.push(row);
    }
    return static_cast<long>(ech.rank());
}

// Exact determinant via Bareiss on the denominator-cleared matrix.
inline Rat mat_det(const MatQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Rat(1);
    std::vector<std::vector<Int>> a;
    Int scale(1);
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<Rat> row(n);
        Int lcm(1);
        for (std::size_t c = 0; c < n; ++c) {
            row[c] = m(r, c);
            if (row[c] != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), row[c].get_den_mpz_t());
        }
        for (auto& v : row) v *= Rat(lcm);
        std::vector<Int> irow(n);
        for (std::size_t c = 0; c < n; ++c) irow[c] = Int(row[c].get_num());
        a.push_back(std::move(irow));
        scale *= lcm;
    }
    int sign = 1;
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rat det(a[n - 1][n - 1] * sign);
    det /= Rat(scale);
    return det;
}

}  // namespace qpoincare

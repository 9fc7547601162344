#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpoincare/matrix.hpp"
#include "qpoincare/rational.hpp"

namespace qpoincare {

struct AxiomError : std::runtime_error {
    explicit AxiomError(std::string which)
        : std::runtime_error("axiom check failed: " + which), axiom(std::move(which)) {}
    std::string axiom;
};

/*
 * R is stored as the d^2 x d^2 matrix with entry R[(k,l),(i,j)] = R^{kl}_{ij},
 * meaning R(x_i (x) x_j) = sum_{k,l} R^{kl}_{ij} x_k (x) x_l. Pairs are
 * flattened 0-based as u*d + v.
 */

// (i) R_1 R_2 R_1 = R_2 R_1 R_2 on V^(x)3
inline bool check_braid(const MatQ& r, int d) {
    std::size_t dd = static_cast<std::size_t>(d);
    std::size_t d3 = dd * dd * dd;
    MatQ r1(d3, d3), r2(d3, d3);
    for (std::size_t p = 0; p < dd * dd; ++p)
        for (std::size_t q = 0; q < dd * dd; ++q) {
            const Rat& v = r(p, q);
            if (v == 0) continue;
            for (std::size_t c = 0; c < dd; ++c) {
                r1(p * dd + c, q * dd + c) = v;
                r2(c * dd * dd + p, c * dd * dd + q) = v;
            }
        }
    return r1 * (r2 * r1) == r2 * (r1 * r2);
}

// (ii) (R + 1)(R - q) = 0 on V^(x)2
inline bool check_hecke(const MatQ& r, const Rat& q, int d) {
    std::size_t n = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
    if (r.rows() != n || r.cols() != n) throw std::invalid_argument("R matrix size mismatch");
    MatQ id = MatQ::identity(n);
    return ((r + id) * (r - q * id)).is_zero();
}

/*
 * (iii) the half adjoint R#: V* (x) V -> V (x) V*, <R#(xi (x) v), w> =
 * <xi, R(v (x) w)> with xi paired against the first tensor factor. In matrix
 * form H[(l,j),(a,i)] = R[(a,l),(i,j)]; the classical flip makes H a
 * permutation matrix and the all-ones R makes it rank one, which is what
 * pins this index placement down.
 */
inline MatQ half_adjoint_matrix(const MatQ& r, int d) {
    std::size_t dd = static_cast<std::size_t>(d);
    MatQ h(dd * dd, dd * dd);
    for (std::size_t l = 0; l < dd; ++l)
        for (std::size_t j = 0; j < dd; ++j)
            for (std::size_t a = 0; a < dd; ++a)
                for (std::size_t i = 0; i < dd; ++i)
                    h(l * dd + j, a * dd + i) = r(a * dd + l, i * dd + j);
    return h;
}

inline bool check_half_adjoint(const MatQ& r, int d) {
    return mat_det(half_adjoint_matrix(r, d)) != 0;
}

class HeckeSymmetry {
public:
    static HeckeSymmetry checked(int d, Rat q, MatQ r) {
        validate_shape(d, q, r);
        if (!check_braid(r, d)) throw AxiomError("braid");
        if (!check_hecke(r, q, d)) throw AxiomError("hecke");
        if (!check_half_adjoint(r, d)) throw AxiomError("half-adjoint");
        return HeckeSymmetry(d, std::move(q), std::move(r));
    }

    // skips the axiom checks; for negative tests only
    static HeckeSymmetry unchecked(int d, Rat q, MatQ r) {
        validate_shape(d, q, r);
        return HeckeSymmetry(d, std::move(q), std::move(r));
    }

    [[nodiscard]] int dim() const { return d_; }
    [[nodiscard]] const Rat& q() const { return q_; }
    [[nodiscard]] const MatQ& matrix() const { return r_; }

    // nonzeros of column (i,j): the expansion of R(x_i (x) x_j)
    [[nodiscard]] const std::vector<std::pair<int, Rat>>& column(int ij) const {
        return cols_[static_cast<std::size_t>(ij)];
    }

    // nonzeros of row (k,l): all (i,j) with R^{kl}_{ij} != 0
    [[nodiscard]] const std::vector<std::pair<int, Rat>>& row(int kl) const {
        return rows_[static_cast<std::size_t>(kl)];
    }

private:
    HeckeSymmetry(int d, Rat q, MatQ r) : d_(d), q_(std::move(q)), r_(std::move(r)) {
        std::size_t n = static_cast<std::size_t>(d_) * static_cast<std::size_t>(d_);
        cols_.resize(n);
        rows_.resize(n);
        for (std::size_t row = 0; row < n; ++row)
            for (std::size_t col = 0; col < n; ++col)
                if (r_(row, col) != 0) {
                    cols_[col].emplace_back(static_cast<int>(row), r_(row, col));
                    rows_[row].emplace_back(static_cast<int>(col), r_(row, col));
                }
    }

    static void validate_shape(int d, const Rat& q, const MatQ& r) {
        if (d < 1) throw std::invalid_argument("dimension must be positive");
        std::size_t n = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
        if (r.rows() != n || r.cols() != n)
            throw std::invalid_argument("R must be d^2 x d^2");
        if (q == 0 || q == -1) throw std::invalid_argument("Hecke parameter must avoid 0 and -1");
    }

    int d_;
    Rat q_;
    MatQ r_;
    std::vector<std::vector<std::pair<int, Rat>>> cols_, rows_;
};

/*
 * The q0-deformation of the flip on a d-dimensional space, Hecke parameter
 * q0^2. At q0 = 1 this is the classical flip. Diagonal pairs stretch by
 * q0^2, pairs i < j swap with weight q0, pairs i > j pick up the extra
 * (q0^2 - 1) diagonal term. The three axiom checks run at construction.
 */
inline HeckeSymmetry fixture_standard(int d, const Rat& q0) {
    if (q0 <= 0) throw std::invalid_argument("deformation parameter must be positive");
    std::size_t dd = static_cast<std::size_t>(d);
    MatQ r(dd * dd, dd * dd);
    Rat q = q0 * q0;
    for (std::size_t i = 0; i < dd; ++i)
        for (std::size_t j = 0; j < dd; ++j) {
            std::size_t col = i * dd + j;
            if (i == j) {
                r(col, col) = q;
            } else {
                r(j * dd + i, col) = q0;
                if (i > j) r(col, col) = q - 1;
            }
        }
    return HeckeSymmetry::checked(d, q, std::move(r));
}

// Signed flip on a space of super dimension (m, n); Hecke parameter 1.
inline HeckeSymmetry fixture_super(int m, int n) {
    if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("need m + n >= 1");
    int d = m + n;
    std::size_t dd = static_cast<std::size_t>(d);
    MatQ r(dd * dd, dd * dd);
    for (std::size_t i = 0; i < dd; ++i)
        for (std::size_t j = 0; j < dd; ++j) {
            bool odd = static_cast<int>(i) >= m && static_cast<int>(j) >= m;
            r(j * dd + i, i * dd + j) = odd ? -1 : 1;
        }
    return HeckeSymmetry::checked(d, Rat(1), std::move(r));
}

/*
 * q0-deformation of the signed flip for super dimension (m, n), Hecke
 * parameter q0^2. Even diagonal pairs stretch by q0^2, odd ones sit in the
 * -1 eigenspace, swaps carry the parity sign, and lower pairs pick up the
 * usual (q0^2 - 1) tail. Passes all three axiom checks at construction.
 */
inline HeckeSymmetry fixture_super_deformed(int m, int n, const Rat& q0) {
    if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("need m + n >= 1");
    if (q0 <= 0) throw std::invalid_argument("deformation parameter must be positive");
    int d = m + n;
    std::size_t dd = static_cast<std::size_t>(d);
    MatQ r(dd * dd, dd * dd);
    Rat q = q0 * q0;
    auto odd = [m](std::size_t i) { return static_cast<int>(i) >= m; };
    for (std::size_t i = 0; i < dd; ++i)
        for (std::size_t j = 0; j < dd; ++j) {
            std::size_t col = i * dd + j;
            if (i == j) {
                r(col, col) = odd(i) ? Rat(-1) : q;
            } else {
                Rat sign = (odd(i) && odd(j)) ? Rat(-1) : Rat(1);
                r(j * dd + i, col) = sign * q0;
                if (i > j) r(col, col) = q - 1;
            }
        }
    return HeckeSymmetry::checked(d, q, std::move(r));
}

}  // namespace qpoincare

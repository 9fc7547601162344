#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qpoincare/matrix.hpp"
#include "qpoincare/partition.hpp"
#include "qpoincare/rational.hpp"
#include "qpoincare/series.hpp"

namespace qpoincare {

// Decomposition into simples: partition -> positive multiplicity,
// iterated in descending lexicographic order.
using SchurExpansion = std::map<Partition, long, PartitionDescLex>;

// Integer polynomial in the elementary symmetric functions. A monomial
// e_2 e_1^2 is keyed by its sorted index multiset [2,1,1].
using EMonomial = std::vector<int>;
using ElementaryPolynomial = std::map<EMonomial, Int>;

namespace detail {

/*
 * Backtracking count of Littlewood-Richardson skew tableaux of shape
 * gamma/lambda and content mu. Cells are visited in reverse reading order
 * (rows top to bottom, right to left inside a row), which is exactly the
 * order in which the lattice condition can be checked prefix by prefix.
 */
class LrCounter {
public:
    LrCounter(const Partition& lambda, const Partition& mu, const Partition& gamma)
        : lambda_(lambda), mu_(mu), gamma_(gamma) {}

    long count() {
        if (gamma_.weight() != lambda_.weight() + mu_.weight()) return 0;
        if (!gamma_.contains(lambda_)) return 0;
        for (int r = 1; r <= gamma_.length(); ++r)
            for (int c = gamma_.part(r); c > lambda_.part(r); --c)
                cells_.push_back({r, c});
        counts_.assign(static_cast<std::size_t>(mu_.length()) + 1, 0);
        fill_.clear();
        total_ = 0;
        place(0);
        return total_;
    }

private:
    struct Cell {
        int row, col;
    };

    void place(std::size_t idx) {
        if (idx == cells_.size()) {
            ++total_;
            return;
        }
        const Cell cell = cells_[idx];
        int hi = mu_.length();
        // weak increase along the row: bounded by the right neighbour
        if (cell.col < gamma_.part(cell.row)) hi = std::min(hi, fill_.at({cell.row, cell.col + 1}));
        for (int v = 1; v <= hi; ++v) {
            if (counts_[static_cast<std::size_t>(v)] >= mu_.part(v)) continue;
            // lattice word: after placing v, #v never exceeds #(v-1)
            if (v >= 2 && counts_[static_cast<std::size_t>(v)] + 1 >
                              counts_[static_cast<std::size_t>(v - 1)])
                continue;
            // strict increase down a column (only against filled cells)
            if (cell.row >= 2 && cell.col > lambda_.part(cell.row - 1)) {
                if (v <= fill_.at({cell.row - 1, cell.col})) continue;
            }
            fill_[{cell.row, cell.col}] = v;
            ++counts_[static_cast<std::size_t>(v)];
            place(idx + 1);
            --counts_[static_cast<std::size_t>(v)];
            fill_.erase({cell.row, cell.col});
        }
    }

    const Partition& lambda_;
    const Partition& mu_;
    const Partition& gamma_;
    std::vector<Cell> cells_;
    std::vector<int> counts_;
    std::map<std::pair<int, int>, int> fill_;
    long total_ = 0;
};

// all gamma containing lambda with |gamma| = |lambda| + extra, at most
// maxLen rows
inline void enumerate_super_partitions(const Partition& lambda, long extra, int maxLen,
                                       std::vector<int>& acc, int row, long remaining,
                                       std::vector<Partition>& out) {
    if (remaining == 0) {
        bool ok = true;
        for (int i = row; i <= lambda.length(); ++i)
            if (lambda.part(i) > 0) ok = false;
        if (ok) out.push_back(Partition(acc));
        return;
    }
    if (row > maxLen) return;
    long tail = 0;  // boxes lambda still requires below this row
    for (int i = row; i <= lambda.length(); ++i) tail += lambda.part(i);
    int upper = row == 1 ? static_cast<int>(lambda.part(1) + extra)
                         : acc[static_cast<std::size_t>(row - 2)];
    for (int p = std::max(1, lambda.part(row)); p <= std::min<long>(upper, remaining); ++p) {
        long tail_next = tail - lambda.part(row);
        if (remaining - p < tail_next) continue;
        acc.push_back(p);
        enumerate_super_partitions(lambda, extra, maxLen, acc, row + 1, remaining - p, out);
        acc.pop_back();
    }
}

}  // namespace detail

// Littlewood-Richardson coefficient c^gamma_{lambda,mu}
inline long lr_coeff(const Partition& lambda, const Partition& mu, const Partition& gamma) {
    if (mu.empty()) return gamma == lambda ? 1 : 0;
    detail::LrCounter counter(lambda, mu, gamma);
    return counter.count();
}

/*
 * I_lambda (x) I_mu = (+)_gamma I_gamma^{c^gamma_{lambda,mu}}, optionally
 * dropping the gamma outside Gamma_{m,n} (those simples are zero).
 */
inline SchurExpansion tensor_decompose(const Partition& lambda, const Partition& mu,
                                       std::optional<Birank> b = std::nullopt) {
    SchurExpansion out;
    std::vector<Partition> candidates;
    std::vector<int> acc;
    long w = lambda.weight() + mu.weight();
    if (w == 0) {
        candidates.push_back(Partition());
    } else {
        detail::enumerate_super_partitions(lambda, mu.weight(), lambda.length() + mu.length(),
                                           acc, 1, w, candidates);
    }
    for (const Partition& gamma : candidates) {
        if (b && !in_gamma(gamma, *b)) continue;
        long c = lr_coeff(lambda, mu, gamma);
        if (c > 0) out[gamma] = c;
    }
    return out;
}

// dual Jacobi-Trudi: s_lambda = det(e_{lambda'_i - i + j}), expanded as an
// integer polynomial in e_1, e_2, ...
inline ElementaryPolynomial schur_to_elementary(const Partition& lambda) {
    ElementaryPolynomial out;
    Partition conj = lambda.conjugate();
    int l = conj.length();
    if (l == 0) {
        out[{}] = 1;
        return out;
    }
    std::vector<int> perm(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        EMonomial mono;
        bool dead = false;
        for (int i = 1; i <= l && !dead; ++i) {
            int idx = conj.part(i) - i + (perm[static_cast<std::size_t>(i - 1)] + 1);
            if (idx < 0) dead = true;
            else if (idx > 0) mono.push_back(idx);
        }
        if (dead) continue;
        int inversions = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                    ++inversions;
        std::sort(mono.begin(), mono.end(), std::greater<int>());
        Int& coeff = out[mono];
        coeff += (inversions % 2 == 0) ? 1 : -1;
        if (coeff == 0) out.erase(mono);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// e_0..e_r of the given values, as coefficients of prod (1 + v_i t)
inline std::vector<Rat> elementary_values(const std::vector<Rat>& values) {
    std::vector<Rat> e(values.size() + 1, Rat(0));
    e[0] = 1;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t k = std::min(i + 1, values.size()); k >= 1; --k)
            e[k] += values[i] * e[k - 1];
    return e;
}

// h_0..h_maxIndex of the given values, from 1 / prod (1 - v_i t)
inline std::vector<Rat> complete_homogeneous_values(const std::vector<Rat>& values, int maxIndex) {
    Polynomial denom = Polynomial::constant(1);
    for (const Rat& v : values) denom = denom * Polynomial({Rat(1), -v});
    TruncatedSeries h = expand_ratio(Polynomial::constant(1), denom, maxIndex);
    return h.coeffs();
}

inline Rat elementary_eval(const ElementaryPolynomial& p, const std::vector<Rat>& evalues) {
    Rat acc(0);
    for (const auto& [mono, coeff] : p) {
        Rat term(coeff);
        for (int idx : mono) {
            if (idx >= static_cast<int>(evalues.size()))
                throw std::invalid_argument("missing elementary value e_" + std::to_string(idx));
            term *= evalues[static_cast<std::size_t>(idx)];
        }
        acc += term;
    }
    return acc;
}

// s_lambda(v_1..v_r) via the Jacobi-Trudi determinant in the h_k
inline Rat schur_eval(const Partition& lambda, const std::vector<Rat>& values) {
    int l = lambda.length();
    int r = static_cast<int>(values.size());
    if (l == 0) return Rat(1);
    if (l > r) return Rat(0);
    int maxIndex = lambda.part(1) + l - 1;
    std::vector<Rat> h = complete_homogeneous_values(values, maxIndex);
    MatQ jt(static_cast<std::size_t>(l), static_cast<std::size_t>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            int idx = lambda.part(i) - i + j;
            if (idx >= 0) jt(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                h[static_cast<std::size_t>(idx)];
        }
    return mat_det(jt);
}

/*
 * dim I_lambda from the sequence dim Lambda_0, dim Lambda_1, ...: the dual
 * Jacobi-Trudi determinant with e_k specialized to lambdaDims[k]. Entries
 * beyond the supplied sequence are an error, index 0 must carry 1.
 */
inline Rat dim_simple(const Partition& lambda, const std::vector<Rat>& lambdaDims) {
    if (lambdaDims.empty() || lambdaDims[0] != 1)
        throw std::invalid_argument("lambdaDims[0] must be 1 (the dimension of Lambda_0)");
    Partition conj = lambda.conjugate();
    int l = conj.length();
    if (l == 0) return Rat(1);
    int maxIndex = 0;
    for (int i = 1; i <= l; ++i) maxIndex = std::max(maxIndex, conj.part(i) - i + l);
    if (maxIndex >= static_cast<int>(lambdaDims.size()))
        throw std::invalid_argument("lambdaDims too short: need index " + std::to_string(maxIndex));
    MatQ jt(static_cast<std::size_t>(l), static_cast<std::size_t>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            int idx = conj.part(i) - i + j;
            if (idx >= 0) jt(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                lambdaDims[static_cast<std::size_t>(idx)];
        }
    return mat_det(jt);
}

inline Rat dim_simple(const Partition& lambda, const std::vector<Int>& lambdaDims) {
    std::vector<Rat> dims(lambdaDims.size());
    for (std::size_t i = 0; i < lambdaDims.size(); ++i) dims[i] = Rat(lambdaDims[i]);
    return dim_simple(lambda, dims);
}

// dim I_lambda = prod_{i<=m, j<=n} (x_i + y_j) * s_alpha(x) * s_{beta'}(y)
// for splitting lambda
inline Rat dim_splitting(const Partition& lambda, const std::vector<Rat>& x,
                         const std::vector<Rat>& y) {
    Birank b{static_cast<int>(x.size()), static_cast<int>(y.size())};
    SplitDecomposition sd = split_decompose(lambda, b);  // rejects non-splitting input
    Rat c(1);
    for (const Rat& xi : x)
        for (const Rat& yj : y) c *= xi + yj;
    return c * schur_eval(sd.alpha, x) * schur_eval(sd.beta.conjugate(), y);
}

/*
 * The rectangle-complement identity s_{(k^{n-1})}(y) = s_{(k)}(y^{-1}) *
 * (prod y_j)^k, with (k^{n-1}) = n-1 rows of length k. (The printed source
 * shows the row/length roles swapped, which already fails at two rows of
 * one column; this is the form its own dimension computation uses, and the
 * SSYT oracle confirms it.)
 */
inline bool hook_schur_identity_check(int k, int n, const std::vector<Rat>& y) {
    if (k <= 0 || n <= 0) throw std::invalid_argument("k and n must be positive");
    if (static_cast<int>(y.size()) != n) throw std::invalid_argument("need exactly n values");
    std::vector<Rat> yinv;
    Rat prod(1);
    for (const Rat& v : y) {
        if (v == 0) throw std::invalid_argument("values must be nonzero");
        yinv.push_back(Rat(1) / v);
        prod *= v;
    }
    std::vector<int> rect(static_cast<std::size_t>(n - 1), k);
    Rat lhs = schur_eval(Partition(std::move(rect)), y);
    Rat rhs = schur_eval(Partition({k}), yinv) * rat_pow(prod, k);
    return lhs == rhs;
}

}  // namespace qpoincare

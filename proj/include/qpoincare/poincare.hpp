#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qpoincare/matrix.hpp"
#include "qpoincare/rational.hpp"
#include "qpoincare/series.hpp"
#include "qpoincare/symmetry.hpp"

namespace qpoincare {

struct Limits {
    int strand_cap = 8;
    long dim_budget = 20000;  // largest d^n the rank pipeline will touch
};

namespace detail {

using SparseRow = std::vector<std::pair<long, Rat>>;

// one row of R_i acting on V^(x)k (positions 1-based, row-major index,
// first factor most significant)
inline SparseRow r_gen_row(const HeckeSymmetry& sym, int gen, int k, long idx) {
    const long d = sym.dim();
    long stride = 1;
    for (int p = 0; p < k - gen - 1; ++p) stride *= d;
    long rest = idx / stride;
    long ldig = rest % d;
    long kdig = (rest / d) % d;
    long base = idx - (kdig * d + ldig) * stride;
    SparseRow out;
    for (const auto& [colpair, v] : sym.row(static_cast<int>(kdig * d + ldig)))
        out.emplace_back(base + colpair * stride, v);
    return out;
}

/*
 * sum over the coset representatives: G_k = sum_{i=0}^{k-1} z^i
 * R_{k-1} R_{k-2} ... R_{k-i} as a sparse row matrix on V^(x)k. Together
 * with the recursion below this realizes sum_{w in S_k} z^{l(w)} T_w =
 * (sum_{w in S_{k-1}} z^{l(w)} T_w) * G_k.
 */
inline std::vector<SparseRow> coset_factor(const HeckeSymmetry& sym, int k, const Rat& z,
                                           long dim) {
    std::vector<std::map<long, Rat>> acc(static_cast<std::size_t>(dim));
    std::vector<SparseRow> term(static_cast<std::size_t>(dim));
    for (long r = 0; r < dim; ++r) {
        term[static_cast<std::size_t>(r)] = {{r, Rat(1)}};
        acc[static_cast<std::size_t>(r)][r] += 1;
    }
    Rat zp(1);
    for (int i = 1; i <= k - 1; ++i) {
        zp *= z;
        int gen = k - i;
        std::vector<SparseRow> next(static_cast<std::size_t>(dim));
        for (long r = 0; r < dim; ++r) {
            std::map<long, Rat> row;
            for (const auto& [c, v] : term[static_cast<std::size_t>(r)])
                for (const auto& [c2, v2] : r_gen_row(sym, gen, k, c)) {
                    Rat& slot = row[c2];
                    slot += v * v2;
                    if (slot == 0) row.erase(c2);
                }
            SparseRow packed(row.begin(), row.end());
            for (const auto& [c, v] : packed) {
                Rat& slot = acc[static_cast<std::size_t>(r)][c];
                slot += zp * v;
                if (slot == 0) acc[static_cast<std::size_t>(r)].erase(c);
            }
            next[static_cast<std::size_t>(r)] = std::move(packed);
        }
        term = std::move(next);
    }
    std::vector<SparseRow> out(static_cast<std::size_t>(dim));
    for (long r = 0; r < dim; ++r)
        out[static_cast<std::size_t>(r)] =
            SparseRow(acc[static_cast<std::size_t>(r)].begin(), acc[static_cast<std::size_t>(r)].end());
    return out;
}

/*
 * Ranks of sum_{w in S_n} z^{l(w)} T_w on V^(x)n for n = 1..N, computed by
 * carrying a row basis of the partial product across strand counts. The
 * full d^n x d^n matrices never materialize: if B spans the rows of the
 * product so far (with full column-rank cofactor), then B (x) id followed
 * by the coset factor spans the next one, and re-reducing keeps the basis
 * small. Ranks match the direct act_on_tensor route (tested).
 */
inline std::vector<long> idempotent_ranks(const HeckeSymmetry& sym, int N, const Rat& z,
                                          const Limits& lim) {
    if (N < 0) throw std::invalid_argument("negative truncation order");
    if (N > lim.strand_cap) throw std::invalid_argument("strand cap exceeded");
    const long d = sym.dim();
    long dim = 1;
    for (int i = 1; i <= N; ++i) {
        dim *= d;
        if (dim > lim.dim_budget) throw std::invalid_argument("tensor dimension budget exceeded");
    }
    std::vector<long> ranks(static_cast<std::size_t>(N) + 1, 0);
    ranks[0] = 1;
    if (N == 0) return ranks;
    std::vector<std::vector<Int>> basis;  // row basis on V^(x)(k-1)
    for (long c = 0; c < d; ++c) {
        std::vector<Int> e(static_cast<std::size_t>(d), 0);
        e[static_cast<std::size_t>(c)] = 1;
        basis.push_back(std::move(e));
    }
    ranks[1] = d;
    long prev_dim = d;
    for (int k = 2; k <= N; ++k) {
        long cur_dim = prev_dim * d;
        if (basis.empty()) break;  // once zero, every later component is zero
        auto factor = coset_factor(sym, k, z, cur_dim);
        IntEchelon ech(static_cast<std::size_t>(cur_dim));
        std::vector<Rat> acc(static_cast<std::size_t>(cur_dim));
        for (const auto& brow : basis)
            for (long c = 0; c < d; ++c) {
                std::fill(acc.begin(), acc.end(), Rat(0));
                for (long j = 0; j < prev_dim; ++j) {
                    const Int& bj = brow[static_cast<std::size_t>(j)];
                    if (bj == 0) continue;
                    Rat bjr(bj);
                    for (const auto& [col, v] : factor[static_cast<std::size_t>(j * d + c)])
                        acc[static_cast<std::size_t>(col)] += bjr * v;
                }
                ech.push(acc);
            }
        ranks[static_cast<std::size_t>(k)] = static_cast<long>(ech.rank());
        basis = ech.rows();
        prev_dim = cur_dim;
    }
    return ranks;
}

}  // namespace detail

// dim Lambda_n for n = 0..N: ranks of the antisymmetrizers y_n on V^(x)n
inline std::vector<Int> dims_lambda(const HeckeSymmetry& sym, int N, const Limits& lim = {}) {
    auto ranks = detail::idempotent_ranks(sym, N, Rat(-1) / sym.q(), lim);
    return {ranks.begin(), ranks.end()};
}

// dim S_n for n = 0..N: ranks of the symmetrizers x_n on V^(x)n
inline std::vector<Int> dims_s(const HeckeSymmetry& sym, int N, const Limits& lim = {}) {
    auto ranks = detail::idempotent_ranks(sym, N, Rat(1), lim);
    return {ranks.begin(), ranks.end()};
}

inline TruncatedSeries dims_to_series(const std::vector<Int>& dims) {
    std::vector<Rat> c(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i) c[i] = Rat(dims[i]);
    return TruncatedSeries(std::move(c));
}

inline RationalFunction poincare_lambda(const HeckeSymmetry& sym, int N, int mMax = 4,
                                        int nMax = 4, const Limits& lim = {}) {
    return pade_reconstruct(dims_to_series(dims_lambda(sym, N, lim)), mMax, nMax);
}

inline RationalFunction poincare_s(const HeckeSymmetry& sym, int N, int mMax = 4, int nMax = 4,
                                   const Limits& lim = {}) {
    return pade_reconstruct(dims_to_series(dims_s(sym, N, lim)), mMax, nMax);
}

}  // namespace qpoincare

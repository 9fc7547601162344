#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qpoincare/matrix.hpp"
#include "qpoincare/rational.hpp"
#include "qpoincare/symmetry.hpp"

namespace qpoincare {

// Permutation in one-line notation, 0-based values.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
    Perm w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    return w;
}

inline int perm_length(const Perm& w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

// w * s_i swaps the entries at positions i, i+1 (generators are 1-based)
inline Perm perm_mul_gen(Perm w, int i) {
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
    return w;
}

/*
 * Canonical reduced word: repeatedly kill the leftmost descent. Returns
 * (i_1..i_l) with w = s_{i_1} ... s_{i_l}; every algorithm downstream only
 * relies on the word being reduced, and well-definedness across different
 * reduced words is covered by tests.
 */
inline std::vector<int> reduced_word(Perm w) {
    std::vector<int> rev;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                rev.push_back(static_cast<int>(i) + 1);
                moved = true;
                break;
            }
    }
    return {rev.rbegin(), rev.rend()};
}

// Hecke parameter; [n]_q vanishes for no n when q avoids 0 and -1 over Q
// (q = 1 is allowed, with the limit convention [n]_1 = n).
struct QContext {
    explicit QContext(Rat value) : q(std::move(value)) {
        if (q == 0 || q == -1) throw std::invalid_argument("q must avoid 0 and -1");
    }
    Rat q;
};

inline Rat q_int(long n, const QContext& ctx) {
    if (n < 0) throw std::invalid_argument("q-integer of a negative number");
    if (ctx.q == 1) return Rat(n);
    return (rat_pow(ctx.q, n) - 1) / (ctx.q - 1);
}

inline Rat q_factorial(long n, const QContext& ctx) {
    Rat acc(1);
    for (long i = 1; i <= n; ++i) acc *= q_int(i, ctx);
    return acc;
}

/*
 * Element of the Hecke algebra H_{q,n} on the T_w basis: a strand count
 * plus a map permutation -> coefficient (zero coefficients never stored).
 */
class HeckeElement {
public:
    explicit HeckeElement(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("strand count must be positive");
    }

    static HeckeElement unit(int n) { return basis(n, identity_perm(n)); }

    static HeckeElement basis(int n, Perm w) {
        HeckeElement h(n);
        if (static_cast<int>(w.size()) != n) throw std::invalid_argument("permutation size mismatch");
        h.terms_[std::move(w)] = 1;
        return h;
    }

    [[nodiscard]] int strands() const { return n_; }
    [[nodiscard]] const std::map<Perm, Rat>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] Rat coeff(const Perm& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Perm& w, const Rat& c) {
        if (c == 0) return;
        Rat& slot = terms_[w];
        slot += c;
        if (slot == 0) terms_.erase(w);
    }

    HeckeElement& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    friend HeckeElement operator*(const Rat& s, HeckeElement h) {
        h *= s;
        return h;
    }

    friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("strand count mismatch");
        HeckeElement out = a;
        for (const auto& [w, c] : b.terms_) out.add_term(w, c);
        return out;
    }

    friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("strand count mismatch");
        HeckeElement out = a;
        for (const auto& [w, c] : b.terms_) out.add_term(w, -c);
        return out;
    }

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) = default;

    // right multiplication by the generator T_i
    [[nodiscard]] HeckeElement times_gen(int i, const QContext& ctx) const {
        if (i < 1 || i >= n_) throw std::invalid_argument("generator index out of range");
        HeckeElement out(n_);
        for (const auto& [w, c] : terms_) {
            std::size_t a = static_cast<std::size_t>(i - 1);
            if (w[a] < w[a + 1]) {
                out.add_term(perm_mul_gen(w, i), c);
            } else {
                out.add_term(w, (ctx.q - 1) * c);
                out.add_term(perm_mul_gen(w, i), ctx.q * c);
            }
        }
        return out;
    }

private:
    int n_;
    std::map<Perm, Rat> terms_;
};

// T_w T_v = T_{wv} when lengths add, else resolved generator by generator
inline HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b, const QContext& ctx) {
    if (a.strands() != b.strands()) throw std::invalid_argument("strand count mismatch");
    HeckeElement out(a.strands());
    for (const auto& [v, cv] : b.terms()) {
        HeckeElement part = a;
        for (int i : reduced_word(v)) part = part.times_gen(i, ctx);
        for (const auto& [w, c] : part.terms()) out.add_term(w, cv * c);
    }
    return out;
}

namespace detail {

inline std::vector<Perm> all_perms(int n) {
    Perm w = identity_perm(n);
    std::vector<Perm> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace detail

/*
 * q-symmetrizer: x_n = (1/[n]_q!) sum_w T_w, the idempotent with
 * x_n T_i = q x_n cutting out S_n. (The printed source shows the same
 * signed sum as y_n here; that cannot satisfy the S_n eigenvalue relation,
 * so the unsigned sum is used and the eigen-relations are enforced by
 * tests.)
 */
inline HeckeElement symmetrizer_x(int n, const QContext& ctx) {
    HeckeElement out(n);
    Rat norm = Rat(1) / q_factorial(n, ctx);
    for (Perm& w : detail::all_perms(n)) out.add_term(std::move(w), norm);
    return out;
}

// q-antisymmetrizer: y_n = (1/[n]_{1/q}!) sum_w (-q)^{-l(w)} T_w, with
// y_n T_i = -y_n, cutting out Lambda_n
inline HeckeElement antisymmetrizer_y(int n, const QContext& ctx) {
    HeckeElement out(n);
    QContext inv_ctx(Rat(1) / ctx.q);
    Rat norm = Rat(1) / q_factorial(n, inv_ctx);
    Rat z = Rat(-1) / ctx.q;
    for (Perm& w : detail::all_perms(n)) {
        Rat weight = norm * rat_pow(z, perm_length(w));
        out.add_term(std::move(w), weight);
    }
    return out;
}

namespace detail {

// apply R at strand position i (1-based) to a sparse vector on V^(x)n
inline std::map<long, Rat> apply_r(const std::map<long, Rat>& vec, const HeckeSymmetry& sym,
                                   int i, int n) {
    const long d = sym.dim();
    long stride = 1;
    for (int p = 0; p < n - i - 1; ++p) stride *= d;  // weight of position i+1
    std::map<long, Rat> out;
    for (const auto& [idx, c] : vec) {
        long rest = idx / stride;
        long bdig = rest % d;
        long adig = (rest / d) % d;
        long base = idx - (adig * d + bdig) * stride;
        int col = static_cast<int>(adig * d + bdig);
        for (const auto& [rowpair, rv] : sym.column(col)) {
            long nidx = base + rowpair * stride;
            Rat& slot = out[nidx];
            slot += c * rv;
            if (slot == 0) out.erase(nidx);
        }
    }
    return out;
}

}  // namespace detail

/*
 * Matrix of a Hecke algebra element on V^(x)n through T_i -> R_i =
 * id^(i-1) (x) R (x) id^(n-i-1). The context carries q and must match the
 * symmetry's Hecke parameter.
 */
inline MatQ act_on_tensor(const HeckeElement& h, const QContext& ctx, const HeckeSymmetry& sym) {
    if (ctx.q != sym.q())
        throw std::invalid_argument("context q does not match the symmetry's Hecke parameter");
    const int n = h.strands();
    const int d = sym.dim();
    long dim = 1;
    for (int i = 0; i < n; ++i) {
        dim *= d;
        if (dim > 200000) throw std::invalid_argument("tensor power too large");
    }
    MatQ out(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    for (const auto& [w, c] : h.terms()) {
        std::vector<int> word = reduced_word(w);
        for (long col = 0; col < dim; ++col) {
            std::map<long, Rat> vec{{col, Rat(1)}};
            for (auto it = word.rbegin(); it != word.rend(); ++it)
                vec = detail::apply_r(vec, sym, *it, n);
            for (const auto& [row, v] : vec)
                out(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) += c * v;
        }
    }
    return out;
}

}  // namespace qpoincare

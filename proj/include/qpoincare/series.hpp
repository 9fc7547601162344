#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpoincare/partition.hpp"
#include "qpoincare/polynomial.hpp"
#include "qpoincare/rational.hpp"

namespace qpoincare {

struct PadeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact power series truncated at a fixed order: coefficients c_0..c_N.
class TruncatedSeries {
public:
    TruncatedSeries() : c_(1, Rat(0)) {}
    explicit TruncatedSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("series needs at least the constant term");
    }
    TruncatedSeries(std::initializer_list<Rat> coeffs) : TruncatedSeries(std::vector<Rat>(coeffs)) {}

    [[nodiscard]] int order() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] const std::vector<Rat>& coeffs() const { return c_; }
    [[nodiscard]] Rat at(int i) const {
        return (i >= 0 && i <= order()) ? c_[static_cast<std::size_t>(i)] : Rat(0);
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
    std::vector<Rat> c_;
};

inline TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<Rat> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = a.at(i) + b.at(i);
    return TruncatedSeries(std::move(out));
}

inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<Rat> out(static_cast<std::size_t>(n) + 1, Rat(0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) out[static_cast<std::size_t>(i + j)] += a.at(i) * b.at(j);
    return TruncatedSeries(std::move(out));
}

inline TruncatedSeries series_invert(const TruncatedSeries& a) {
    if (a.at(0) == 0) throw std::domain_error("series inversion needs nonzero constant term");
    int n = a.order();
    std::vector<Rat> out(static_cast<std::size_t>(n) + 1, Rat(0));
    Rat inv0 = Rat(1) / a.at(0);
    out[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        Rat acc(0);
        for (int i = 1; i <= k; ++i) acc += a.at(i) * out[static_cast<std::size_t>(k - i)];
        out[static_cast<std::size_t>(k)] = -inv0 * acc;
    }
    return TruncatedSeries(std::move(out));
}

// Taylor coefficients of num/den to the given order; den(0) != 0.
inline TruncatedSeries expand_ratio(const Polynomial& num, const Polynomial& den, int order) {
    if (order < 0) throw std::invalid_argument("negative expansion order");
    if (den.at(0) == 0) throw std::domain_error("expansion at a denominator zero");
    std::vector<Rat> n(static_cast<std::size_t>(order) + 1), d(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        n[static_cast<std::size_t>(i)] = num.at(i);
        d[static_cast<std::size_t>(i)] = den.at(i);
    }
    return series_mul(TruncatedSeries(std::move(n)), series_invert(TruncatedSeries(std::move(d))));
}

/*
 * P(t)/Q(t) with P, Q coprime and P(0) = Q(0) = 1 (the shape every Poincare
 * series here has). make_rational_function reduces and normalizes; it rejects
 * pairs whose value at 0 is not 1.
 */
struct RationalFunction {
    Polynomial num = Polynomial::constant(1);
    Polynomial den = Polynomial::constant(1);
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

inline RationalFunction make_rational_function(Polynomial num, Polynomial den) {
    if (num.at(0) == 0 || den.at(0) == 0)
        throw std::invalid_argument("rational function needs nonzero constant terms");
    if (num.at(0) != den.at(0))
        throw std::invalid_argument("rational function must have value 1 at t = 0");
    Polynomial g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = poly_divexact(num, g);
        den = poly_divexact(den, g);
    }
    Rat s = Rat(1) / den.at(0);
    return RationalFunction{s * num, s * den};
}

inline TruncatedSeries expand(const RationalFunction& r, int order) {
    return expand_ratio(r.num, r.den, order);
}

inline Birank birank(const RationalFunction& r) {
    return Birank{r.num.degree(), r.den.degree()};
}

namespace detail {

// Exact Gaussian elimination, first-nonzero pivoting, free variables set to
// zero; nullopt when the system is inconsistent.
inline std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> aug,
                                                    int unknowns) {
    const int rows = static_cast<int>(aug.size());
    std::vector<int> pivot_col(static_cast<std::size_t>(rows), -1);
    int r = 0;
    for (int c = 0; c < unknowns && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(aug[static_cast<std::size_t>(r)], aug[static_cast<std::size_t>(pr)]);
        Rat inv = Rat(1) / aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (auto& v : aug[static_cast<std::size_t>(r)]) v *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            Rat f = aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (f == 0) continue;
            for (int j = c; j <= unknowns; ++j)
                aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        pivot_col[static_cast<std::size_t>(r)] = c;
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(unknowns)] != 0)
            return std::nullopt;
    std::vector<Rat> x(static_cast<std::size_t>(unknowns), Rat(0));
    for (int i = 0; i < r; ++i)
        x[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] =
            aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(unknowns)];
    return x;
}

}  // namespace detail

/*
 * Minimal-degree rational reconstruction: the first (m, n) within the bounds,
 * ordered by m+n then by n, whose P/Q re-expands to every supplied
 * coefficient. Throws PadeError when nothing in range fits.
 */
inline RationalFunction pade_reconstruct(const TruncatedSeries& s, int mMax, int nMax) {
    if (mMax < 0 || nMax < 0) throw std::invalid_argument("negative Pade bounds");
    if (s.at(0) != 1)
        throw std::invalid_argument("Pade reconstruction here expects constant term 1");
    int order = s.order();
    for (int total = 0; total <= mMax + nMax; ++total) {
        for (int n = std::max(0, total - mMax); n <= std::min(nMax, total); ++n) {
            int m = total - n;
            if (m + n > order) continue;
            // q_0 = 1 and sum_{i=0..n} q_i c_{j-i} = 0 for j = m+1..m+n
            std::vector<std::vector<Rat>> aug(
                static_cast<std::size_t>(n),
                std::vector<Rat>(static_cast<std::size_t>(n) + 1, Rat(0)));
            for (int e = 0; e < n; ++e) {
                int j = m + 1 + e;
                for (int i = 1; i <= n; ++i)
                    aug[static_cast<std::size_t>(e)][static_cast<std::size_t>(i - 1)] = s.at(j - i);
                aug[static_cast<std::size_t>(e)][static_cast<std::size_t>(n)] = -s.at(j);
            }
            auto solution = detail::solve_linear(std::move(aug), n);
            if (!solution) continue;
            std::vector<Rat> qc(static_cast<std::size_t>(n) + 1, Rat(0));
            qc[0] = 1;
            for (int i = 1; i <= n; ++i)
                qc[static_cast<std::size_t>(i)] = (*solution)[static_cast<std::size_t>(i - 1)];
            Polynomial Q(std::move(qc));
            std::vector<Rat> pc(static_cast<std::size_t>(m) + 1, Rat(0));
            for (int j = 0; j <= m; ++j) {
                Rat acc(0);
                for (int i = 0; i <= std::min(j, Q.degree()); ++i) acc += Q.at(i) * s.at(j - i);
                pc[static_cast<std::size_t>(j)] = acc;
            }
            Polynomial P(std::move(pc));
            if (P.at(0) != 1) continue;
            RationalFunction cand = make_rational_function(P, Q);
            if (expand(cand, order).coeffs() == s.coeffs()) return cand;
        }
    }
    throw PadeError("no rational function within degree bounds");
}

// a_i = a_{m-i} on the stored coefficients
inline bool is_reciprocal(const Polynomial& p) {
    int m = p.degree();
    if (m < 0) return false;
    for (int i = 0; i <= m; ++i)
        if (p.at(i) != p.at(m - i)) return false;
    return true;
}

// With Q(t) = sum (-1)^i b_i t^i (the 1 - b_1 t + ... + b_n (-t)^n convention),
// checks b_i = b_{n-i}.
inline bool is_skew_reciprocal(const Polynomial& q) {
    int n = q.degree();
    if (n < 0) return false;
    for (int i = 0; i <= n; ++i) {
        Rat bi = (i % 2 == 0) ? q.at(i) : -q.at(i);
        Rat bni = ((n - i) % 2 == 0) ? q.at(n - i) : -q.at(n - i);
        if (bi != bni) return false;
    }
    return true;
}

namespace detail {

inline int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

enum class Place { MinusInf, Zero, PlusInf };

inline int sign_at(const Polynomial& p, Place where) {
    if (p.is_zero()) return 0;
    switch (where) {
        case Place::Zero:
            return sign_of(p.at(0));
        case Place::PlusInf:
            return sign_of(p.leading());
        case Place::MinusInf:
            return (p.degree() % 2 == 0) ? sign_of(p.leading()) : -sign_of(p.leading());
    }
    return 0;
}

inline std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain{p, p.derivative()};
    while (chain.back().degree() > 0) {
        auto [q, r] = poly_divmod(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;  // cannot happen for squarefree input
        chain.push_back(Rat(-1) * r);
    }
    return chain;
}

inline int sign_variations(const std::vector<Polynomial>& chain, Place where) {
    int count = 0, prev = 0;
    for (const Polynomial& p : chain) {
        int s = sign_at(p, where);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// distinct real roots in (-inf, 0) and (0, +inf); requires p(0) != 0
inline std::pair<int, int> count_signed_roots(const Polynomial& p) {
    Polynomial g = poly_gcd(p, p.derivative());
    Polynomial sf = g.degree() > 0 ? poly_divexact(p, g) : p;
    if (sf.degree() <= 0) return {0, 0};
    auto chain = sturm_chain(sf);
    int vminus = sign_variations(chain, Place::MinusInf);
    int vzero = sign_variations(chain, Place::Zero);
    int vplus = sign_variations(chain, Place::PlusInf);
    return {vminus - vzero, vzero - vplus};
}

inline int squarefree_degree(const Polynomial& p) {
    Polynomial g = poly_gcd(p, p.derivative());
    return g.degree() > 0 ? p.degree() - g.degree() : p.degree();
}

}  // namespace detail

// every root real and negative, exact Sturm decision
inline bool roots_all_negative(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no root signs");
    if (p.at(0) == 0) return false;  // root at 0
    if (p.degree() == 0) return true;
    auto [neg, pos] = detail::count_signed_roots(p);
    (void)pos;
    return neg == detail::squarefree_degree(p);
}

inline bool roots_all_positive(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no root signs");
    if (p.at(0) == 0) return false;
    if (p.degree() == 0) return true;
    auto [neg, pos] = detail::count_signed_roots(p);
    (void)neg;
    return pos == detail::squarefree_degree(p);
}

// P_Lambda(t) * P_S(-t) = 1 up to the given order
inline bool duality_check(const RationalFunction& pLambda, const RationalFunction& pS, int order) {
    TruncatedSeries a = expand(pLambda, order);
    TruncatedSeries b = expand(pS, order);
    std::vector<Rat> flipped(b.coeffs());
    for (std::size_t i = 1; i < flipped.size(); i += 2) flipped[i] = -flipped[i];
    TruncatedSeries prod = series_mul(a, TruncatedSeries(std::move(flipped)));
    for (int i = 0; i <= prod.order(); ++i)
        if (prod.at(i) != (i == 0 ? Rat(1) : Rat(0))) return false;
    return true;
}

}  // namespace qpoincare

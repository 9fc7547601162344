#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qpoincare/hecke.hpp"
#include "qpoincare/partition.hpp"
#include "qpoincare/poincare.hpp"
#include "qpoincare/polynomial.hpp"
#include "qpoincare/rational.hpp"
#include "qpoincare/series.hpp"
#include "qpoincare/symfunc.hpp"
#include "qpoincare/symmetry.hpp"

namespace qpoincare {

// One machine-checked identity: pass holds exactly when the recorded sides
// agree verbatim.
struct IdentityReport {
    std::string identity;
    std::string params;
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
    bool pass = false;
};

namespace detail {

inline std::string render_expansion(const SchurExpansion& e) {
    std::string out;
    for (const auto& [p, mult] : e) {
        if (!out.empty()) out += "  ";
        out += p.to_string() + ":" + std::to_string(mult);
    }
    return out.empty() ? "(empty)" : out;
}

inline std::string render_values(const std::vector<Rat>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_to_string(v[i]);
    }
    return out + "]";
}

}  // namespace detail

/*
 * The tensor decomposition I_{((n+1)^m, n^{k+1})} (x) I_{(1^k)}: after the
 * Gamma_{m,n} filter exactly the min(k,m)+1 terms
 * ((n+2)^l, (n+1)^{m-l}, n^{k+1}, 1^{k-l}) survive, each once.
 */
inline IdentityReport verify_tensor_lr(Birank b, int k) {
    if (b.m < 1 || b.n < 1 || k < 0) throw std::invalid_argument("need m, n >= 1 and k >= 0");
    std::vector<int> lparts(static_cast<std::size_t>(b.m), b.n + 1);
    lparts.insert(lparts.end(), static_cast<std::size_t>(k + 1), b.n);
    Partition lambda(std::move(lparts));
    Partition mu(std::vector<int>(static_cast<std::size_t>(k), 1));
    SchurExpansion actual = tensor_decompose(lambda, mu, b);

    SchurExpansion expected;
    int lmax = std::min(k, b.m);
    for (int l = 0; l <= lmax; ++l) {
        std::vector<int> parts;
        parts.insert(parts.end(), static_cast<std::size_t>(l), b.n + 2);
        parts.insert(parts.end(), static_cast<std::size_t>(b.m - l), b.n + 1);
        parts.insert(parts.end(), static_cast<std::size_t>(k + 1), b.n);
        parts.insert(parts.end(), static_cast<std::size_t>(k - l), 1);
        expected[Partition(std::move(parts))] = 1;
    }

    IdentityReport rep;
    rep.identity = "tensor_lr";
    rep.params = "m=" + std::to_string(b.m) + " n=" + std::to_string(b.n) +
                 " k=" + std::to_string(k);
    rep.lhs = {detail::render_expansion(actual),
               "terms=" + std::to_string(actual.size())};
    rep.rhs = {detail::render_expansion(expected),
               "terms=" + std::to_string(lmax + 1)};
    rep.pass = rep.lhs == rep.rhs;
    return rep;
}

/*
 * Dual-side dimension count: C lambda_k a_m b_n^{k+1} equals the sum of the
 * splitting dimensions over the partitions ((n+1)^{m-l}, n^{2l+1},
 * (n-1)^{k-l}), with a_i = e_i(x), b_j = e_j(y), C = prod (x_i + y_j) and
 * lambda_k the k-th coefficient of prod(1 + x_i t) / prod(1 - y_j t).
 *
 * For k >= 1 this equality holds exactly when the root multisets are
 * closed under inversion (the right side always equals the analogous
 * expression with lambda_k taken from the inverted-root series; comparing
 * the two is what forces reciprocity). Run it on inversion-closed samples
 * for the positive direction and on anything else as a negative control.
 */
inline IdentityReport verify_dual_dims(Birank b, int k, const std::vector<Rat>& x,
                                       const std::vector<Rat>& y) {
    if (static_cast<int>(x.size()) != b.m || static_cast<int>(y.size()) != b.n)
        throw std::invalid_argument("sample sizes must match the birank");
    if (b.m < 1 || b.n < 1 || k < 0) throw std::invalid_argument("need m, n >= 1 and k >= 0");

    std::vector<Rat> a = elementary_values(x);
    std::vector<Rat> bb = elementary_values(y);
    Rat c(1);
    for (const Rat& xi : x)
        for (const Rat& yj : y) c *= xi + yj;
    Polynomial pnum = Polynomial::constant(1), pden = Polynomial::constant(1);
    for (const Rat& xi : x) pnum = pnum * Polynomial({Rat(1), xi});
    for (const Rat& yj : y) pden = pden * Polynomial({Rat(1), -yj});
    Rat lambda_k = expand_ratio(pnum, pden, k).at(k);

    Rat lhs = c * lambda_k * a[static_cast<std::size_t>(b.m)] *
              rat_pow(bb[static_cast<std::size_t>(b.n)], k + 1);
    Rat rhs(0);
    for (const Partition& p : eq4_partition_list(b, k)) rhs += dim_splitting(p, x, y);

    IdentityReport rep;
    rep.identity = "dual_dims";
    std::ostringstream params;
    params << "m=" << b.m << " n=" << b.n << " k=" << k
           << " x=" << detail::render_values(x) << " y=" << detail::render_values(y);
    rep.params = params.str();
    rep.lhs = {rat_to_string(lhs)};
    rep.rhs = {rat_to_string(rhs)};
    rep.pass = lhs == rhs;
    return rep;
}

/*
 * The generating-function identity: t^m b_n (1 + a_1/t + ... + a_m/t^m)
 * over (-t)^n a_m (1 - b_1/t + ... + b_n (-t)^{-n}) agrees with
 * (1 + a_1 t + ...) / (1 - b_1 t + ...) as a power series. After clearing
 * the powers of t the left side is b_n * rev(A) / (a_m * rev~(B)); the
 * comparison is exact to the requested order and holds precisely when the
 * coefficient vectors are reciprocal / skew-reciprocal.
 */
inline IdentityReport verify_eq9(const std::vector<Rat>& a, const std::vector<Rat>& b,
                                 int order) {
    if (a.empty() || b.empty() || a[0] != 1 || b[0] != 1)
        throw std::invalid_argument("coefficient lists must start with 1");
    if (a.back() == 0 || b.back() == 0)
        throw std::invalid_argument("leading coefficients must be nonzero");
    int m = static_cast<int>(a.size()) - 1;
    int n = static_cast<int>(b.size()) - 1;

    std::vector<Rat> acoef(a), brev(b.size()), arev(a.size()), bcoef(b.size());
    for (int i = 0; i <= m; ++i) arev[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(m - i)];
    for (int j = 0; j <= n; ++j) {
        Rat sign = (j % 2 == 0) ? Rat(1) : Rat(-1);
        bcoef[static_cast<std::size_t>(j)] = sign * b[static_cast<std::size_t>(j)];
        brev[static_cast<std::size_t>(j)] = sign * b[static_cast<std::size_t>(n - j)];
    }
    Polynomial A(std::move(acoef)), Arev(std::move(arev));
    Polynomial B(std::move(bcoef)), Brev(std::move(brev));
    Rat am = a[static_cast<std::size_t>(m)], bn = b[static_cast<std::size_t>(n)];

    TruncatedSeries lhs = expand_ratio(bn * Arev, am * Brev, order);
    TruncatedSeries rhs = expand_ratio(A, B, order);

    IdentityReport rep;
    rep.identity = "eq9";
    rep.params = "a=" + detail::render_values(a) + " b=" + detail::render_values(b) +
                 " order=" + std::to_string(order);
    rep.lhs = {detail::render_values(lhs.coeffs())};
    rep.rhs = {detail::render_values(rhs.coeffs())};
    rep.pass = lhs.coeffs() == rhs.coeffs();
    return rep;
}

/*
 * Theorem-level check on one symmetry: reconstruct P/Q from the exterior
 * algebra dimensions and record reciprocity, skew-reciprocity, integrality
 * and the root signs.
 */
inline IdentityReport verify_theorem1(const HeckeSymmetry& sym, int N, int mMax = 4, int nMax = 4,
                                      const Limits& lim = {}, const std::string& label = "") {
    RationalFunction r = poincare_lambda(sym, N, mMax, nMax, lim);
    auto flag = [](const char* name, bool v) {
        return std::string(name) + "=" + (v ? "true" : "false");
    };
    IdentityReport rep;
    rep.identity = "theorem1";
    rep.params = (label.empty() ? "" : label + " ") + "P=" + r.num.to_string() +
                 " Q=" + r.den.to_string() + " N=" + std::to_string(N);
    bool rec = is_reciprocal(r.num);
    bool skew = is_skew_reciprocal(r.den);
    bool integral = integer_coefficients(r.num) && integer_coefficients(r.den);
    bool neg = roots_all_negative(r.num);
    bool pos = roots_all_positive(r.den);
    rep.lhs = {flag("reciprocal", rec), flag("skew_reciprocal", skew),
               flag("integer_coefficients", integral), flag("numerator_roots_negative", neg),
               flag("denominator_roots_positive", pos)};
    rep.rhs = {flag("reciprocal", true), flag("skew_reciprocal", true),
               flag("integer_coefficients", true), flag("numerator_roots_negative", true),
               flag("denominator_roots_positive", true)};
    rep.pass = rep.lhs == rep.rhs;
    return rep;
}

/*
 * The low-birank family (1+t)^e1 (1+at+t^2)^e2 / (1-t)^d1 (1-bt+t^2)^d2
 * with integer a, b >= 2; every member carries its four predicate verdicts.
 */
struct LowBirankSeries {
    int eps1 = 0, eps2 = 0, del1 = 0, del2 = 0;
    long a = 0, b = 0;  // meaningful only when the matching exponent is 1
    RationalFunction series;
    bool reciprocal = false, skew_reciprocal = false;
    bool roots_negative = false, roots_positive = false;

    [[nodiscard]] std::string label() const {
        std::string num, den;
        if (eps1) num += "(1+t)^1";
        if (eps2) num += "(1+" + std::to_string(a) + "t+t^2)^1";
        if (num.empty()) num = "1";
        if (del1) den += "(1-t)^1";
        if (del2) den += "(1-" + std::to_string(b) + "t+t^2)^1";
        if (den.empty()) den = "1";
        return num + " / " + den;
    }

    [[nodiscard]] bool all_checks() const {
        return reciprocal && skew_reciprocal && roots_negative && roots_positive;
    }
};

inline std::vector<LowBirankSeries> classify_low_birank(int maxA, int maxB) {
    if (maxA < 2 || maxB < 2) throw std::invalid_argument("bounds must be at least 2");
    std::vector<LowBirankSeries> out;
    for (int eps1 = 0; eps1 <= 1; ++eps1)
        for (int eps2 = 0; eps2 <= 1; ++eps2)
            for (long a = eps2 ? 2 : 0; a <= (eps2 ? maxA : 0); ++a)
                for (int del1 = 0; del1 <= 1; ++del1)
                    for (int del2 = 0; del2 <= 1; ++del2)
                        for (long b = del2 ? 2 : 0; b <= (del2 ? maxB : 0); ++b) {
                            Polynomial num = Polynomial::constant(1);
                            Polynomial den = Polynomial::constant(1);
                            if (eps1) num = num * Polynomial({Rat(1), Rat(1)});
                            if (eps2) num = num * Polynomial({Rat(1), Rat(a), Rat(1)});
                            if (del1) den = den * Polynomial({Rat(1), Rat(-1)});
                            if (del2) den = den * Polynomial({Rat(1), Rat(-b), Rat(1)});
                            LowBirankSeries s;
                            s.eps1 = eps1;
                            s.eps2 = eps2;
                            s.del1 = del1;
                            s.del2 = del2;
                            s.a = a;
                            s.b = b;
                            s.series = make_rational_function(num, den);
                            s.reciprocal = is_reciprocal(s.series.num);
                            s.skew_reciprocal = is_skew_reciprocal(s.series.den);
                            s.roots_negative = roots_all_negative(s.series.num);
                            s.roots_positive = roots_all_positive(s.series.den);
                            out.push_back(std::move(s));
                        }
    return out;
}

// ---- fixtures and seeded sample data ------------------------------------

struct NamedSymmetry {
    std::string name;
    HeckeSymmetry sym;
};

// the series computed in closed form: (1+t)^d and (1+t)^m/(1-t)^n, plus
// deformed super symmetries at q != 1 for the same biranks
inline std::vector<NamedSymmetry> builtin_fixtures() {
    Rat threeHalves(3, 2);
    threeHalves.canonicalize();
    std::vector<NamedSymmetry> out;
    out.push_back({"standard:2:1", fixture_standard(2, 1)});
    out.push_back({"standard:2:2", fixture_standard(2, 2)});
    out.push_back({"standard:3:1", fixture_standard(3, 1)});
    out.push_back({"standard:3:2", fixture_standard(3, 2)});
    out.push_back({"super:1:1", fixture_super(1, 1)});
    out.push_back({"super:2:1", fixture_super(2, 1)});
    out.push_back({"super:1:2", fixture_super(1, 2)});
    out.push_back({"superq:1:1:2", fixture_super_deformed(1, 1, 2)});
    out.push_back({"superq:1:2:2", fixture_super_deformed(1, 2, 2)});
    out.push_back({"superq:2:1:3/2", fixture_super_deformed(2, 1, threeHalves)});
    return out;
}

inline Rat sample_positive_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(1, 10), den(1, 10);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline std::vector<Rat> sample_positive_rationals(std::mt19937_64& rng, int count) {
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(sample_positive_rational(rng));
    return out;
}

/*
 * Positive rational root multisets closed under inversion: pairs (r, 1/r)
 * plus a 1 when the count is odd. This is the locus where genuine
 * Poincare data lives (the numerator/denominator are reciprocal), and the
 * dimension identities of the dual decomposition hold exactly there and
 * fail off it.
 */
inline std::vector<Rat> sample_inversion_closed(std::mt19937_64& rng, int count) {
    std::vector<Rat> roots;
    for (int i = 0; i + 1 < count; i += 2) {
        Rat r = sample_positive_rational(rng);
        roots.push_back(r);
        roots.push_back(Rat(1) / r);
    }
    if (count % 2 == 1) roots.push_back(Rat(1));
    return roots;
}

// reciprocal (resp. skew-reciprocal) coefficient vectors: the elementary
// symmetric values of an inversion-closed positive multiset
inline std::vector<Rat> palindromic_coeffs(int degree, std::mt19937_64& rng) {
    return elementary_values(sample_inversion_closed(rng, degree));
}

// ---- suite runners (shared by the CLI and the acceptance tests) ----------

inline std::vector<IdentityReport> run_eq4_suite(int mMax, int nMax, int kMax, int samples,
                                                 std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<IdentityReport> out;
    for (int m = 1; m <= mMax; ++m)
        for (int n = 1; n <= nMax; ++n)
            for (int k = 0; k <= kMax; ++k) {
                out.push_back(verify_tensor_lr({m, n}, k));
                for (int s = 0; s < samples; ++s) {
                    auto x = sample_inversion_closed(rng, m);
                    auto y = sample_inversion_closed(rng, n);
                    out.push_back(verify_dual_dims({m, n}, k, x, y));
                }
            }
    return out;
}

inline std::vector<IdentityReport> run_eq9_suite(int mMax, int nMax, int order, int samples,
                                                 std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<IdentityReport> out;
    for (int m = 0; m <= mMax; ++m)
        for (int n = 0; n <= nMax; ++n)
            for (int s = 0; s < samples; ++s) {
                auto a = palindromic_coeffs(m, rng);
                auto b = palindromic_coeffs(n, rng);
                out.push_back(verify_eq9(a, b, order));
            }
    return out;
}

inline std::vector<IdentityReport> run_thm1_suite(int order, int mMax, int nMax,
                                                  const Limits& lim = {}) {
    std::vector<IdentityReport> out;
    for (const NamedSymmetry& f : builtin_fixtures())
        out.push_back(verify_theorem1(f.sym, order, mMax, nMax, lim, f.name));
    return out;
}

}  // namespace qpoincare

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qpoincare/series.hpp"

using namespace qpoincare;

namespace {

Polynomial poly(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return Polynomial(std::move(v));
}

TruncatedSeries series(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return TruncatedSeries(std::move(v));
}

}  // namespace

TEST_CASE("rational literals") {
    CHECK(parse_rational("3/2") == Rat(3, 2));
    CHECK(parse_rational("-3/2") == -Rat(3, 2));
    CHECK(parse_rational("42") == 42);
    CHECK(parse_rational("4/6") == Rat(2, 3));  // canonicalized on parse
    CHECK(rat_to_string(Rat(3, 2)) == "3/2");
    CHECK(rat_to_string(Rat(-4)) == "-4");
    CHECK(rat_to_string(parse_rational("4/6")) == "2/3");
    CHECK_THROWS_AS(parse_rational("3/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("2/3x"), std::invalid_argument);
    CHECK(is_integer(Rat(8, 4)) == false);  // construction does not canonicalize
    Rat r(8, 4);
    r.canonicalize();
    CHECK(is_integer(r));
}

TEST_CASE("series arithmetic") {
    CHECK(series_add(series({1, 2, 3}), series({1, 1, 1})) == series({2, 3, 4}));
    CHECK(series_add(series({1, 2, 3}), series({1, 1})) == series({2, 3}));  // min order
    CHECK(series_mul(series({1, 1}), series({1, 1})).coeffs() == series({1, 2}).coeffs());
    TruncatedSeries ones({Rat(1), Rat(1), Rat(1), Rat(1)});
    CHECK(series_invert(ones) == series({1, -1, 0, 0}));
    CHECK_THROWS_AS(series_invert(series({0, 1})), std::domain_error);

    // (1+t) * 1/(1-t) to order 4
    TruncatedSeries lhs = expand_ratio(poly({1, 1}), poly({1, -1}), 4);
    CHECK(lhs == series({1, 2, 2, 2, 2}));
}

TEST_CASE("expansion of rational functions") {
    CHECK(expand(make_rational_function(poly({1, 2, 1}), poly({1})), 4) ==
          series({1, 2, 1, 0, 0}));
    CHECK(expand(make_rational_function(poly({1, 1}), poly({1, -1})), 4) ==
          series({1, 2, 2, 2, 2}));
    CHECK(expand(make_rational_function(poly({1, 2, 1}), poly({1, -1})), 5) ==
          series({1, 3, 4, 4, 4, 4}));
}

TEST_CASE("rational function normalization") {
    // common factor is cleared
    RationalFunction r = make_rational_function(poly({1, 2, 1}), poly({1, 1}));
    CHECK(r.num == poly({1, 1}));
    CHECK(r.den == poly({1}));
    CHECK(birank(r) == Birank{1, 0});
    CHECK_THROWS_AS(make_rational_function(poly({0, 1}), poly({1})), std::invalid_argument);
    CHECK_THROWS_AS(make_rational_function(poly({2, 1}), poly({1})), std::invalid_argument);
}

TEST_CASE("Pade reconstruction examples") {
    RationalFunction a = pade_reconstruct(series({1, 3, 4, 4, 4, 4, 4}), 3, 3);
    CHECK(a.num == poly({1, 2, 1}));
    CHECK(a.den == poly({1, -1}));

    RationalFunction b = pade_reconstruct(series({1, 2, 1, 0, 0, 0}), 3, 3);
    CHECK(b.num == poly({1, 2, 1}));
    CHECK(b.den == poly({1}));

    RationalFunction c = pade_reconstruct(series({1, 2, 2, 2, 2, 2}), 2, 2);
    CHECK(c.num == poly({1, 1}));
    CHECK(c.den == poly({1, -1}));
}

TEST_CASE("Pade failure is reported") {
    // partial sums of exp(t) are not rational of low degree
    std::vector<Rat> es{Rat(1), Rat(1), Rat(1, 2), Rat(1, 6), Rat(1, 24), Rat(1, 120), Rat(1, 720)};
    CHECK_THROWS_AS(pade_reconstruct(TruncatedSeries(es), 2, 2), PadeError);
}

TEST_CASE("Pade round trip on random rational functions") {
    std::mt19937_64 rng(987654321u);
    std::uniform_int_distribution<long> coeff(-10, 10), deg(0, 3);
    int done = 0;
    while (done < 200) {
        int m = static_cast<int>(deg(rng)), n = static_cast<int>(deg(rng));
        std::vector<Rat> pc{Rat(1)}, qc{Rat(1)};
        for (int i = 0; i < m; ++i) pc.emplace_back(coeff(rng));
        for (int i = 0; i < n; ++i) qc.emplace_back(coeff(rng));
        Polynomial p(pc), q(qc);
        if (p.degree() != m || q.degree() != n) continue;  // degenerate draw
        RationalFunction r = make_rational_function(p, q);
        int order = r.num.degree() + r.den.degree() + 2;
        TruncatedSeries s = expand(r, order);
        RationalFunction back = pade_reconstruct(s, 4, 4);
        CHECK(back == r);
        CHECK(expand(back, order).coeffs() == s.coeffs());
        ++done;
    }
}

TEST_CASE("reciprocity predicates") {
    CHECK(is_reciprocal(poly({1, 3, 3, 1})));
    CHECK_FALSE(is_reciprocal(poly({1, 2, 3})));
    CHECK(is_reciprocal(poly({1})));
    // (1+t)^m for m <= 8
    Polynomial p = poly({1});
    for (int m = 1; m <= 8; ++m) {
        p = p * poly({1, 1});
        CHECK(is_reciprocal(p));
    }

    // 1 - bt + t^2 has b-vector (1, b, 1)
    CHECK(is_skew_reciprocal(poly({1, -5, 1})));
    CHECK(is_skew_reciprocal(poly({1, -1})));
    CHECK_FALSE(is_skew_reciprocal(poly({1, -2, 3, -1})));
    // (1-t)(1-bt+t^2)
    CHECK(is_skew_reciprocal(poly({1, -1}) * poly({1, -3, 1})));
}

TEST_CASE("root sign decisions are exact") {
    CHECK(roots_all_negative(poly({1, 2, 1})));       // (1+t)^2
    CHECK_FALSE(roots_all_negative(poly({1, 1, 1})));  // complex pair
    CHECK(roots_all_positive(poly({1, -3, 1})));      // discriminant 5, positive roots
    CHECK_FALSE(roots_all_positive(poly({1, 2, 1})));
    CHECK(roots_all_negative(poly({1})));

    // prod (1 + x_i t) with positive rational x_i
    std::mt19937_64 rng(13579u);
    std::uniform_int_distribution<long> num(1, 9), den(1, 9);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = poly({1});
        int deg = 1 + static_cast<int>(trial % 4);
        for (int i = 0; i < deg; ++i) {
            Rat x(num(rng), den(rng));
            x.canonicalize();
            p = p * Polynomial({Rat(1), x});
        }
        CHECK(roots_all_negative(p));
        CHECK_FALSE(roots_all_positive(p));
    }
    // one flipped factor ruins it
    CHECK_FALSE(roots_all_negative(poly({1, 1}) * poly({1, -2})));
    // a complex quadratic factor ruins it
    CHECK_FALSE(roots_all_negative(poly({1, 1}) * poly({1, 1, 1})));
}

TEST_CASE("duality of the two Poincare series") {
    RationalFunction sq = make_rational_function(poly({1, 2, 1}), poly({1}));
    RationalFunction dual = make_rational_function(poly({1}), poly({1, -2, 1}));
    CHECK(duality_check(sq, dual, 10));

    RationalFunction self = make_rational_function(poly({1, 1}), poly({1, -1}));
    CHECK(duality_check(self, self, 10));

    RationalFunction one;
    CHECK(duality_check(one, one, 10));

    CHECK_FALSE(duality_check(sq, self, 10));
}

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qpoincare/partition.hpp"

using namespace qpoincare;

TEST_CASE("partition construction normalizes and validates") {
    CHECK(Partition({3, 2, 2, 0, 0}) == Partition({3, 2, 2}));
    CHECK(Partition().empty());
    CHECK(Partition({5}).weight() == 5);
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, -1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, 0, 2}), std::invalid_argument);
}

TEST_CASE("partition text round trip") {
    CHECK(Partition::parse("3,2,2") == Partition({3, 2, 2}));
    CHECK(Partition::parse("-") == Partition());
    CHECK(Partition({3, 2, 2}).to_string() == "3,2,2");
    CHECK(Partition().to_string() == "-");
    CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,3"), std::invalid_argument);
}

TEST_CASE("conjugation") {
    CHECK(Partition({3, 2, 2}).conjugate() == Partition({3, 3, 1}));
    CHECK(Partition().conjugate() == Partition());
    CHECK(Partition({1, 1, 1}).conjugate() == Partition({3}));

    // involution and weight preservation, exhaustive over weight <= 20
    for (const Partition& p : oracles::partitions_up_to(20)) {
        Partition c = p.conjugate();
        CHECK(c.conjugate() == p);
        CHECK(c.weight() == p.weight());
    }
}

TEST_CASE("Gamma membership") {
    CHECK(in_gamma(Partition({3, 2, 2}), {1, 2}));
    CHECK_FALSE(in_gamma(Partition({3, 3}), {1, 2}));
    CHECK(in_gamma(Partition(), {0, 0}));
    CHECK(in_gamma(Partition(), {1, 2}));
}

TEST_CASE("splitting predicate") {
    CHECK(is_splitting(Partition({3, 2, 2}), {1, 2}));
    CHECK_FALSE(is_splitting(Partition({1}), {1, 2}));
    // lambda = (n^m) is always splitting
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            CHECK(is_splitting(Partition(std::vector<int>(m, n)), {m, n}));
    // outside Gamma is rejected
    CHECK_THROWS_AS(is_splitting(Partition({3, 3}), {1, 2}), std::invalid_argument);
}

TEST_CASE("split decomposition") {
    auto sd = split_decompose(Partition({3, 2, 2}), {1, 2});
    CHECK(sd.alpha == Partition({1}));
    CHECK(sd.beta == Partition({2, 2}));

    auto sd2 = split_decompose(Partition({3, 2, 2, 2}), {1, 2});
    CHECK(sd2.alpha == Partition({1}));
    CHECK(sd2.beta == Partition({2, 2, 2}));

    auto sq = split_decompose(Partition({2, 2, 2}), {3, 2});
    CHECK(sq.alpha == Partition());
    CHECK(sq.beta == Partition());

    CHECK_THROWS_AS(split_decompose(Partition({1}), {1, 2}), std::invalid_argument);
}

TEST_CASE("split decomposition recomposes, weight <= 20, biranks <= 4") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n)
            for (const Partition& p : oracles::partitions_up_to(20)) {
                if (!in_gamma(p, {m, n}) || !is_splitting(p, {m, n})) continue;
                SplitDecomposition sd = split_decompose(p, {m, n});
                CHECK(sd.alpha.length() <= m);
                CHECK(sd.beta.part(1) <= n);
                CHECK(recompose_split(sd, {m, n}) == p);
            }
}

TEST_CASE("eq4 partition lists") {
    auto l1 = eq4_partition_list({1, 2}, 1);
    REQUIRE(l1.size() == 2);
    CHECK(l1[0] == Partition({3, 2, 1}));
    CHECK(l1[1] == Partition({2, 2, 2}));

    auto l2 = eq4_partition_list({1, 2}, 2);
    REQUIRE(l2.size() == 2);
    CHECK(l2[0] == Partition({3, 2, 1, 1}));
    CHECK(l2[1] == Partition({2, 2, 2, 1}));

    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto l0 = eq4_partition_list({m, n}, 0);
            REQUIRE(l0.size() == 1);
            std::vector<int> expect(static_cast<std::size_t>(m), n + 1);
            expect.push_back(n);
            CHECK(l0[0] == Partition(expect));
        }
}

TEST_CASE("eq4 list members split and have the right weight") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= 4; ++k) {
                auto list = eq4_partition_list({m, n}, k);
                CHECK(static_cast<int>(list.size()) == std::min(k, m) + 1);
                for (const Partition& p : list) {
                    CHECK(in_gamma(p, {m, n}));
                    CHECK(is_splitting(p, {m, n}));
                    CHECK(p.weight() == long(m) * (n + 1) + long(n) * (k + 1) - k);
                }
            }
}

TEST_CASE("descending lexicographic order") {
    PartitionDescLex less;
    CHECK(less(Partition({4, 2, 2}), Partition({3, 2, 2, 1})));
    CHECK_FALSE(less(Partition({3, 2, 2, 1}), Partition({4, 2, 2})));
}

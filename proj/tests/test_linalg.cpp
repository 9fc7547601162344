#include <catch2/catch_amalgamated.hpp>

#include "qpoincare/matrix.hpp"

using namespace qpoincare;

TEST_CASE("determinants") {
    MatQ m(2, 2);
    m(0, 0) = 1; m(0, 1) = 2;
    m(1, 0) = 3; m(1, 1) = 4;
    CHECK(mat_det(m) == -2);

    MatQ half(2, 2);
    half(0, 0) = Rat(1, 2); half(0, 1) = Rat(1, 3);
    half(1, 0) = Rat(1, 4); half(1, 1) = Rat(1, 5);
    CHECK(mat_det(half) == Rat(1, 60));  // 1/10 - 1/12

    CHECK(mat_det(MatQ::identity(5)) == 1);
    CHECK(mat_det(MatQ(3, 3)) == 0);
    CHECK(mat_det(MatQ(0, 0)) == 1);
}

TEST_CASE("rank via fraction-free echelon") {
    CHECK(mat_rank(MatQ::identity(4)) == 4);
    CHECK(mat_rank(MatQ(3, 5)) == 0);

    MatQ m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = Rat(long(i) + long(j));
    CHECK(mat_rank(m) == 2);  // rows are an arithmetic progression

    MatQ ones(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) ones(i, j) = 1;
    CHECK(mat_rank(ones) == 1);
}

TEST_CASE("echelon keeps a faithful row basis") {
    // the pivot rows must span the same space as the input
    IntEchelon ech(3);
    ech.push(std::vector<Int>{2, 4, 6});
    ech.push(std::vector<Int>{1, 2, 3});   // dependent
    ech.push(std::vector<Int>{0, 1, 1});
    ech.push(std::vector<Int>{1, 3, 4});   // dependent on the first two pivots
    CHECK(ech.rank() == 2);

    // row pushed with a smaller lead after a larger one
    IntEchelon ech2(3);
    ech2.push(std::vector<Int>{0, 0, 5});
    ech2.push(std::vector<Int>{3, 1, 2});
    ech2.push(std::vector<Int>{3, 1, 7});  // = second + first
    CHECK(ech2.rank() == 2);
}

TEST_CASE("matrix product and equality") {
    MatQ a(2, 3), b(3, 2);
    a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
    a(1, 0) = 4; a(1, 1) = 5; a(1, 2) = 6;
    b(0, 0) = 1; b(1, 0) = 1; b(2, 0) = 1;
    b(0, 1) = 2; b(1, 1) = 0; b(2, 1) = 1;
    MatQ c = a * b;
    CHECK(c(0, 0) == 6);
    CHECK(c(0, 1) == 5);
    CHECK(c(1, 0) == 15);
    CHECK(c(1, 1) == 14);
    CHECK_THROWS_AS(b * b, std::invalid_argument);
}

#include <doctest.h>

#include <random>

#include "cdesc/exact.hpp"

using namespace cdesc;

namespace {

Mat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = d(rng);
    return m;
}

} // namespace

TEST_CASE("determinant on pinned examples") {
    CHECK(determinant(Mat{{1, 1}, {0, 1}}) == Rat(1));
    CHECK(determinant(Mat{{1, 1, 1}, {1, 1, 0}, {0, 1, 1}}) == Rat(1));
    CHECK(determinant(Mat::identity(4)) == Rat(1));
    CHECK(determinant(Mat{{2, 4}, {1, 2}}) == Rat(0));
    // rational path
    CHECK(determinant(Mat{{Rat(1, 2), Rat(1, 3)}, {Rat(1, 4), Rat(1, 5)}}) ==
          Rat(1, 10) - Rat(1, 12));
    CHECK_THROWS_AS(determinant(Mat(2, 3)), error);
}

TEST_CASE("kernel basis on pinned examples") {
    Mat m{{2, -3, 1}};
    Mat k = kernel_basis(m);
    REQUIRE(k.cols() == 2);
    CHECK(m.mul(k).is_zero());

    CHECK(kernel_basis(Mat::identity(3)).cols() == 0);

    Mat ones{{1, 1, 1, 1}};
    Mat k2 = kernel_basis(ones);
    REQUIRE(k2.cols() == 3);
    CHECK(ones.mul(k2).is_zero());
}

TEST_CASE("rank on pinned examples") {
    CHECK(rank(Mat(2, 4)) == 0);
    CHECK(rank(Mat::identity(3)) == 3);
    CHECK(rank(Mat{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("row swap negates the determinant") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + trial % 4;
        Mat m = random_matrix(rng, n, n, -5, 5);
        Mat swapped = m;
        for (std::size_t j = 0; j < n; ++j) std::swap(swapped.at(0, j), swapped.at(1, j));
        CHECK(determinant(swapped) == -determinant(m));
    }
}

TEST_CASE("kernel columns are annihilated and complete the rank") {
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + trial % 3;
        std::size_t cols = rows + 1 + trial % 3;
        Mat m = random_matrix(rng, rows, cols, -4, 4);
        Mat k = kernel_basis(m);
        CHECK(m.mul(k).is_zero());
        CHECK(rank(m) + k.cols() == cols);
    }
}

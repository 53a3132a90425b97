#include <doctest.h>

#include <random>

#include "coarse/numbers.hpp"

using namespace coarse;

namespace {

// Cofactor expansion determinant, exponential but independent of Bareiss.
Integer cofactor_det(const IntegerMatrix& m) {
    const Eigen::Index n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Integer acc = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntegerMatrix minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r) {
            Eigen::Index cc = 0;
            for (Eigen::Index c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        Integer term = m(0, j) * cofactor_det(minor);
        acc += (j % 2 == 0) ? term : Integer(-term);
    }
    return acc;
}

}  // namespace

TEST_CASE("field rank on fixed matrices") {
    RationalMatrix m(3, 3);
    m << 1, 2, 3, 4, 5, 6, 7, 8, 9;
    CHECK(field_rank(m) == 2);
    RationalMatrix id = RationalMatrix::Identity(4, 4);
    CHECK(field_rank(id) == 4);
    RationalMatrix z = RationalMatrix::Zero(3, 5);
    CHECK(field_rank(z) == 0);
    RationalMatrix col(3, 1);
    col << 2, 4, 6;
    CHECK(field_rank(col) == 1);
}

TEST_CASE("integer rank via rationals") {
    IntegerMatrix m(2, 4);
    m << 2, 4, 6, 8, 3, 6, 9, 12;
    CHECK(rational_rank(m) == 1);
    IntegerMatrix e(0, 5);
    CHECK(rational_rank(e) == 0);
}

TEST_CASE("kernel basis spans the kernel") {
    IntegerMatrix m(2, 4);
    m << 1, 2, 0, -1, 0, 0, 1, 3;
    RationalMatrix k = rational_kernel_basis(m);
    CHECK(k.cols() == 2);
    RationalMatrix prod = to_rational(m) * k;
    CHECK(prod.isZero());
    CHECK(field_rank(k) == 2);

    IntegerMatrix full = IntegerMatrix::Identity(3, 3);
    CHECK(rational_kernel_basis(full).cols() == 0);
}

TEST_CASE("rank nullity on random matrices") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 6);
        int cols = 1 + static_cast<int>(rng() % 6);
        IntegerMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = entry(rng);
        RationalMatrix k = rational_kernel_basis(m);
        CHECK(rational_rank(m) + k.cols() == cols);
        if (k.cols() > 0) CHECK((to_rational(m) * k).isZero());
    }
}

TEST_CASE("bareiss determinant against cofactor expansion") {
    IntegerMatrix a(2, 2);
    a << 2, 4, 6, 8;
    CHECK(bareiss_determinant(a) == -8);
    IntegerMatrix s(3, 3);
    s << 0, 1, 0, 1, 0, 0, 0, 0, 1;
    CHECK(bareiss_determinant(s) == -1);
    CHECK(bareiss_determinant(IntegerMatrix::Zero(3, 3)) == 0);
    CHECK(bareiss_determinant(IntegerMatrix::Identity(5, 5)) == 1);

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        IntegerMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = entry(rng);
        CHECK(bareiss_determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("determinant rejects non square input") {
    IntegerMatrix m(2, 3);
    m.setZero();
    CHECK_THROWS_AS(bareiss_determinant(m), std::invalid_argument);
}

#include <gtest/gtest.h>

#include "support.hpp"

using namespace liecoh;
using liecoh::testing::mat;
using liecoh::testing::vec;
using liecoh::testing::naive_rank;

TEST(Rational, CanonicalText) {
    EXPECT_EQ(to_string(parse_rational("2/4")), "1/2");
    EXPECT_EQ(to_string(parse_rational("-6/3")), "-2");
    EXPECT_EQ(to_string(parse_rational("0/5")), "0");
    EXPECT_EQ(to_string(parse_rational("+7")), "7");
    Rational z = parse_rational("0/7");
    EXPECT_EQ(z.get_den(), 1);
}

TEST(Rational, RejectsMalformed) {
    for (const char* bad : {"", "1/0", "a", "1/", "/2", "1/-2", "1.5", "--1", "1/2/3"})
        EXPECT_THROW(parse_rational(bad), InvalidInput) << bad;
}

TEST(Linalg, RankExamples) {
    EXPECT_EQ(rank(Matrix(3, 4)), 0u);
    EXPECT_EQ(rank(Matrix::identity(5)), 5u);
    EXPECT_EQ(rank(mat({{1, 2}, {2, 4}})), 1u);
}

TEST(Linalg, RrefExample) {
    auto [r, piv] = rref(mat({{2, 4, 2}, {1, 3, 0}}));
    EXPECT_EQ(piv, (std::vector<std::size_t>{0, 1}));
    Matrix expect(2, 3);
    expect(0, 0) = 1; expect(0, 2) = 3;
    expect(1, 1) = 1; expect(1, 2) = -1;
    EXPECT_EQ(r, expect);
}

TEST(Linalg, KernelExamples) {
    EXPECT_TRUE(kernel_basis(Matrix::identity(3)).empty());
    auto k = kernel_basis(mat({{1, 1}}));
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], vec({-1, 1}));
    auto z = kernel_basis(Matrix(2, 2));
    ASSERT_EQ(z.size(), 2u);
    EXPECT_EQ(z[0], vec({1, 0}));
    EXPECT_EQ(z[1], vec({0, 1}));
}

TEST(Linalg, SolveExamples) {
    EXPECT_EQ(*solve(Matrix::identity(3), vec({4, -1, 2})), vec({4, -1, 2}));
    EXPECT_EQ(*solve(mat({{1, 1}}), vec({1})), vec({1, 0}));
    EXPECT_FALSE(solve(mat({{0}}), vec({1})).has_value());
}

TEST(Linalg, QuotientBasisExamples) {
    auto q = quotient_basis({}, 2);
    ASSERT_EQ(q.size(), 2u);
    EXPECT_EQ(q[0], vec({1, 0}));
    EXPECT_EQ(q[1], vec({0, 1}));
    q = quotient_basis({vec({1, 0})}, 2);
    ASSERT_EQ(q.size(), 1u);
    EXPECT_EQ(q[0], vec({0, 1}));
    EXPECT_TRUE(quotient_basis({vec({1, 0}), vec({0, 1})}, 2).empty());
}

TEST(Linalg, DeterminantExamples) {
    EXPECT_EQ(determinant(Matrix::identity(4)), 1);
    EXPECT_EQ(determinant(mat({{0, 1}, {1, 0}})), -1);
    EXPECT_EQ(determinant(mat({{1, 2}, {2, 4}})), 0);
    Matrix h(2, 2);
    h(0, 0) = Rational(1, 2); h(0, 1) = Rational(1, 3);
    h(1, 0) = Rational(1, 3); h(1, 1) = Rational(1, 4);
    EXPECT_EQ(determinant(h), Rational(1, 72));
}

TEST(Linalg, ShapeErrors) {
    EXPECT_THROW(mat({{1, 2}}) * mat({{1, 2}}), InvalidInput);
    EXPECT_THROW(solve(mat({{1, 2}}), vec({1, 2})), InvalidInput);
    EXPECT_THROW(determinant(mat({{1, 2}})), InvalidInput);
}

TEST(Linalg, ReduceWithUnnormalizedEchelon) {
    // Rows vanish at earlier pivots but are not scaled to 1.
    std::vector<Vector> e{vec({2, 4, 0}), vec({0, 3, 3})};
    EXPECT_TRUE(is_zero(reduce(vec({1, 5, 3}), e)));
    auto r = reduce(vec({0, 0, 1}), e);
    EXPECT_FALSE(is_zero(r));
}

class LinalgProperty : public ::testing::TestWithParam<int> {};

TEST_P(LinalgProperty, RandomMatrices) {
    std::mt19937 rng(GetParam());
    std::uniform_int_distribution<std::size_t> size(0, 7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = size(rng), cols = size(rng);
        Matrix m = liecoh::testing::random_matrix(rng, rows, cols);
        const std::size_t r = rank(m);
        EXPECT_EQ(r, liecoh::testing::naive_rank(m));

        auto k = kernel_basis(m);
        EXPECT_EQ(r + k.size(), cols);
        for (const auto& v : k) EXPECT_TRUE(is_zero(m * v));
        if (!k.empty()) { EXPECT_EQ(rank(Matrix::from_rows(k, cols)), k.size()); }

        auto rr = rref(m);
        EXPECT_EQ(rref(rr.matrix).matrix, rr.matrix);
        EXPECT_EQ(rr.pivots.size(), r);
        EXPECT_EQ(naive_rank(vstack({m, rr.matrix}, cols)), r);

        Vector b(rows);
        for (auto& x : b) x = liecoh::testing::random_rational(rng);
        auto x = solve(m, b);
        Matrix aug(rows, cols + 1);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
            aug(i, cols) = b[i];
        }
        EXPECT_EQ(x.has_value(), rank(aug) == r);
        if (x) { EXPECT_EQ(m * *x, b); }

        // A consistent right-hand side built from a known vector.
        Vector y(cols);
        for (auto& c : y) c = liecoh::testing::random_rational(rng);
        auto sol = solve(m, m * y);
        ASSERT_TRUE(sol.has_value());
        EXPECT_EQ(m * *sol, m * y);

        if (rows == cols && rows <= 6) { EXPECT_EQ(determinant(m), liecoh::testing::leibniz_det(m)); }
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, LinalgProperty, ::testing::Values(1, 2, 3, 4, 5));

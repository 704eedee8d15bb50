#include <gtest/gtest.h>

#include <random>

#include "hocolim/smith.hpp"
#include "oracles.hpp"

using namespace hocolim;

namespace {

Matrix<Integers> Z(std::initializer_list<std::initializer_list<long long>> rows) {
    return Matrix<Integers>::from_integers(Integers{}, rows);
}

Matrix<Integers> random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, int bound) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    Matrix<Integers> a(Integers{}, m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    return a;
}

} // namespace

TEST(SmithNormalForm, IdentityIsFixed) {
    auto id = Matrix<Integers>::identity(Integers{}, 3);
    auto s = smith_normal_form(id);
    EXPECT_EQ(s.D, id);
    EXPECT_EQ(s.rank, 3u);
}

TEST(SmithNormalForm, TwoByTwoExample) {
    auto a = Z({{2, 4}, {6, 8}});
    // Oracle: d1 = gcd of entries, d1 * d2 = |det|.
    EXPECT_EQ(oracle::determinantal_divisors(a), (std::vector<Integer>{2, 8}));
    auto s = smith_normal_form(a);
    EXPECT_EQ(s.D, Z({{2, 0}, {0, 4}}));
    EXPECT_EQ(s.U * a * s.V, s.D);
}

TEST(SmithNormalForm, ZeroMatrix) {
    auto z = Matrix<Integers>::zero(Integers{}, 2, 3);
    auto s = smith_normal_form(z);
    EXPECT_EQ(s.D, z);
    EXPECT_EQ(s.rank, 0u);
}

TEST(SmithNormalForm, EmptyShapes) {
    auto a = Matrix<Integers>::zero(Integers{}, 0, 3);
    EXPECT_EQ(rank(a), 0u);
    EXPECT_EQ(kernel_basis(a).cols(), 3u);
    auto b = Matrix<Integers>::zero(Integers{}, 3, 0);
    EXPECT_EQ(kernel_basis(b).cols(), 0u);
    EXPECT_EQ(kernel_basis(b).rows(), 0u);
}

TEST(SmithNormalForm, RandomInvariantsAgainstDeterminantalDivisors) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
        auto a = random_matrix(rng, m, n, 9);
        if (trial % 5 == 0) a = a * random_matrix(rng, n, n, 1);
        auto s = smith_normal_form(a);
        ASSERT_EQ(s.U * a * s.V, s.D);
        ASSERT_EQ(abs(oracle::determinant(s.U)), 1);
        ASSERT_EQ(abs(oracle::determinant(s.V)), 1);
        // d1 * ... * dk = k-th determinantal divisor.
        auto dd = oracle::determinantal_divisors(a);
        Integer prod = 1;
        for (std::size_t k = 0; k < s.rank; ++k) {
            prod *= s.D(k, k);
            ASSERT_EQ(prod, dd[k]) << a.to_string();
            if (k + 1 < s.rank) ASSERT_EQ(s.D(k + 1, k + 1) % s.D(k, k), 0);
            ASSERT_GT(s.D(k, k), 0);
        }
        ASSERT_EQ(dd.size(), s.rank);
    }
}

TEST(Oracle, InvariantFactorsAgreeWithDeterminantalDivisors) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t m = 1 + rng() % 5, n = 1 + rng() % 5;
        auto a = random_matrix(rng, m, n, 12);
        if (trial % 4 == 0) a = a * random_matrix(rng, n, n, 1);
        const auto dd = oracle::determinantal_divisors(a);
        const auto f = oracle::invariant_factors(a);
        ASSERT_EQ(f.size(), dd.size()) << a.to_string();
        Integer prev = 1;
        for (std::size_t k = 0; k < f.size(); ++k) {
            ASSERT_EQ(f[k], dd[k] / prev) << a.to_string();
            prev = dd[k];
        }
    }
}

TEST(SmithNormalForm, Deterministic) {
    std::mt19937_64 rng(5);
    auto a = random_matrix(rng, 5, 6, 20);
    auto s1 = smith_normal_form(a);
    auto s2 = smith_normal_form(a);
    EXPECT_EQ(s1.U, s2.U);
    EXPECT_EQ(s1.D, s2.D);
    EXPECT_EQ(s1.V, s2.V);
}

TEST(SmithNormalForm, OverFields) {
    auto a = Matrix<Rationals>::from_integers(Rationals{}, {{2, 4}, {6, 8}});
    auto s = smith_normal_form(a);
    EXPECT_TRUE(s.D.is_identity());
    EXPECT_EQ(s.U * a * s.V, s.D);

    PrimeField f2(2);
    auto b = Matrix<PrimeField>::from_integers(f2, {{2, 4}, {6, 8}});
    EXPECT_EQ(rank(b), 0u);
    auto c = Matrix<PrimeField>::from_integers(PrimeField(3), {{1, 2}, {2, 1}});
    EXPECT_EQ(rank(c), 1u); // det = -3
    auto sc = smith_normal_form(c);
    EXPECT_EQ(sc.U * c * sc.V, sc.D);
}

TEST(SmithNormalForm, RejectsCompositeModulus) {
    EXPECT_THROW(PrimeField(6), Error);
    EXPECT_THROW(PrimeField(1), Error);
}

TEST(KernelBasis, Examples) {
    EXPECT_EQ(kernel_basis(Z({{2}})).cols(), 0u);

    auto k = kernel_basis(Z({{1, 1}}));
    ASSERT_EQ(k.cols(), 1u);
    // Up to a unimodular change the basis is +-(1, -1).
    EXPECT_EQ(abs(k(0, 0)), 1);
    EXPECT_EQ(k(0, 0), -k(1, 0));

    EXPECT_EQ(kernel_basis(Matrix<Integers>::zero(Integers{}, 1, 2)).cols(), 2u);
}

TEST(KernelBasis, RandomAnnihilatesAndHasComplementaryRank) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = 1 + rng() % 5, n = 1 + rng() % 6;
        auto a = random_matrix(rng, m, n, 4);
        if (trial % 3 == 0) a = random_matrix(rng, m, 2, 3) * random_matrix(rng, 2, n, 3);
        auto k = kernel_basis(a);
        ASSERT_TRUE((a * k).is_zero());
        ASSERT_EQ(k.cols(), n - rank(a));
        ASSERT_EQ(rank(k), k.cols());
        // Saturated: the kernel lattice has trivial elementary divisors.
        for (const auto& d : elementary_divisors(k)) ASSERT_EQ(d, 1);
    }
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank(Matrix<Integers>::identity(Integers{}, 4)), 4u);
    EXPECT_EQ(rank(Z({{2, 4}, {6, 8}})), 2u);
    EXPECT_EQ(rank(Matrix<Integers>::zero(Integers{}, 3, 3)), 0u);
}

TEST(Summands, KernelAndSpanCoordinates) {
    auto a = Z({{1, 2, 3}, {2, 4, 6}});
    auto ker = kernel_summand(a);
    EXPECT_EQ(ker.rank(), 2u);
    EXPECT_TRUE((ker.retraction * ker.basis).is_identity());
    EXPECT_TRUE((ker.quotient * ker.complement).is_identity());
    EXPECT_TRUE((ker.retraction * ker.complement).is_zero());
    EXPECT_TRUE((ker.quotient * ker.basis).is_zero());

    auto span = span_summand(Z({{1, 0}, {1, 1}, {0, 1}}));
    EXPECT_EQ(span.rank(), 2u);
    EXPECT_TRUE((span.retraction * span.basis).is_identity());
    EXPECT_TRUE((span.quotient * span.basis).is_zero());

    // 2Z inside Z is not a summand.
    EXPECT_THROW(span_summand(Z({{2}})), Error);
}

TEST(Unimodular, Detects) {
    EXPECT_TRUE(is_unimodular(Z({{1, 1}, {0, 1}})));
    EXPECT_FALSE(is_unimodular(Z({{2, 0}, {0, 1}})));
    EXPECT_TRUE(is_unimodular(Matrix<Rationals>::from_integers(Rationals{}, {{2, 0}, {0, 1}})));
}

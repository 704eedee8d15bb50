#include <gtest/gtest.h>

#include "hocolim/dold_kan.hpp"
#include "hocolim/random.hpp"
#include "hocolim/totalization.hpp"
#include "oracles.hpp"

using namespace hocolim;

namespace {

using Z = Integers;
using C = ChainComplex<Z>;

Matrix<Z> M(std::initializer_list<std::initializer_list<long long>> rows) { return Matrix<Z>::from_integers(Z{}, rows); }

HomologyGroup free(std::size_t r) { return {r, {}}; }

void expect_same_complex(const C& a, const C& b, int lo, int hi) {
    for (int n = lo; n <= hi; ++n) {
        ASSERT_EQ(a.rank(n), b.rank(n)) << n;
        if (n > lo) EXPECT_EQ(a.differential(n), b.differential(n)) << n;
    }
}

} // namespace

TEST(Totalization, SingleRowIsTheRowComplex) {
    const auto row = C::two_term(M({{2, 3}}), 1);
    const auto x = tensor_double(row, C::free(Z{}, 0));
    expect_same_complex(tot_sum(x, {-1, 3}), row, -2, 4);
}

TEST(Totalization, SingleColumnIsTheColumn) {
    const auto col = C::two_term(M({{5}, {1}}), 2);
    const auto x = tensor_double(C::free(Z{}, 0), col);
    expect_same_complex(tot_prod(x, {-1, 4}), col, -2, 5);
}

TEST(Totalization, TensorDoubleMatchesTensorProduct) {
    random::Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = random::complex(rng, Z{}, -1, 2, 3);
        const auto d = random::complex(rng, Z{}, 0, 2, 3);
        const auto x = tensor_double(c, d);
        const auto t = tensor(c, d);
        expect_same_complex(tot_sum(x, {-2, 5}), t, -3, 6);
        expect_same_complex(tot_prod(x, {-2, 5}), t, -3, 6);
    }
}

TEST(Totalization, SumAndProductAgreeOnFiniteSupport) {
    random::Rng rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random::rowwise_quasi_iso(rng, Z{}, 2);
        const DegreeWindow w{0, 6};
        EXPECT_EQ(window_homology(tot_sum(f.target(), w), w), window_homology(tot_prod(f.target(), w), w));
    }
}

TEST(Totalization, ConstantMooreComplex) {
    const auto x = moore(constant_simplicial(C::free(Z{}, 0), 5));
    const DegreeWindow w{0, 3};
    const auto h = window_homology(tot_sum(x, w), w);
    EXPECT_EQ(h.at(0), free(1));
    for (int n = 1; n <= 3; ++n) EXPECT_TRUE(h.at(n).is_zero()) << n;
}

TEST(Totalization, WindowStability) {
    random::Rng rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        const auto x = random::rowwise_quasi_iso(rng, Z{}, 2).source();
        const DegreeWindow w{1, 3}, wide{-1, 6};
        const auto small = window_homology(tot_sum(x, w), w);
        const auto big = window_homology(tot_sum(x, wide), wide);
        for (int n = 1; n <= 3; ++n) EXPECT_EQ(small.at(n), big.at(n));
    }
}

TEST(Totalization, DifferentialSquaresToZero) {
    random::Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = random::rowwise_quasi_iso(rng, Z{}, 2).target();
        const auto t = tot_sum(x, {-1, 8});
        for (int n = -1; n <= 9; ++n) EXPECT_TRUE((t.differential(n - 1) * t.differential(n)).is_zero());
    }
}

TEST(Totalization, PreservesRowwiseQuasiIsomorphisms) {
    random::Rng rng(10);
    const DegreeWindow w{0, 8};
    for (int trial = 0; trial < 25; ++trial) {
        const auto f = random::rowwise_quasi_iso(rng, Z{}, 2);
        for (const auto& l : {0, 1, 2}) ASSERT_TRUE(is_quasi_iso(f.row(l)));
        const auto t = tot_sum(f, w);
        EXPECT_TRUE(is_quasi_iso(t));
        std::size_t widest = 0;
        for (const auto& [n, r] : t.target().ranks()) widest = std::max(widest, r);
        if (widest <= 8) EXPECT_TRUE(oracle::quasi_iso_degreewise(t));
    }
}

TEST(Totalization, DoubleMapOfTensorsIsTensorOfMaps) {
    random::Rng rng(11);
    const auto c = random::complex(rng, Z{}, 0, 2, 2);
    const auto d = random::complex(rng, Z{}, 0, 2, 2);
    const auto g = random::quasi_iso_from(rng, c, 0, 2, 2);
    const auto h = random::quasi_iso_from(rng, d, 0, 2, 2);
    const auto f = tot_sum(tensor_double(g, h), {-1, 6});
    const auto t = tensor(g, h);
    for (int n = -1; n <= 6; ++n) EXPECT_EQ(f.component(n), t.component(n)) << n;
}

TEST(Staircase, RowsAreAcyclic) {
    const auto x = staircase(Z{}, 4, StaircaseCut::Columns);
    for (int l = 0; l <= 3; ++l)
        for (int n = -6; n <= 1; ++n) EXPECT_TRUE(homology(x.row(l), n).is_zero()) << l << " " << n;
}

TEST(Staircase, RowCutsAreAcyclicColumnCutsAreNot) {
    const DegreeWindow w{-1, 0};
    for (int depth : {1, 3, 6}) {
        const auto rows = window_homology(tot_prod(staircase(Z{}, depth, StaircaseCut::Rows), w), w);
        EXPECT_TRUE(rows.at(0).is_zero());
        EXPECT_TRUE(rows.at(-1).is_zero());
        const auto cols = window_homology(tot_prod(staircase(Z{}, depth, StaircaseCut::Columns), w), w);
        EXPECT_EQ(cols.at(0), free(1));
        EXPECT_TRUE(cols.at(-1).is_zero());
    }
}

TEST(Staircase, OpenPieceIsRefused) {
    const auto x = staircase(Z{}, 3, StaircaseCut::Rows, true);
    try {
        tot_prod(x, {-1, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InfiniteAntidiagonal);
    }
}

TEST(Totalization, TruncationChecks) {
    const auto x = moore(constant_simplicial(C::free(Z{}, 0), 3));
    EXPECT_NO_THROW(tot_sum(x, {0, 2}));
    try {
        tot_sum(x, {0, 3});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InfiniteAntidiagonal);
    }
    EXPECT_THROW(DegreeWindow(2, 1), Error);
}

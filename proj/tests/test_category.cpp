#include <gtest/gtest.h>

#include <functional>

#include "hocolim/category.hpp"

using namespace hocolim;

namespace {

using Z = Integers;
using C = ChainComplex<Z>;
using Map = ChainMap<Z>;

std::vector<FiniteCategory> corpus() {
    return {categories::discrete({"x"}),     categories::discrete({"x", "y"}), categories::span(),
            categories::cospan(),            categories::linear_order(1),      categories::linear_order(2),
            categories::cyclic_group(2),     categories::cyclic_group(3),      categories::cyclic_group(4)};
}

// All n-tuples of morphisms, kept when consecutive ones compose.
std::size_t brute_force_nerve(const FiniteCategory& c, int n) {
    if (n == 0) return c.object_count();
    std::size_t count = 0;
    std::vector<std::size_t> t(n, 0);
    std::function<void(int)> go = [&](int i) {
        if (i == n) {
            for (int j = 0; j + 1 < n; ++j)
                if (c.target(t[j]) != c.source(t[j + 1])) return;
            ++count;
            return;
        }
        for (std::size_t m = 0; m < c.morphism_count(); ++m) {
            t[i] = m;
            go(i + 1);
        }
    };
    go(0);
    return count;
}

} // namespace

TEST(Category, SpanNerveCounts) {
    const auto c = categories::span();
    EXPECT_EQ(nerve_simplices(c, 0).size(), 3u);
    EXPECT_EQ(nerve_simplices(c, 1).size(), 5u);
    EXPECT_EQ(nerve_simplices(c, 2).size(), 7u);
}

TEST(Category, CyclicGroupNerveIsPowersOfTwo) {
    const auto c = categories::cyclic_group(2);
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(nerve_simplices(c, n).size(), std::size_t{1} << n);
}

TEST(Category, LevelZeroIsObjects) {
    for (const auto& c : corpus()) EXPECT_EQ(nerve_simplices(c, 0).size(), c.object_count());
}

TEST(Category, NerveMatchesBruteForce) {
    for (const auto& c : corpus())
        for (int n = 0; n <= 4; ++n) EXPECT_EQ(nerve_simplices(c, n).size(), brute_force_nerve(c, n)) << n;
}

TEST(Category, NerveOrderIsLexicographicInNames) {
    const auto c = categories::span();
    const auto level = nerve_simplices(c, 2);
    std::vector<std::vector<std::string>> names;
    for (const auto& s : level) {
        std::vector<std::string> ns;
        for (auto m : s.morphisms) ns.push_back(c.morphism_name(m));
        names.push_back(ns);
    }
    EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
}

TEST(Category, NerveFacesAndDegeneraciesSatisfyIdentities) {
    for (const auto& c : corpus())
        for (int n = 1; n <= 3; ++n)
            for (const auto& x : nerve_simplices(c, n)) {
                for (int i = 0; i <= n && n >= 2; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        EXPECT_EQ(nerve_face(c, nerve_face(c, x, j), i), nerve_face(c, nerve_face(c, x, i), j - 1));
                for (int i = 0; i <= n; ++i) {
                    const auto y = nerve_degeneracy(c, x, i);
                    EXPECT_EQ(nerve_face(c, y, i), x);
                    EXPECT_EQ(nerve_face(c, y, i + 1), x);
                }
            }
}

TEST(Category, LoopFreedom) {
    EXPECT_TRUE(is_loop_free(categories::span()));
    EXPECT_FALSE(is_loop_free(categories::cyclic_group(2)));
    EXPECT_TRUE(is_loop_free(categories::linear_order(2)));
    const auto w = loop_witness(categories::cyclic_group(2));
    ASSERT_TRUE(w.has_value());
    EXPECT_NE(w->find("g1"), std::string::npos);
}

TEST(Category, CycleOfObjectsIsALoop) {
    // Two objects with arrows both ways composing to identities.
    const FiniteCategory c({"x", "y"}, {{"id_x", "x", "x"}, {"id_y", "y", "y"}, {"f", "x", "y"}, {"g", "y", "x"}},
                           {{"x", "id_x"}, {"y", "id_y"}}, {{"g", "f", "id_x"}, {"f", "g", "id_y"}});
    EXPECT_FALSE(is_loop_free(c));
    EXPECT_THROW(nondegenerate_dimension(c), Error);
}

TEST(Category, LoopFreeNondegenerateDimensionBound) {
    for (const auto& c : corpus()) {
        if (!is_loop_free(c)) continue;
        const int bound = static_cast<int>(c.object_count()) - 1;
        EXPECT_LE(nondegenerate_dimension(c), bound);
        EXPECT_TRUE(nondegenerate_nerve_simplices(c, bound + 1).empty());
        int highest = 0;
        for (int n = 0; n <= bound; ++n)
            if (!nondegenerate_nerve_simplices(c, n).empty()) highest = n;
        EXPECT_EQ(nondegenerate_dimension(c), highest);
    }
}

TEST(Category, RejectsBrokenTables) {
    EXPECT_THROW(FiniteCategory({"x"}, {{"id_x", "x", "x"}, {"g", "x", "x"}}, {{"x", "id_x"}}, {}), Error);
    EXPECT_THROW(FiniteCategory({"x"}, {{"id_x", "x", "x"}}, {{"x", "nope"}}, {}), Error);
    // g g = id but then associativity with h fails when h g = g and g h = id.
    EXPECT_THROW(FiniteCategory({"x"}, {{"e", "x", "x"}, {"g", "x", "x"}, {"h", "x", "x"}}, {{"x", "e"}},
                                {{"g", "g", "e"}, {"h", "h", "h"}, {"g", "h", "e"}, {"h", "g", "g"}}),
                 Error);
}

TEST(Category, ConstantDiagramIsValid) {
    const auto f = constant_diagram(categories::span(), C::free(Z{}, 0));
    EXPECT_TRUE(validate(f).empty());
}

TEST(Category, PlantedCompositionFailureNamesThePair) {
    const Z z;
    const auto c = categories::linear_order(2);
    const auto one = C::free(z, 0);
    auto f = constant_diagram(c, one);
    f.morphisms[c.morphism_index("0<2")] = Map(one, one, {{0, Matrix<Z>::from_integers(z, {{2}})}});
    const auto v = validate(f);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_NE(v[0].find("(0<1, 1<2)"), std::string::npos) << v[0];
    EXPECT_THROW(require_valid(f), Error);
}

TEST(Category, WrongIdentityNamesTheObject) {
    const Z z;
    const auto c = categories::span();
    const auto one = C::free(z, 0);
    auto f = constant_diagram(c, one);
    f.morphisms[c.identity(c.object_index("b"))] = Map(one, one, {{0, Matrix<Z>::from_integers(z, {{-1}})}});
    const auto v = validate(f);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_NE(v[0].find("F(b)"), std::string::npos) << v[0];
}

TEST(Category, MismatchedShapesAreReported) {
    const Z z;
    const auto c = categories::span();
    auto f = constant_diagram(c, C::free(z, 0));
    f.objects[c.object_index("a")] = C::free(z, 1);
    EXPECT_FALSE(validate(f).empty());
}

TEST(Category, UnknownNamesThrowResolution) {
    const auto c = categories::span();
    try {
        c.object_index("q");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Resolution);
    }
}

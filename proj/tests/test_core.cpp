#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "razors/core.hpp"

using namespace razors;

TEST(VertexSet, BitPackingRoundTrips) {
    EXPECT_EQ(vs_bit(1), 1u);
    EXPECT_EQ(vs_bit(3), 4u);
    VertexSet s = vs_of({2, 5, 7});
    EXPECT_TRUE(vs_contains(s, 2));
    EXPECT_TRUE(vs_contains(s, 5));
    EXPECT_TRUE(vs_contains(s, 7));
    EXPECT_FALSE(vs_contains(s, 1));
    EXPECT_EQ(vs_size(s), 3);
    EXPECT_EQ(vs_first(s), 2);
    s = vs_remove(s, 5);
    EXPECT_EQ(vs_to_vector(s), (std::vector<int>{2, 7}));
    s = vs_add(s, 1);
    EXPECT_EQ(vs_to_vector(s), (std::vector<int>{1, 2, 7}));
    EXPECT_EQ(vs_of(std::vector<int>{7, 2, 1}), s);
}

TEST(VertexSet, AllCoversExactlyOneThroughM) {
    for (int m = 0; m <= 8; ++m) {
        const VertexSet s = vs_all(m);
        EXPECT_EQ(vs_size(s), m);
        for (int v = 1; v <= m; ++v) EXPECT_TRUE(vs_contains(s, v));
        EXPECT_FALSE(vs_contains(s, m + 1));
    }
}

TEST(VertexSet, ForEachVisitsAscending) {
    std::vector<int> seen;
    vs_for_each(vs_of({6, 1, 4}), [&](int v) { seen.push_back(v); });
    EXPECT_EQ(seen, (std::vector<int>{1, 4, 6}));
    seen.clear();
    vs_for_each(vs_empty, [&](int v) { seen.push_back(v); });
    EXPECT_TRUE(seen.empty());
}

TEST(VertexSet, SubsetEnumerationIsExactAndAscending) {
    const VertexSet mask = vs_of({1, 3, 4, 6});
    std::vector<VertexSet> subs;
    vs_for_each_subset(mask, [&](VertexSet sub) { subs.push_back(sub); });
    ASSERT_EQ(subs.size(), 16u);
    EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end()));
    std::set<VertexSet> unique(subs.begin(), subs.end());
    EXPECT_EQ(unique.size(), subs.size());
    for (VertexSet sub : subs) EXPECT_EQ(sub & ~mask, 0u);
    EXPECT_EQ(subs.front(), vs_empty);
    EXPECT_EQ(subs.back(), mask);
}

TEST(VertexSet, EmptyMaskHasOneSubset) {
    int count = 0;
    vs_for_each_subset(vs_empty, [&](VertexSet sub) {
        EXPECT_EQ(sub, vs_empty);
        ++count;
    });
    EXPECT_EQ(count, 1);
}

TEST(VertexSet, CanonicalOrderIsSizeThenLexicographic) {
    EXPECT_LT(vs_compare_canonical(vs_empty, vs_of({1})), 0);
    EXPECT_LT(vs_compare_canonical(vs_of({3}), vs_of({1, 2})), 0);
    EXPECT_LT(vs_compare_canonical(vs_of({1, 4}), vs_of({2, 3})), 0);
    EXPECT_GT(vs_compare_canonical(vs_of({2, 3}), vs_of({1, 4})), 0);
    EXPECT_EQ(vs_compare_canonical(vs_of({2, 5}), vs_of({2, 5})), 0);

    // Strict weak order: sorting a shuffled list of all subsets of {1..4}
    // is deterministic and starts at {} and ends at the largest 4-set.
    std::vector<VertexSet> sets;
    vs_for_each_subset(vs_all(4), [&](VertexSet s) { sets.push_back(s); });
    std::reverse(sets.begin(), sets.end());
    std::sort(sets.begin(), sets.end(),
              [](VertexSet a, VertexSet b) { return vs_compare_canonical(a, b) < 0; });
    EXPECT_EQ(sets.front(), vs_empty);
    EXPECT_EQ(sets.back(), vs_all(4));
    for (std::size_t k = 1; k < sets.size(); ++k)
        EXPECT_LT(vs_compare_canonical(sets[k - 1], sets[k]), 0);
}

TEST(VertexSet, Rendering) {
    EXPECT_EQ(vs_to_string(vs_empty), "{}");
    EXPECT_EQ(vs_to_string(vs_of({3})), "{3}");
    EXPECT_EQ(vs_to_string(vs_of({4, 1, 2})), "{1,2,4}");
}

TEST(Require, ThrowsWithMessage) {
    EXPECT_NO_THROW(require(true, "unused"));
    try {
        require(false, "the reason");
        FAIL() << "require(false, ...) must throw";
    } catch (const std::invalid_argument& e) {
        EXPECT_STREQ(e.what(), "the reason");
    }
}

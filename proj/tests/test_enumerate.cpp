// Exhaustive graph enumeration checked against the inclusion-exclusion
// recurrence for labelled-acyclic-digraph counts, plus the order-driven and
// single-statement constructions.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "razors/dag.hpp"
#include "razors/enumerate.hpp"
#include "razors/independence.hpp"

namespace razors {
namespace {

long long binomial(int n, int k) {
    long long out = 1;
    for (int t = 1; t <= k; ++t) out = out * (n - k + t) / t;
    return out;
}

// a(m) = sum_{k=1..m} (-1)^{k+1} C(m,k) 2^{k(m-k)} a(m-k), a(0) = 1: counts
// labelled acyclic digraphs by inclusion-exclusion over the set of sinks.
std::vector<long long> acyclic_counts(int up_to) {
    std::vector<long long> a(static_cast<std::size_t>(up_to) + 1, 0);
    a[0] = 1;
    for (int m = 1; m <= up_to; ++m) {
        long long total = 0;
        for (int k = 1; k <= m; ++k) {
            const long long term = binomial(m, k) * (1LL << (k * (m - k))) *
                                   a[static_cast<std::size_t>(m - k)];
            total += (k % 2 == 1) ? term : -term;
        }
        a[static_cast<std::size_t>(m)] = total;
    }
    return a;
}

TEST(Enumeration, RecurrenceReproducesKnownCounts) {
    const std::vector<long long> a = acyclic_counts(6);
    EXPECT_EQ(a[1], 1);
    EXPECT_EQ(a[2], 3);
    EXPECT_EQ(a[3], 25);
    EXPECT_EQ(a[4], 543);
    EXPECT_EQ(a[5], 29281);
    EXPECT_EQ(a[6], 3781503);
}

TEST(Enumeration, MaskListsMatchTheRecurrence) {
    const std::vector<long long> a = acyclic_counts(5);
    for (int m = 1; m <= 5; ++m) {
        const std::vector<std::uint64_t> masks = all_dag_masks(m);
        EXPECT_EQ(static_cast<long long>(masks.size()), a[static_cast<std::size_t>(m)]) << m;
        EXPECT_TRUE(std::is_sorted(masks.begin(), masks.end()));
        EXPECT_EQ(std::adjacent_find(masks.begin(), masks.end()), masks.end());
    }
    EXPECT_THROW(all_dag_masks(0), std::invalid_argument);
    EXPECT_THROW(all_dag_masks(kEnumerationCeiling + 1), std::invalid_argument);
}

TEST(Enumeration, CeilingCountMatchesTheRecurrence) {
    EXPECT_EQ(static_cast<long long>(all_dag_masks(6).size()), acyclic_counts(6)[6]);
}

TEST(Enumeration, MasksRoundTripThroughGraphs) {
    for (int m = 1; m <= 4; ++m)
        for (const std::uint64_t mask : all_dag_masks(m))
            EXPECT_EQ(Dag::from_arc_mask(m, mask).arc_mask(), mask);
}

TEST(Enumeration, VisitorAgreesWithTheList) {
    std::vector<std::uint64_t> visited;
    for_each_dag(3, [&](const Dag& g) { visited.push_back(g.arc_mask()); });
    EXPECT_EQ(visited, all_dag_masks(3));
    EXPECT_EQ(enumerate_dags(4).size(), 543u);
}

TEST(OrderDrivenConstruction, TopologicalOrderRecoversTheGraph) {
    for_each_dag(4, [&](const Dag& g) {
        const IndependenceModel model = independence_model_of_dag(g);
        const Dag rebuilt = permutation_dag(g.topological_order(), model);
        EXPECT_EQ(rebuilt.arc_mask(), g.arc_mask()) << g.to_text();
    });
}

TEST(OrderDrivenConstruction, AnyOrderYieldsAMarkovianGraph) {
    std::mt19937_64 rng(2026);
    for_each_dag(4, [&](const Dag& g) {
        const IndependenceModel model = independence_model_of_dag(g);
        std::vector<int> order{1, 2, 3, 4};
        std::shuffle(order.begin(), order.end(), rng);
        const Dag built = permutation_dag(order, model);
        EXPECT_TRUE(is_markovian(built, model)) << g.to_text();
    });
}

TEST(OrderDrivenConstruction, RejectsMalformedOrders) {
    const IndependenceModel model(3);
    EXPECT_THROW(permutation_dag({1, 2}, model), std::invalid_argument);
    EXPECT_THROW(permutation_dag({1, 2, 2}, model), std::invalid_argument);
    EXPECT_THROW(permutation_dag({1, 2, 4}, model), std::invalid_argument);
}

// The dedicated construction realises each statement exactly: its graph
// entails the requested independence and nothing else.
TEST(SingleStatementConstruction, RealisesEachStatementExactly) {
    for (int m = 2; m <= 5; ++m) {
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                const VertexSet rest = vs_remove(vs_remove(vs_all(m), i), j);
                vs_for_each_subset(rest, [&](VertexSet s) {
                    const CiStatement stmt(i, j, s);
                    const Dag g = single_ci_dag(m, stmt);
                    const IndependenceModel entailed = independence_model_of_dag(g);
                    ASSERT_EQ(entailed, IndependenceModel(m, {stmt}))
                        << "m=" << m << " " << stmt.to_string() << "\n" << g.to_text();
                });
            }
    }
}

TEST(SingleStatementConstruction, RejectsOutOfRangeStatements) {
    EXPECT_THROW(single_ci_dag(3, CiStatement(1, 4, vs_empty)), std::invalid_argument);
    EXPECT_THROW(single_ci_dag(3, CiStatement(1, 2, vs_of({4}))), std::invalid_argument);
}

}  // namespace
}  // namespace razors

// Conditional-independence statements, models, and Markov-equivalence tests.

#include <gtest/gtest.h>

#include <map>

#include "razors/dag.hpp"
#include "razors/enumerate.hpp"
#include "razors/independence.hpp"

namespace razors {
namespace {

TEST(CiStatement, CanonicalisesPairOrder) {
    const CiStatement a(3, 1, vs_of({2}));
    EXPECT_EQ(a.i, 1);
    EXPECT_EQ(a.j, 3);
    EXPECT_EQ(a.s, vs_of({2}));
    EXPECT_EQ(a, CiStatement(1, 3, vs_of({2})));
}

TEST(CiStatement, RejectsDegeneratePairs) {
    EXPECT_THROW(CiStatement(2, 2, vs_empty), std::invalid_argument);
    EXPECT_THROW(CiStatement(1, 3, vs_of({1})), std::invalid_argument);
    EXPECT_THROW(CiStatement(1, 3, vs_of({3})), std::invalid_argument);
}

TEST(CiStatement, OrdersByPairThenCanonicalSet) {
    EXPECT_LT(CiStatement(1, 2, vs_empty), CiStatement(1, 3, vs_empty));
    EXPECT_LT(CiStatement(1, 3, vs_empty), CiStatement(2, 3, vs_empty));
    EXPECT_LT(CiStatement(1, 3, vs_empty), CiStatement(1, 3, vs_of({2})));
    EXPECT_LT(CiStatement(1, 4, vs_of({3})), CiStatement(1, 4, vs_of({2, 3})));
}

TEST(CiStatement, RendersReadably) {
    EXPECT_EQ(CiStatement(1, 3, vs_empty).to_string(), "<X1,X3>");
    EXPECT_EQ(CiStatement(1, 3, vs_of({2})).to_string(), "<X1,X3|{2}>");
}

TEST(IndependenceModel, InsertContainsAndBounds) {
    IndependenceModel model(3);
    EXPECT_TRUE(model.empty());
    model.insert(CiStatement(1, 3, vs_of({2})));
    EXPECT_EQ(model.size(), 1u);
    EXPECT_TRUE(model.contains(3, 1, vs_of({2})));
    EXPECT_FALSE(model.contains(1, 2, vs_empty));
    EXPECT_THROW(model.insert(CiStatement(1, 4, vs_empty)), std::invalid_argument);
    EXPECT_THROW(model.insert(CiStatement(1, 2, vs_of({4}))), std::invalid_argument);
}

TEST(IndependenceModel, DagModelsMatchHandDerivations) {
    const Dag chain(3, {{1, 2}, {2, 3}});
    EXPECT_EQ(independence_model_of_dag(chain),
              IndependenceModel(3, {CiStatement(1, 3, vs_of({2}))}));

    const Dag collider(3, {{1, 3}, {2, 3}});
    EXPECT_EQ(independence_model_of_dag(collider),
              IndependenceModel(3, {CiStatement(1, 2, vs_empty)}));

    const Dag empty(3);
    IndependenceModel all(3);
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            const VertexSet rest = vs_remove(vs_remove(vs_all(3), i), j);
            vs_for_each_subset(rest, [&](VertexSet s) { all.insert(CiStatement(i, j, s)); });
        }
    EXPECT_EQ(independence_model_of_dag(empty), all);
}

TEST(IndependenceModel, MarkovAndFaithfulVerdicts) {
    const Dag chain(3, {{1, 2}, {2, 3}});
    const IndependenceModel chain_model = independence_model_of_dag(chain);
    EXPECT_TRUE(is_markovian(chain, chain_model));
    EXPECT_TRUE(is_faithful(chain, chain_model));

    // The complete graph entails nothing, so it satisfies any model's Markov
    // condition; it is faithful only to the empty model.
    const Dag complete(3, {{1, 2}, {1, 3}, {2, 3}});
    EXPECT_TRUE(is_markovian(complete, chain_model));
    EXPECT_FALSE(is_faithful(complete, chain_model));
    const IndependenceModel unfaithful = unfaithful_set(complete, chain_model);
    EXPECT_EQ(unfaithful.size(), 1u);
    EXPECT_TRUE(unfaithful.contains(1, 3, vs_of({2})));

    // The empty graph entails independences the chain model lacks.
    const Dag empty(3);
    const auto violation = markov_violation(empty, chain_model);
    ASSERT_TRUE(violation.has_value());
    EXPECT_FALSE(chain_model.contains(*violation));
    EXPECT_THROW(unfaithful_set(empty, chain_model), std::invalid_argument);
}

TEST(IndependenceModel, DifferenceListsMissingStatements) {
    const IndependenceModel big(3, {CiStatement(1, 3, vs_empty), CiStatement(1, 3, vs_of({2}))});
    const IndependenceModel small(3, {CiStatement(1, 3, vs_of({2}))});
    const auto diff = big.difference(small);
    ASSERT_EQ(diff.size(), 1u);
    EXPECT_EQ(diff[0], CiStatement(1, 3, vs_empty));
    EXPECT_TRUE(small.difference(big).empty());
    EXPECT_TRUE(model_subset(small, big));
    EXPECT_FALSE(model_subset(big, small));
}

// Structural equivalence (same skeleton, same unshielded colliders) must
// coincide with having identical entailed independence models.
TEST(MarkovEquivalence, MatchesModelEqualityExhaustively) {
    const int m = 4;
    const std::vector<Dag> dags = enumerate_dags(m);
    std::vector<IndependenceModel> models;
    models.reserve(dags.size());
    for (const Dag& g : dags) models.push_back(independence_model_of_dag(g));
    long long equivalent_pairs = 0;
    for (std::size_t a = 0; a < dags.size(); ++a)
        for (std::size_t b = a + 1; b < dags.size(); ++b) {
            const bool structural = markov_equivalent(dags[a], dags[b]);
            const bool semantic = models[a] == models[b];
            ASSERT_EQ(structural, semantic)
                << dags[a].to_text() << "--\n" << dags[b].to_text();
            if (structural) ++equivalent_pairs;
        }
    EXPECT_GT(equivalent_pairs, 0);
}

// Removing edges can only grow the entailed independence model.
TEST(MarkovEquivalence, EdgeDeletionGrowsTheModel) {
    for_each_dag(4, [&](const Dag& g) {
        const IndependenceModel ig = independence_model_of_dag(g);
        for (const auto& [j, k] : g.edges()) {
            const Dag h = g.without_edge(j, k);
            EXPECT_TRUE(model_subset(ig, independence_model_of_dag(h)))
                << g.to_text() << "minus " << Dag::edge_name(j, k);
        }
    });
}

}  // namespace
}  // namespace razors

// Model-based and data-based scores: the edge-count score, deterministic
// sampling, the penalised likelihood, and the repeated-draw comparison.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "razors/scoring.hpp"

namespace razors {
namespace {

ThetaTable theta(int vertex, VertexSet parents, std::vector<std::vector<Rational>> rows) {
    return ThetaTable{vertex, parents, std::move(rows)};
}

// A three-vertex chain with strong dependence along each edge.
MultinomialModel chain_truth() {
    const Dag g(3, {{1, 2}, {2, 3}});
    return MultinomialModel(
        g, RangeSpec({2, 2, 2}),
        {theta(1, 0, {{Rational(2, 5), Rational(3, 5)}}),
         theta(2, vs_of({1}), {{Rational(9, 10), Rational(1, 10)}, {Rational(1, 5), Rational(4, 5)}}),
         theta(3, vs_of({2}),
               {{Rational(4, 5), Rational(1, 5)}, {Rational(1, 10), Rational(9, 10)}})});
}

TEST(EdgeCountScore, MarkovianGraphsScoreTheirNegatedEdgeCount) {
    const IndependenceModel model = independence_model_of_dag(Dag(3, {{1, 2}, {2, 3}}));
    const NecScore chain = nec(Dag(3, {{1, 2}, {2, 3}}), model);
    EXPECT_TRUE(chain.markovian);
    EXPECT_EQ(chain.edges, 2);
    EXPECT_EQ(chain.value(), -2.0);
    EXPECT_FALSE(chain.violation.has_value());

    const NecScore complete = nec(Dag(3, {{1, 2}, {1, 3}, {2, 3}}), model);
    EXPECT_TRUE(complete.markovian);
    EXPECT_EQ(complete.value(), -3.0);

    const NecScore empty = nec(Dag(3), model);
    EXPECT_FALSE(empty.markovian);
    EXPECT_EQ(empty.value(), -std::numeric_limits<double>::infinity());
    ASSERT_TRUE(empty.violation.has_value());
    EXPECT_FALSE(model.contains(*empty.violation));
}

TEST(Dataset, TextRoundTripsExactly) {
    const Dataset data{RangeSpec({2, 3}), {{0, 2}, {1, 0}, {1, 1}}, "hand-made"};
    const Dataset back = Dataset::parse_text(data.to_text());
    EXPECT_EQ(back.ranges, data.ranges);
    EXPECT_EQ(back.rows, data.rows);
    EXPECT_EQ(back.provenance, data.provenance);
    EXPECT_EQ(back.to_text(), data.to_text());
}

TEST(Dataset, ParserRejectsMalformedText) {
    EXPECT_THROW(Dataset::parse_text("n: 0\n"), std::invalid_argument);
    EXPECT_THROW(Dataset::parse_text("ranges: [2, 2]\nn: 2\n0 0\n"), std::invalid_argument);
    EXPECT_THROW(Dataset::parse_text("ranges: [2, 2]\nn: 1\n0 2\n"), std::invalid_argument);
    EXPECT_THROW(Dataset::parse_text("ranges: [2, 2]\nn: 1\n0\n"), std::invalid_argument);
    EXPECT_THROW(Dataset::parse_text("0 0\nranges: [2, 2]\nn: 1\n"), std::invalid_argument);
}

// Re-derive the documented draw scheme from scratch and compare records.
TEST(Sampler, FollowsItsPublishedContract) {
    EXPECT_STREQ(kSamplerContract, "mt19937_64/u53/v1");
    const JointTable joint = joint_from_model(chain_truth());
    const long long n = 50;
    const std::uint64_t seed = 7;
    const Dataset data = sample(joint, n, seed);
    ASSERT_EQ(data.n(), n);
    EXPECT_NE(data.provenance.find("seed=7"), std::string::npos);
    EXPECT_NE(data.provenance.find(kSamplerContract), std::string::npos);

    std::vector<double> cumulative;
    double acc = 0.0;
    for (const Rational& p : joint.probabilities()) {
        acc += rational_to_double(p);
        cumulative.push_back(acc);
    }
    cumulative.back() = 1.0;
    std::mt19937_64 rng(seed);
    for (long long t = 0; t < n; ++t) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        std::size_t pick = 0;
        while (u >= cumulative[pick]) ++pick;
        EXPECT_EQ(data.rows[static_cast<std::size_t>(t)],
                  joint.ranges().decode(vs_all(3), static_cast<long long>(pick)))
            << "record " << t;
    }
}

TEST(Sampler, IsDeterministicPerSeedAndSeedSensitive) {
    const JointTable joint = joint_from_model(chain_truth());
    const Dataset a = sample(joint, 40, 123);
    const Dataset b = sample(joint, 40, 123);
    EXPECT_EQ(a.rows, b.rows);
    const Dataset c = sample(joint, 40, 124);
    EXPECT_NE(a.rows, c.rows);
    EXPECT_THROW(sample(joint, -1, 0), std::invalid_argument);
    EXPECT_EQ(sample(joint, 0, 0).n(), 0);
}

TEST(Sampler, FrequenciesTrackTheJoint) {
    const JointTable joint = joint_from_model(chain_truth());
    const Dataset data = sample(joint, 4000, 2026);
    // P(X1 = 1) is 3/5; the draw should land near 2400.
    long long ones = 0;
    for (const auto& row : data.rows) ones += row[0];
    EXPECT_NEAR(static_cast<double>(ones), 2400.0, 200.0);
}

TEST(PenalisedScore, DecomposesAndMatchesHandComputation) {
    const Dataset data{RangeSpec({2, 2}), {{0, 0}, {0, 1}, {0, 0}, {1, 1}}, ""};
    const Dag g(2, {{1, 2}});
    const BicBreakdown out = bic(g, data);
    ASSERT_EQ(out.terms.size(), 2u);
    EXPECT_EQ(out.n, 4);
    double total = 0.0;
    for (const BicVertexTerm& t : out.terms) total += t.contribution;
    EXPECT_DOUBLE_EQ(out.total, total);

    // Vertex 1: three zeros and a one.
    const double l1 = 3 * std::log(3.0 / 4.0) + std::log(1.0 / 4.0);
    EXPECT_NEAR(out.terms[0].loglik, l1, 1e-12);
    EXPECT_EQ(out.terms[0].params, 1);
    // Vertex 2 given vertex 1: config 0 splits 2/1, config 1 is pure.
    const double l2 = 2 * std::log(2.0 / 3.0) + std::log(1.0 / 3.0) + std::log(1.0);
    EXPECT_NEAR(out.terms[1].loglik, l2, 1e-12);
    EXPECT_EQ(out.terms[1].params, 2);
    EXPECT_NEAR(out.total, 2 * (l1 + l2) - 3 * std::log(4.0), 1e-12);
}

TEST(PenalisedScore, UnobservedParentRowsContributeNothing) {
    const Dataset data{RangeSpec({2, 2}), {{0, 0}, {0, 1}, {0, 1}}, ""};
    const BicBreakdown out = bic(Dag(2, {{1, 2}}), data);
    ASSERT_EQ(out.terms[1].empty_parent_rows.size(), 1u);
    EXPECT_EQ(out.terms[1].empty_parent_rows[0], 1);
    EXPECT_TRUE(std::isfinite(out.total));
    // The penalty still counts the structural parameters of the empty row.
    EXPECT_EQ(out.terms[1].params, 2);
}

TEST(PenalisedScore, PenaltyIsLinearInItsWeight) {
    const JointTable joint = joint_from_model(chain_truth());
    const Dataset data = sample(joint, 500, 9);
    const Dag g(3, {{1, 2}, {2, 3}});
    const double at1 = bic(g, data, 1.0).total;
    const double at2 = bic(g, data, 2.0).total;
    const long long k = param_count(g, data.ranges);
    EXPECT_NEAR(at1 - at2, static_cast<double>(k) * std::log(500.0), 1e-9);
    EXPECT_THROW(bic(g, Dataset{RangeSpec({2, 2, 2}), {}, ""}), std::invalid_argument);
}

TEST(PenalisedScore, PrefersTheTruthOverAMissingEdge) {
    const JointTable joint = joint_from_model(chain_truth());
    const Dag truth(3, {{1, 2}, {2, 3}});
    for (const std::uint64_t seed : {1u, 2u, 3u}) {
        const Dataset data = sample(joint, 5000, seed);
        EXPECT_GT(bic(truth, data).total, bic(Dag(3), data).total) << "seed " << seed;
        EXPECT_GT(bic(truth, data).total, bic(Dag(3, {{1, 2}}), data).total) << "seed " << seed;
    }
}

TEST(Probe, SummarisesCandidatePairsAcrossDraws) {
    const MultinomialModel truth = chain_truth();
    const std::vector<ProbeCandidate> candidates{
        {"truth", Dag(3, {{1, 2}, {2, 3}})},
        {"empty", Dag(3)},
        {"complete", Dag(3, {{1, 2}, {1, 3}, {2, 3}})}};
    const ProbeReport report =
        consistency_probe(candidates, truth, {500, 2000}, {11, 12});
    ASSERT_EQ(report.cells.size(), 4u);
    for (const ProbeCell& cell : report.cells) ASSERT_EQ(cell.bic_totals.size(), 3u);
    ASSERT_EQ(report.nec_scores.size(), 3u);
    EXPECT_TRUE(report.nec_scores[0].markovian);
    EXPECT_FALSE(report.nec_scores[1].markovian);
    EXPECT_TRUE(report.nec_scores[2].markovian);
    EXPECT_EQ(report.param_counts[0], 5);
    EXPECT_EQ(report.param_counts[1], 3);
    EXPECT_EQ(report.param_counts[2], 7);

    for (const ProbePairSummary& pair : report.pairs) {
        EXPECT_EQ(pair.trials, 4u);
        if (pair.first == 0 && pair.second == 1) {
            // Only the first candidate is Markovian.
            EXPECT_EQ(pair.clause, 'a');
            EXPECT_EQ(pair.first_preferred, 4u);
        }
        if (pair.first == 0 && pair.second == 2) {
            // Both Markovian; the first is strictly leaner.
            EXPECT_EQ(pair.clause, 'b');
            EXPECT_GE(pair.first_preferred, 3u);
        }
        if (pair.first == 2 && pair.second == 0) {
            EXPECT_EQ(pair.clause, '-');
        }
    }
}

}  // namespace
}  // namespace razors

// Shows two scoring rules disagreeing on the same data: the edge-count
// score prefers the sparser true graph, while the penalised likelihood
// score drifts to the rival with fewer parameters as the sample grows.

#include <cstdio>

#include "razors/catalog.hpp"
#include "razors/scoring.hpp"

using namespace razors;

int main() {
    const CatalogEntry& e = catalog_entry("E4");
    const Dag& g0 = e.dag("G0");
    const Dag& g1 = e.dag("G1");
    const IndependenceModel& model = *e.expected_independences;
    const JointTable joint = joint_from_model(*e.model);

    const NecScore n0 = nec(g0, model);
    const NecScore n1 = nec(g1, model);
    std::printf("edge-count score (population):\n");
    std::printf("  G0: %d edges, score %g\n", n0.edges, n0.value());
    std::printf("  G1: %d edges, score %g\n", n1.edges, n1.value());
    std::printf("  parameters: G0 has %lld, G1 has %lld\n\n", param_count(g0, *e.ranges),
                param_count(g1, *e.ranges));

    std::printf("penalised likelihood score across sample sizes (seed 7):\n");
    for (const long long n : {100LL, 1000LL, 10000LL, 100000LL}) {
        const Dataset data = sample(joint, n, 7, "dilemma");
        const double b0 = bic(g0, data).total;
        const double b1 = bic(g1, data).total;
        std::printf("  n=%-7lld  G0 %14.3f   G1 %14.3f   winner %s\n", n, b0, b1,
                    b0 > b1 ? "G0" : "G1");
    }
    std::printf("\nboth graphs fit the distribution exactly, so the parameter\n"
                "penalty decides in the large-sample limit while the edge count\n"
                "keeps preferring the graph with fewer arrows.\n");
    return 0;
}

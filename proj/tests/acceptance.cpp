// Acceptance gate: ten self-contained checks, one PASS/FAIL line each.
// Exits non-zero when any check fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "razors/catalog.hpp"
#include "razors/closure.hpp"
#include "razors/enumerate.hpp"
#include "razors/hierarchy.hpp"
#include "razors/imset.hpp"
#include "razors/scoring.hpp"
#include "razors/transforms.hpp"

namespace razors {
namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome pass_with(std::string detail) { return {true, std::move(detail)}; }
Outcome fail_with(std::string detail) { return {false, std::move(detail)}; }

std::vector<RangeSpec> random_specs(int m, int count, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> range_dist(2, 4);
    std::vector<RangeSpec> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) {
        std::vector<int> ranges(static_cast<std::size_t>(m));
        for (int& r : ranges) r = range_dist(rng);
        out.emplace_back(std::move(ranges));
    }
    return out;
}

// ---- criterion 1: exact conditionals of the worked examples ---------------

Outcome criterion_conditionals() {
    const struct {
        const char* id;
        Rational expected;
    } uniform_cases[] = {{"E1", Rational(3, 10)}, {"E2", Rational(3, 40)}, {"E3", Rational(67, 100)}};
    long long checked = 0;
    for (const auto& c : uniform_cases) {
        const CatalogEntry& e = catalog_entry(c.id);
        if (!e.model || e.conditionals.empty())
            return fail_with(std::string(c.id) + " lacks a model or conditional expectations");
        const JointTable joint = joint_from_model(*e.model);
        for (const ConditionalCheck& q : e.conditionals) {
            if (q.expected != c.expected)
                return fail_with(std::string(c.id) + " declares " + q.describe() + " = " +
                                 rational_to_string(q.expected) + ", expected " +
                                 rational_to_string(c.expected));
            if (conditional_probability(joint, q) != q.expected)
                return fail_with(std::string(c.id) + " recomputation disagrees for " + q.describe());
            ++checked;
        }
    }

    const CatalogEntry& e4 = catalog_entry("E4");
    const JointTable joint4 = joint_from_model(*e4.model);
    const std::vector<Rational> pair_values{Rational(1, 4), Rational(1, 5), Rational(21, 125),
                                            Rational(11, 50)};
    if (e4.conditionals.size() != 8) return fail_with("E4 should carry eight conditionals");
    for (std::size_t k = 0; k < 4; ++k) {
        const ConditionalCheck& a = e4.conditionals[2 * k];
        const ConditionalCheck& b = e4.conditionals[2 * k + 1];
        if (a.expected != pair_values[k] || b.expected != pair_values[k])
            return fail_with("E4 pair " + std::to_string(k) + " does not expect " +
                             rational_to_string(pair_values[k]));
        if (conditional_probability(joint4, a) != a.expected ||
            conditional_probability(joint4, b) != b.expected)
            return fail_with("E4 recomputation disagrees for " + a.describe());
        checked += 2;
    }
    return pass_with(std::to_string(checked) + " conditional values exact");
}

// ---- criterion 2: exact independence-model extraction ---------------------

Outcome criterion_extraction() {
    const CatalogEntry& e1 = catalog_entry("E1");
    const IndependenceModel e1_extracted = extract_independence_model(*e1.model);
    const IndependenceModel e1_expected(
        3, {CiStatement(1, 3, vs_empty), CiStatement(1, 3, vs_of({2}))});
    if (e1_extracted != e1_expected) return fail_with("E1 extraction mismatch");

    int entries = 0;
    for (const CatalogEntry& e : catalog()) {
        if (!e.model || !e.expected_independences) continue;
        const IndependenceModel extracted = extract_independence_model(*e.model);
        if (extracted != *e.expected_independences)
            return fail_with(e.id + " extraction disagrees with the declared model");
        if (e.declared_ci_count &&
            static_cast<int>(extracted.size()) != *e.declared_ci_count)
            return fail_with(e.id + " extraction has " + std::to_string(extracted.size()) +
                             " statements, declared " + std::to_string(*e.declared_ci_count));
        ++entries;
    }
    const CatalogEntry& e4 = catalog_entry("E4");
    if (!e4.declared_ci_count || *e4.declared_ci_count != 28)
        return fail_with("E4 should declare 28 statements");
    return pass_with(std::to_string(entries) + " models extracted exactly, E4 with 28 statements");
}

// ---- criterion 3: parameter counts via both routes ------------------------

Outcome criterion_param_counts() {
    const struct {
        const char* id;
        const char* dag;
        long long expected;
    } cases[] = {{"FIG1", "G*", 21}, {"FIG1", "G'", 23}, {"E1", "G0", 8},  {"E1", "G1", 10},
                 {"E3", "G*", 9},    {"E3", "G'", 14},   {"E4", "G0", 37}, {"E4", "G1", 35}};
    for (const auto& c : cases) {
        const CatalogEntry& e = catalog_entry(c.id);
        if (!e.ranges) return fail_with(std::string(c.id) + " lacks ranges");
        const Dag& g = e.dag(c.dag);
        const long long direct = param_count(g, *e.ranges);
        const long long via_sets = param_count_via_imset(g, *e.ranges);
        if (direct != c.expected || via_sets != c.expected)
            return fail_with(std::string(c.id) + " " + c.dag + ": direct " +
                             std::to_string(direct) + ", set-function " + std::to_string(via_sets) +
                             ", expected " + std::to_string(c.expected));
    }
    // The one recorded discrepancy: an alternate count of 13 is on file for
    // the graph whose recomputed count is 14.
    const CatalogEntry& e3 = catalog_entry("E3");
    const auto alt = e3.alternate_param_counts.find("G'");
    if (alt == e3.alternate_param_counts.end() || alt->second != 13)
        return fail_with("E3 should record the alternate count 13 for G'");
    if (param_count(e3.dag("G'"), *e3.ranges) == alt->second)
        return fail_with("the alternate count should differ from the recomputed value");
    return pass_with("8 counts exact via both routes; alternate 13 vs 14 on record");
}

// ---- criterion 4: the stored relation grid re-verifies --------------------

Outcome criterion_hierarchy() {
    const std::vector<std::string> diffs = verify_hierarchy();
    if (!diffs.empty())
        return fail_with(std::to_string(diffs.size()) + " cells disagree; first: " + diffs.front());
    return pass_with("all 169 cells verified");
}

// ---- criterion 5: theorem suite by enumeration ----------------------------

Outcome criterion_theorems() {
    struct Input {
        std::string id;
        IndependenceModel model;
        std::optional<RangeSpec> ranges;
    };
    std::vector<Input> inputs;
    for (const HierarchyInput& in : hierarchy_inputs())
        inputs.push_back({in.id, in.model, in.ranges});
    std::mt19937_64 rng(2026);
    for (int t = 0; t < 30; ++t) {
        const MultinomialModel mm = random_multinomial_model(3, rng);
        inputs.push_back({"random-3-" + std::to_string(t), extract_independence_model(mm),
                          mm.ranges()});
    }
    for (int t = 0; t < 70; ++t) {
        const MultinomialModel mm = random_multinomial_model(4, rng);
        inputs.push_back({"random-4-" + std::to_string(t), extract_independence_model(mm),
                          mm.ranges()});
    }

    const auto subset_of = [](const std::vector<std::uint64_t>& small,
                              const std::vector<std::uint64_t>& large) {
        for (const std::uint64_t mask : small)
            if (!std::binary_search(large.begin(), large.end(), mask)) return false;
        return true;
    };
    long long models = 0;
    for (const Input& in : inputs) {
        const ClassReport report(in.model, in.ranges);
        const std::vector<std::pair<RazorId, RazorId>> chain{
            {RazorId::CFC, RazorId::ResF}, {RazorId::ResF, RazorId::UFr},
            {RazorId::UFr, RazorId::Fr},   {RazorId::Fr, RazorId::Pm},
            {RazorId::Pm, RazorId::SGS},   {RazorId::SGS, RazorId::CMC},
            {RazorId::AdjF, RazorId::TriF}, {RazorId::AdjF, RazorId::Fr}};
        for (const auto& [small, large] : chain)
            if (!subset_of(report.members(small), report.members(large)))
                return fail_with(in.id + ": " + razor_name(small) + " not within " +
                                 razor_name(large));
        if (report.members(RazorId::CFC) != report.members(RazorId::UPm))
            return fail_with(in.id + ": the faithful and uniquely-maximal classes differ");
        // The resolved class is the meet of its halves.
        std::vector<std::uint64_t> meet;
        for (const std::uint64_t mask : report.members(RazorId::AdjF))
            if (std::binary_search(report.members(RazorId::OriF).begin(),
                                   report.members(RazorId::OriF).end(), mask))
                meet.push_back(mask);
        if (report.members(RazorId::ResF) != meet)
            return fail_with(in.id + ": resolved class is not the meet of its halves");
        if (in.ranges) {
            if (!subset_of(report.members(RazorId::ResF), report.members(RazorId::UParamM)))
                return fail_with(in.id + ": resF not within uParamM");
            if (!subset_of(report.members(RazorId::UParamM), report.members(RazorId::ParamM)))
                return fail_with(in.id + ": uParamM not within ParamM");
            if (!subset_of(report.members(RazorId::ParamM), report.members(RazorId::Pm)))
                return fail_with(in.id + ": ParamM not within Pm");
        }
        ++models;
    }
    return pass_with(std::to_string(models) + " models, zero violations");
}

// ---- criterion 6: the set-function identities -----------------------------

Outcome criterion_imset() {
    std::mt19937_64 rng(6);
    long long identity_checks = 0;
    for (int m = 1; m <= 5; ++m) {
        const std::vector<RangeSpec> specs = random_specs(m, 50, rng);
        for (const std::uint64_t mask : all_dag_masks(m)) {
            const Dag g = Dag::from_arc_mask(m, mask);
            for (const RangeSpec& spec : specs) {
                if (param_count_via_imset(g, spec) != param_count(g, spec))
                    return fail_with("count mismatch at m=" + std::to_string(m) + " mask " +
                                     std::to_string(mask));
                ++identity_checks;
            }
        }
    }
    // Witness uniqueness against a brute count.
    for (int m = 1; m <= 4; ++m)
        for (const std::uint64_t mask : all_dag_masks(m)) {
            const Dag g = Dag::from_arc_mask(m, mask);
            bool ok = true;
            vs_for_each_subset(vs_all(m), [&](VertexSet s) {
                if (s == 0 || !ok) return;
                int count = 0, found = 0;
                vs_for_each(s, [&](int i) {
                    if ((vs_remove(s, i) & ~g.parents(i)) == 0) {
                        ++count;
                        found = i;
                    }
                });
                if (imset_witness(g, s) != (count == 1 ? found : 0)) ok = false;
            });
            if (!ok) return fail_with("witness mismatch at m=" + std::to_string(m));
        }
    // The set function determines the equivalence class and vice versa.
    for (int m = 2; m <= 4; ++m) {
        const std::vector<Dag> dags = enumerate_dags(m);
        std::vector<std::vector<VertexSet>> sets;
        for (const Dag& g : dags) sets.push_back(parameterizing_sets(g));
        for (std::size_t a = 0; a < dags.size(); ++a)
            for (std::size_t b = a + 1; b < dags.size(); ++b)
                if ((sets[a] == sets[b]) != markov_equivalent(dags[a], dags[b]))
                    return fail_with("duality breach at m=" + std::to_string(m));
    }
    return pass_with(std::to_string(identity_checks) + " identity checks, duality exhaustive");
}

// ---- criterion 7: the transform suite -------------------------------------

Outcome validate_sequence(const ChickeringSequence& seq, const Dag& h, const Dag& g) {
    if (seq.start.arc_mask() != h.arc_mask()) return fail_with("sequence starts off the start");
    const IndependenceModel target = independence_model_of_dag(g);
    Dag cur = seq.start;
    for (const ChickeringStep& step : seq.steps) {
        const auto [j, k] = step.edge;
        if (step.is_reversal) {
            if (!is_covered_edge(cur, j, k)) return fail_with("reversal of an uncovered edge");
            if (step.result.arc_mask() != cur.with_reversed_edge(j, k).arc_mask())
                return fail_with("reversal result mismatch");
        } else {
            if (!cur.has_edge(j, k)) return fail_with("deletion of an absent edge");
            if (step.result.arc_mask() != cur.without_edge(j, k).arc_mask())
                return fail_with("deletion result mismatch");
            if (!is_markovian(step.result, target)) return fail_with("deletion left the target");
        }
        cur = step.result;
    }
    if (seq.end().arc_mask() != g.arc_mask()) return fail_with("sequence ends off the goal");
    return pass_with("");
}

Outcome criterion_transforms() {
    std::mt19937_64 rng(7);
    // Covered reversals: class membership and parameter counts survive.
    for (int m = 2; m <= 4; ++m) {
        const std::vector<RangeSpec> specs = random_specs(m, 20, rng);
        bool ok = true;
        for_each_dag(m, [&](const Dag& g) {
            if (!ok) return;
            for (const auto& [j, k] : covered_edges(g)) {
                const Dag r = reverse_covered(g, j, k);
                if (!markov_equivalent(g, r)) ok = false;
                for (const RangeSpec& spec : specs)
                    if (param_count(g, spec) != param_count(r, spec)) ok = false;
            }
        });
        if (!ok) return fail_with("reversal invariant broken at m=" + std::to_string(m));
    }
    // Equivalence classes match the brute scan.
    for (int m = 2; m <= 4; ++m) {
        const std::vector<Dag> dags = enumerate_dags(m);
        for (const Dag& g : dags) {
            std::vector<std::uint64_t> brute;
            for (const Dag& h : dags)
                if (markov_equivalent(g, h)) brute.push_back(h.arc_mask());
            std::vector<std::uint64_t> listed;
            for (const Dag& d : mec_members(g)) listed.push_back(d.arc_mask());
            if (listed != brute) return fail_with("class listing mismatch at m=" + std::to_string(m));
        }
    }
    // Stepwise reductions: exhaustive at three vertices.
    {
        const std::vector<Dag> dags = enumerate_dags(3);
        std::vector<IndependenceModel> models;
        for (const Dag& g : dags) models.push_back(independence_model_of_dag(g));
        for (std::size_t a = 0; a < dags.size(); ++a)
            for (std::size_t b = 0; b < dags.size(); ++b) {
                const bool ordered = model_subset(models[a], models[b]);
                const auto seq = chickering_sequence(dags[a], dags[b]);
                if (seq.has_value() != ordered) return fail_with("reduction existence mismatch");
                if (seq) {
                    const Outcome v = validate_sequence(*seq, dags[a], dags[b]);
                    if (!v.pass) return v;
                }
            }
    }
    // And five hundred random ordered pairs at four.
    const std::vector<std::uint64_t> masks = all_dag_masks(4);
    std::uniform_int_distribution<std::size_t> pick(0, masks.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 500; ++trial) {
        const Dag h = Dag::from_arc_mask(4, masks[pick(rng)]);
        Dag g = h;
        for (const auto& [j, k] : h.edges())
            if (coin(rng)) g = g.without_edge(j, k);
        for (int hop = 0; hop < 2; ++hop) {
            const std::vector<Edge> covered = covered_edges(g);
            if (covered.empty()) break;
            const auto& [j, k] =
                covered[std::uniform_int_distribution<std::size_t>(0, covered.size() - 1)(rng)];
            g = reverse_covered(g, j, k);
        }
        const auto seq = chickering_sequence(h, g);
        if (!seq) return fail_with("missing reduction on a constructed ordered pair");
        const Outcome v = validate_sequence(*seq, h, g);
        if (!v.pass) return v;
    }
    return pass_with("reversals, class listings, and reductions all validated");
}

// ---- criterion 8: one-statement realisation -------------------------------

Outcome criterion_single_statement() {
    long long checks = 0;
    for (int m = 2; m <= 5; ++m)
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                const VertexSet rest = vs_remove(vs_remove(vs_all(m), i), j);
                bool ok = true;
                vs_for_each_subset(rest, [&](VertexSet s) {
                    if (!ok) return;
                    const CiStatement stmt(i, j, s);
                    const Dag g = single_ci_dag(m, stmt);
                    if (independence_model_of_dag(g) != IndependenceModel(m, {stmt})) ok = false;
                    ++checks;
                });
                if (!ok)
                    return fail_with("statement not realised exactly at m=" + std::to_string(m));
            }
    return pass_with(std::to_string(checks) + " statements realised exactly");
}

// ---- criterion 9: the scoring dilemma under repeated draws ----------------

Outcome criterion_dilemma() {
    const CatalogEntry& e4 = catalog_entry("E4");
    const Dag& g0 = e4.dag("G0");
    const Dag& g1 = e4.dag("G1");
    const JointTable joint = joint_from_model(*e4.model);
    const IndependenceModel& model = *e4.expected_independences;

    const NecScore nec0 = nec(g0, model);
    const NecScore nec1 = nec(g1, model);
    if (!nec0.markovian || !nec1.markovian || nec0.value() != -5.0 || nec1.value() != -6.0)
        return fail_with("edge-count scores are not -5 and -6");

    const Dag control(5);  // entails everything; certainly not Markovian here
    if (nec(control, model).markovian) return fail_with("the control graph should violate the model");

    int lean_wins = 0, control_losses = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Dataset data = sample(joint, 100000, seed);
        const double b0 = bic(g0, data).total;
        const double b1 = bic(g1, data).total;
        const double bc = bic(control, data).total;
        if (b1 > b0) ++lean_wins;
        if (b1 > bc) ++control_losses;
    }
    if (lean_wins < 19)
        return fail_with("leaner graph won only " + std::to_string(lean_wins) + "/20 draws");
    if (control_losses < 19)
        return fail_with("non-Markovian control lost only " + std::to_string(control_losses) +
                         "/20 draws");
    return pass_with("edge count prefers the truth 20/20, data score prefers the leaner graph " +
                     std::to_string(lean_wins) + "/20, control loses " +
                     std::to_string(control_losses) + "/20");
}

// ---- criterion 10: the axiomatic derivation chain -------------------------

Outcome criterion_closure() {
    const CatalogEntry& e4 = catalog_entry("E4");
    const Dag& g0 = e4.dag("G0");
    IndependenceModel seed = independence_model_of_dag(g0);
    const CiStatement last(1, 5, vs_of({2, 3}));
    seed.insert(last);
    const IndependenceModel closed = closure(seed, AxiomSet::graphoid());
    const std::vector<CiStatement> derived{
        CiStatement(1, 5, vs_empty),      CiStatement(1, 2, vs_of({5})),
        CiStatement(1, 3, vs_of({5})),      CiStatement(1, 5, vs_of({2})),
        CiStatement(1, 5, vs_of({3})),      CiStatement(1, 2, vs_of({3, 5})),
        CiStatement(1, 3, vs_of({2, 5}))};
    for (const CiStatement& c : derived)
        if (!closed.contains(c)) return fail_with("closure misses " + c.to_string());
    // Soundness bound: the closure stays inside the extracted model.
    for (const CiStatement& c : closed.statements())
        if (!e4.expected_independences->contains(c))
            return fail_with("closure overshoots with " + c.to_string());
    return pass_with("all seven consequences derived; closure stays within the model");
}

}  // namespace
}  // namespace razors

int main() {
    using Clock = std::chrono::steady_clock;
    struct Row {
        int number;
        const char* title;
        razors::Outcome (*run)();
    };
    const std::vector<Row> rows{
        {1, "exact conditionals", razors::criterion_conditionals},
        {2, "exact model extraction", razors::criterion_extraction},
        {3, "parameter counts via both routes", razors::criterion_param_counts},
        {4, "stored relation grid re-verifies", razors::criterion_hierarchy},
        {5, "theorem suite by enumeration", razors::criterion_theorems},
        {6, "set-function identities", razors::criterion_imset},
        {7, "transform suite", razors::criterion_transforms},
        {8, "one-statement realisation", razors::criterion_single_statement},
        {9, "scoring dilemma under repeated draws", razors::criterion_dilemma},
        {10, "axiomatic derivation chain", razors::criterion_closure},
    };
    int failures = 0;
    for (const Row& row : rows) {
        const auto start = Clock::now();
        razors::Outcome out;
        try {
            out = row.run();
        } catch (const std::exception& e) {
            out = razors::fail_with(std::string("exception: ") + e.what());
        }
        const double seconds =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count() /
            1000.0;
        std::printf("criterion %d %s (%.1f s) %s%s\n", row.number, out.pass ? "PASS" : "FAIL",
                    seconds, row.title, out.detail.empty() ? "" : (": " + out.detail).c_str());
        if (!out.pass) ++failures;
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}

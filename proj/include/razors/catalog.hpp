// catalog.hpp - the built-in example corpus.
//
// Each entry packages one worked example: its graphs (named "G*", "G'",
// "G0", ... as the entry presents them), an exact multinomial realization
// where one is declared, the declared independence model, exact conditional
// probabilities the parameterization must reproduce, parameter counts, and
// membership/class expectations for the thirteen criteria.  Everything an
// entry declares is machine-checkable; verify_catalog_entry() recomputes the
// lot and reports one pass/fail line per declared fact.
//
// Two bookkeeping conventions:
//  * alternate_param_counts records a figure that accompanies an example but
//    does not satisfy the parameter-counting identity; tests assert the
//    identity value and additionally confirm the recorded alternate differs.
//  * an entry with no parametric model (a purely structural example) declares
//    its independence model directly and skips the extraction checks.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "dag.hpp"
#include "imset.hpp"
#include "independence.hpp"
#include "multinomial.hpp"
#include "rational.hpp"
#include "razors.hpp"

namespace razors {

// ---- conditional-probability expectations ---------------------------------

// An exact conditional-probability expectation: P(X_vertex = value | given
// assignment) == expected.  `given_values` aligns with the ascending members
// of `given`.
struct ConditionalCheck {
    int vertex = 0;
    int value = 0;
    VertexSet given = 0;
    std::vector<int> given_values;
    Rational expected;

    std::string describe() const {
        std::string out = "P(X" + std::to_string(vertex) + "=" + std::to_string(value);
        if (given != 0) {
            out += " | ";
            std::size_t k = 0;
            vs_for_each(given, [&](int v) {
                if (k > 0) out += ", ";
                out += "X" + std::to_string(v) + "=" + std::to_string(given_values[k++]);
            });
        }
        return out + ")";
    }
};

inline Rational conditional_probability(const JointTable& joint, const ConditionalCheck& q) {
    require(q.vertex >= 1 && q.vertex <= joint.m(), "queried vertex out of range");
    require(!vs_contains(q.given, q.vertex), "a query cannot condition on its own vertex");
    require(q.given_values.size() == static_cast<std::size_t>(vs_size(q.given)),
            "conditioning values must match the conditioning set");
    const Rational den = q.given == 0
                             ? Rational(1)
                             : joint.marginal_table(q.given)[static_cast<std::size_t>(
                                   joint.ranges().index_of(q.given, q.given_values))];
    require(den != 0, "conditioning event has probability zero in " + q.describe());
    const VertexSet num_set = vs_add(q.given, q.vertex);
    std::vector<int> num_values;
    num_values.reserve(q.given_values.size() + 1);
    std::size_t k = 0;
    vs_for_each(num_set, [&](int v) {
        num_values.push_back(v == q.vertex ? q.value : q.given_values[k++]);
    });
    const Rational num = joint.marginal_table(num_set)[static_cast<std::size_t>(
        joint.ranges().index_of(num_set, num_values))];
    return num / den;
}

// ---- declared facts -------------------------------------------------------

struct NamedDag {
    std::string name;
    Dag dag;
};

struct ParamCountFact {
    std::string dag;
    long long expected = 0;
};

struct MembershipFact {
    RazorId razor = RazorId::CMC;
    std::string dag;
    bool member = true;
};

// The class for `razor` holds exactly the named graphs (possibly none).
struct ClassFact {
    RazorId razor = RazorId::CMC;
    std::vector<std::string> members;
};

struct CatalogEntry {
    std::string id;
    std::vector<std::string> aliases;
    std::string summary;
    int m = 0;
    std::vector<NamedDag> dags;
    std::optional<RangeSpec> ranges;
    std::optional<MultinomialModel> model;
    std::optional<IndependenceModel> expected_independences;
    std::optional<int> declared_ci_count;
    std::vector<ConditionalCheck> conditionals;
    std::vector<ParamCountFact> param_counts;
    std::map<std::string, long long> alternate_param_counts;
    std::vector<MembershipFact> memberships;
    std::vector<ClassFact> class_facts;
    std::vector<std::string> notes;

    bool has_dag(const std::string& name) const {
        return std::any_of(dags.begin(), dags.end(),
                           [&](const NamedDag& d) { return d.name == name; });
    }

    const Dag& dag(const std::string& name) const {
        for (const NamedDag& d : dags)
            if (d.name == name) return d.dag;
        throw std::invalid_argument("entry " + id + " has no graph named " + name);
    }
};

// ---- entry construction helpers -------------------------------------------

namespace detail {

inline ThetaTable theta(int vertex, std::initializer_list<int> parents,
                        std::initializer_list<std::initializer_list<const char*>> rows) {
    ThetaTable t;
    t.vertex = vertex;
    for (int p : parents) t.parents = vs_add(t.parents, p);
    for (const auto& row : rows) {
        std::vector<Rational> r;
        r.reserve(row.size());
        for (const char* cell : row) r.push_back(parse_rational(cell));
        t.rows.push_back(std::move(r));
    }
    return t;
}

inline ConditionalCheck cond(int vertex, int value,
                             std::initializer_list<std::pair<int, int>> given,
                             const char* expected) {
    ConditionalCheck c;
    c.vertex = vertex;
    c.value = value;
    std::map<int, int> sorted;
    for (const auto& [v, val] : given) sorted.emplace(v, val);
    for (const auto& [v, val] : sorted) {
        c.given = vs_add(c.given, v);
        c.given_values.push_back(val);
    }
    c.expected = parse_rational(expected);
    return c;
}

inline IndependenceModel dag_model_plus(const Dag& g,
                                        std::initializer_list<CiStatement> extra) {
    IndependenceModel out = independence_model_of_dag(g);
    for (const CiStatement& c : extra) out.insert(c);
    return out;
}

inline CatalogEntry fig1_entry() {
    CatalogEntry e;
    e.id = "FIG1";
    e.summary = "parameter counts for a five-variable graph pair under binary ranges";
    e.m = 5;
    e.dags.push_back({"G*", Dag(5, {{1, 5}, {2, 5}, {3, 5}, {4, 5}, {1, 4}})});
    e.dags.push_back({"G'", Dag(5, {{1, 4}, {2, 4}, {3, 4}, {5, 4}, {2, 5}, {3, 5}})});
    e.ranges = RangeSpec({2, 2, 2, 2, 2});
    e.param_counts = {{"G*", 21}, {"G'", 23}};
    e.notes = {"the sparser graph also has the smaller parameter count while every "
               "range stays binary; entry E4 revisits the same pair of graph shapes "
               "with a three-valued X5, which reverses the parameter ordering"};
    return e;
}

inline CatalogEntry resf_entry() {
    CatalogEntry e;
    e.id = "EX_resF";
    e.summary = "a graph satisfying restricted faithfulness but not full faithfulness";
    e.m = 6;
    Dag gstar(6, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {3, 6}, {5, 6}});
    e.expected_independences = dag_model_plus(gstar, {CiStatement(1, 6, 0)});
    e.dags.push_back({"G*", std::move(gstar)});
    e.memberships = {{RazorId::ResF, "G*", true},
                     {RazorId::CFC, "G*", false},
                     {RazorId::AdjF, "G*", true},
                     {RazorId::OriF, "G*", true}};
    e.notes = {"the lone extra statement <X1,X6> pairs two non-adjacent vertices and "
               "never conditions on the midpoint of an unshielded triple, so both "
               "faithfulness restrictions survive while full faithfulness fails"};
    return e;
}

inline CatalogEntry frufr_entry() {
    CatalogEntry e;
    e.id = "EX_FrUFr";
    e.summary = "frugal graphs exist while the uniquely-frugal class is empty";
    e.m = 4;
    Dag gstar(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    e.dags.push_back({"G*", gstar});
    e.dags.push_back({"G'", Dag(4, {{1, 2}, {1, 3}, {3, 2}, {4, 3}})});
    e.expected_independences = dag_model_plus(gstar, {CiStatement(1, 4, 0)});
    e.memberships = {{RazorId::Fr, "G*", true},   {RazorId::Fr, "G'", true},
                     {RazorId::OriF, "G*", true}, {RazorId::TriF, "G*", true},
                     {RazorId::AdjF, "G*", false}, {RazorId::OriF, "G'", true},
                     {RazorId::TriF, "G'", false}, {RazorId::SGS, "G*", true}};
    e.class_facts = {{RazorId::UFr, {}}};
    return e;
}

inline CatalogEntry e1_entry() {
    CatalogEntry e;
    e.id = "E1";
    e.aliases = {"EX_adjF"};
    e.summary = "adjacency faithfulness without parameter minimality on three variables";
    e.m = 3;
    Dag g0(3, {{1, 2}, {2, 3}});
    Dag g1(3, {{1, 2}, {3, 2}});
    e.dags.push_back({"G0", g0});
    e.dags.push_back({"G1", g1});
    e.ranges = RangeSpec({2, 3, 2});
    e.model = MultinomialModel(
        g0, *e.ranges,
        {theta(1, {}, {{"1/2", "1/2"}}),
         theta(2, {1}, {{"1/5", "1/5", "3/5"}, {"3/10", "3/10", "2/5"}}),
         theta(3, {2}, {{"1/5", "4/5"}, {"2/5", "3/5"}, {"3/10", "7/10"}})});
    e.expected_independences =
        IndependenceModel(3, {CiStatement(1, 3, 0), CiStatement(1, 3, vs_of({2}))});
    e.declared_ci_count = 2;
    e.conditionals = {cond(3, 0, {{1, 0}}, "3/10"), cond(3, 0, {{1, 1}}, "3/10")};
    e.param_counts = {{"G0", 8}, {"G1", 10}};
    e.memberships = {{RazorId::AdjF, "G0", true},
                     {RazorId::AdjF, "G1", true},
                     {RazorId::ParamM, "G0", true},
                     {RazorId::ParamM, "G1", false}};
    e.class_facts = {{RazorId::UFr, {}}};
    return e;
}

inline CatalogEntry e2_entry() {
    CatalogEntry e;
    e.id = "E2";
    e.summary = "parameter-minimal graphs exist while the unique-minimum class is empty";
    e.m = 4;
    Dag gstar(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    e.dags.push_back({"G*", gstar});
    e.dags.push_back({"G'", Dag(4, {{1, 2}, {1, 3}, {3, 2}, {4, 3}})});
    e.ranges = RangeSpec({2, 2, 2, 3});
    e.model = MultinomialModel(
        gstar, *e.ranges,
        {theta(1, {}, {{"1/2", "1/2"}}),
         theta(2, {1}, {{"3/5", "2/5"}, {"1/10", "9/10"}}),
         theta(3, {2}, {{"7/10", "3/10"}, {"1/5", "4/5"}}),
         theta(4, {1, 3},
               {{"1/10", "1/10", "4/5"},
                {"1/20", "1/20", "9/10"},
                {"9/80", "9/80", "31/40"},
                {"1/16", "1/16", "7/8"}})});
    e.expected_independences = dag_model_plus(gstar, {CiStatement(1, 4, 0)});
    e.conditionals = {cond(4, 0, {{1, 0}}, "3/40"), cond(4, 0, {{1, 1}}, "3/40")};
    e.param_counts = {{"G*", 13}, {"G'", 13}};
    e.memberships = {{RazorId::ParamM, "G*", true},
                     {RazorId::ParamM, "G'", true},
                     {RazorId::OriF, "G*", true},
                     {RazorId::TriF, "G*", true}};
    e.class_facts = {{RazorId::UParamM, {}}};
    e.notes = {"the graphs and the independence model repeat entry EX_FrUFr; the "
               "three-valued X4 gives both graphs the same parameter count, so the "
               "minimum is attained twice across inequivalent graphs"};
    return e;
}

inline CatalogEntry e3_entry() {
    CatalogEntry e;
    e.id = "E3";
    e.aliases = {"EX_uFrOriF"};
    e.summary = "unique frugality without orientation faithfulness on four binary variables";
    e.m = 4;
    Dag gstar(4, {{1, 2}, {2, 4}, {3, 4}, {1, 3}});
    e.dags.push_back({"G*", gstar});
    e.dags.push_back({"G'", Dag(4, {{1, 2}, {1, 3}, {4, 2}, {4, 3}, {2, 3}})});
    e.ranges = RangeSpec({2, 2, 2, 2});
    e.model = MultinomialModel(
        gstar, *e.ranges,
        {theta(1, {}, {{"1/2", "1/2"}}),
         theta(2, {1}, {{"3/10", "7/10"}, {"2/5", "3/5"}}),
         theta(3, {1}, {{"2/5", "3/5"}, {"3/10", "7/10"}}),
         theta(4, {2, 3},
               {{"1/10", "9/10"}, {"7/10", "3/10"}, {"7/10", "3/10"}, {"4/5", "1/5"}})});
    e.expected_independences = dag_model_plus(gstar, {CiStatement(1, 4, 0)});
    e.conditionals = {cond(4, 0, {{1, 0}}, "67/100"), cond(4, 0, {{1, 1}}, "67/100")};
    e.param_counts = {{"G*", 9}, {"G'", 14}};
    e.alternate_param_counts = {{"G'", 13}};
    e.memberships = {{RazorId::UFr, "G*", true},    {RazorId::OriF, "G*", false},
                     {RazorId::AdjF, "G*", true},   {RazorId::UParamM, "G*", true},
                     {RazorId::Pm, "G'", true},     {RazorId::Fr, "G'", false},
                     {RazorId::ParamM, "G'", false}};
    e.notes = {"the recorded alternate parameter count for G' (13) does not satisfy "
               "the counting identity; the identity gives 14, which is what every "
               "check here asserts"};
    return e;
}

inline CatalogEntry e4_entry() {
    CatalogEntry e;
    e.id = "E4";
    e.summary = "a uniquely-frugal graph outside triangle faithfulness, beaten on "
                "parameters by a unique non-frugal minimizer";
    e.m = 5;
    Dag g0(5, {{1, 5}, {2, 5}, {3, 5}, {4, 5}, {1, 4}});
    Dag g1(5, {{1, 4}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {5, 4}});
    e.dags.push_back({"G0", g0});
    e.dags.push_back({"G1", g1});
    e.ranges = RangeSpec({2, 2, 2, 2, 3});
    e.model = MultinomialModel(
        g0, *e.ranges,
        {theta(1, {}, {{"1/2", "1/2"}}),
         theta(2, {}, {{"1/2", "1/2"}}),
         theta(3, {}, {{"1/2", "1/2"}}),
         theta(4, {1}, {{"2/5", "3/5"}, {"4/5", "1/5"}}),
         theta(5, {1, 2, 3, 4},
               {{"2/5", "2/5", "1/5"},
                {"3/20", "3/20", "7/10"},
                {"1/5", "1/5", "3/5"},
                {"1/5", "1/5", "3/5"},
                {"3/10", "3/10", "2/5"},
                {"2/25", "2/25", "21/25"},
                {"1/10", "1/10", "4/5"},
                {"3/10", "3/10", "2/5"},
                {"1/5", "1/5", "3/5"},
                {"9/20", "9/20", "1/10"},
                {"3/20", "3/20", "7/10"},
                {"2/5", "2/5", "1/5"},
                {"3/20", "3/20", "7/10"},
                {"6/25", "6/25", "13/25"},
                {"9/40", "9/40", "11/20"},
                {"1/5", "1/5", "3/5"}})});
    e.expected_independences = dag_model_plus(
        g0, {CiStatement(1, 5, 0), CiStatement(1, 2, vs_of({5})), CiStatement(1, 3, vs_of({5})),
             CiStatement(1, 5, vs_of({2})), CiStatement(1, 5, vs_of({3})),
             CiStatement(1, 2, vs_of({3, 5})), CiStatement(1, 3, vs_of({2, 5})),
             CiStatement(1, 5, vs_of({2, 3}))});
    e.declared_ci_count = 28;
    e.conditionals = {cond(5, 0, {{1, 0}, {2, 0}, {3, 0}}, "1/4"),
                      cond(5, 0, {{1, 1}, {2, 0}, {3, 0}}, "1/4"),
                      cond(5, 0, {{1, 0}, {2, 0}, {3, 1}}, "1/5"),
                      cond(5, 0, {{1, 1}, {2, 0}, {3, 1}}, "1/5"),
                      cond(5, 0, {{1, 0}, {2, 1}, {3, 0}}, "21/125"),
                      cond(5, 0, {{1, 1}, {2, 1}, {3, 0}}, "21/125"),
                      cond(5, 0, {{1, 0}, {2, 1}, {3, 1}}, "11/50"),
                      cond(5, 0, {{1, 1}, {2, 1}, {3, 1}}, "11/50")};
    e.param_counts = {{"G0", 37}, {"G1", 35}};
    e.memberships = {{RazorId::UFr, "G0", true},  {RazorId::TriF, "G0", false},
                     {RazorId::ParamM, "G0", false}, {RazorId::Fr, "G1", false},
                     {RazorId::TriF, "G1", false}};
    e.class_facts = {{RazorId::TriF, {}},
                     {RazorId::ParamM, {"G1"}},
                     {RazorId::UParamM, {"G1"}}};
    e.notes = {"every conditional P(X5=0 | X1, X2, X3) comes in matched pairs across "
               "the two values of X1, which is what places <X1,X5|{X2,X3}> and its "
               "closure consequences in the extracted model"};
    return e;
}

inline CatalogEntry cmc_sgs_entry() {
    CatalogEntry e;
    e.id = "EX_CMC_SGS";
    e.summary = "a Markovian graph outside the edge-minimal class, and an edge-minimal "
                "graph outside Pm";
    e.m = 3;
    Dag gstar(3, {{1, 2}, {3, 2}});
    e.dags.push_back({"G*", gstar});
    e.dags.push_back({"G'", Dag(3, {{1, 2}, {3, 2}, {1, 3}})});
    e.dags.push_back({"G''", Dag(3, {{1, 2}, {2, 3}, {1, 3}})});
    e.ranges = RangeSpec({2, 2, 2});
    e.model = MultinomialModel(
        gstar, *e.ranges,
        {theta(1, {}, {{"1/2", "1/2"}}),
         theta(2, {1, 3},
               {{"1/10", "9/10"}, {"7/10", "3/10"}, {"7/10", "3/10"}, {"4/5", "1/5"}}),
         theta(3, {}, {{"1/2", "1/2"}})});
    e.expected_independences = IndependenceModel(3, {CiStatement(1, 3, 0)});
    e.memberships = {{RazorId::CFC, "G*", true},  {RazorId::CMC, "G'", true},
                     {RazorId::SGS, "G'", false}, {RazorId::SGS, "G''", true},
                     {RazorId::Pm, "G''", false}, {RazorId::TriF, "G'", true},
                     {RazorId::TriF, "G''", false}};
    e.notes = {"G' and G'' are Markov equivalent (both complete), yet triangle "
               "faithfulness admits one and rejects the other: with SGS these are "
               "the only two criteria that can split an equivalence class"};
    return e;
}

inline CatalogEntry orif_trif_entry() {
    CatalogEntry e;
    e.id = "EX_oriF_triF";
    e.summary = "an orientation- and triangle-faithful graph that is not edge-minimal";
    e.m = 2;
    Dag gstar(2, std::vector<std::pair<int, int>>{});
    e.dags.push_back({"G*", gstar});
    e.dags.push_back({"G'", Dag(2, {{1, 2}})});
    e.ranges = RangeSpec({2, 2});
    e.model = MultinomialModel(gstar, *e.ranges,
                               {theta(1, {}, {{"1/2", "1/2"}}),
                                theta(2, {}, {{"1/2", "1/2"}})});
    e.expected_independences = IndependenceModel(2, {CiStatement(1, 2, 0)});
    e.memberships = {{RazorId::CFC, "G*", true},  {RazorId::OriF, "G'", true},
                     {RazorId::TriF, "G'", true}, {RazorId::SGS, "G'", false},
                     {RazorId::Fr, "G'", false},  {RazorId::ParamM, "G'", false},
                     {RazorId::Pm, "G'", false}};
    e.class_facts = {{RazorId::Fr, {"G*"}},
                     {RazorId::ParamM, {"G*"}},
                     {RazorId::UParamM, {"G*"}}};
    e.notes = {"with no unshielded triples and no triangles, both orientation clauses "
               "hold vacuously for the one-arrow graph, which still carries a "
               "removable arrow"};
    return e;
}

}  // namespace detail

// ---- access ---------------------------------------------------------------

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        out.push_back(detail::fig1_entry());
        out.push_back(detail::resf_entry());
        out.push_back(detail::frufr_entry());
        out.push_back(detail::e1_entry());
        out.push_back(detail::e2_entry());
        out.push_back(detail::e3_entry());
        out.push_back(detail::e4_entry());
        out.push_back(detail::cmc_sgs_entry());
        out.push_back(detail::orif_trif_entry());
        return out;
    }();
    return entries;
}

inline std::vector<std::string> catalog_ids() {
    std::vector<std::string> out;
    for (const CatalogEntry& e : catalog()) out.push_back(e.id);
    return out;
}

inline const CatalogEntry* find_catalog_entry(const std::string& id_or_alias) {
    for (const CatalogEntry& e : catalog()) {
        if (e.id == id_or_alias) return &e;
        for (const std::string& a : e.aliases)
            if (a == id_or_alias) return &e;
    }
    return nullptr;
}

inline const CatalogEntry& catalog_entry(const std::string& id_or_alias) {
    if (const CatalogEntry* e = find_catalog_entry(id_or_alias)) return *e;
    std::string known;
    for (const std::string& id : catalog_ids()) {
        if (!known.empty()) known += ", ";
        known += id;
    }
    throw std::invalid_argument("unknown catalog entry \"" + id_or_alias +
                                "\"; known entries: " + known);
}

// ---- verification ---------------------------------------------------------

struct EntryCheck {
    std::string label;
    bool pass = false;
    std::string detail;  // non-empty only on failure
};

// Recompute every fact the entry declares.  One EntryCheck per fact, in a
// stable order: extraction, statement count, conditionals, parameter counts
// (both formulas), alternate-count separation, memberships, class contents.
inline std::vector<EntryCheck> verify_catalog_entry(const CatalogEntry& e, int threads = 1) {
    std::vector<EntryCheck> out;
    const auto record = [&](std::string label, bool pass, std::string detail = "") {
        out.push_back({std::move(label), pass, pass ? "" : std::move(detail)});
    };

    if (e.model && e.expected_independences) {
        const IndependenceModel got = extract_independence_model(*e.model);
        const bool ok = got == *e.expected_independences;
        std::string detail;
        if (!ok) {
            for (const CiStatement& c : got.difference(*e.expected_independences))
                detail += "extra " + c.to_string() + "; ";
            for (const CiStatement& c : e.expected_independences->difference(got))
                detail += "missing " + c.to_string() + "; ";
        }
        record("exact extraction reproduces the declared independence model", ok, detail);
    }

    if (e.declared_ci_count && e.expected_independences) {
        const int got = static_cast<int>(e.expected_independences->statements().size());
        record("declared model holds exactly " + std::to_string(*e.declared_ci_count) +
                   " statements",
               got == *e.declared_ci_count, "it holds " + std::to_string(got));
    }

    if (!e.conditionals.empty()) {
        const JointTable joint = joint_from_model(*e.model);
        for (const ConditionalCheck& q : e.conditionals) {
            const Rational got = conditional_probability(joint, q);
            record(q.describe() + " = " + rational_to_string(q.expected), got == q.expected,
                   "computed " + rational_to_string(got));
        }
    }

    for (const ParamCountFact& f : e.param_counts) {
        const Dag& g = e.dag(f.dag);
        const long long direct = param_count(g, *e.ranges);
        const long long via_imset = param_count_via_imset(g, *e.ranges);
        record("|param(" + f.dag + ")| = " + std::to_string(f.expected) +
                   " by both counting routes",
               direct == f.expected && via_imset == f.expected,
               "factorization route gives " + std::to_string(direct) +
                   ", characteristic-set route gives " + std::to_string(via_imset));
    }

    for (const auto& [name, alt] : e.alternate_param_counts) {
        const long long identity = param_count(e.dag(name), *e.ranges);
        record("recorded alternate count " + std::to_string(alt) + " for " + name +
                   " differs from the identity value",
               identity != alt, "the identity also gives " + std::to_string(alt));
    }

    const bool wants_report =
        !e.class_facts.empty() ||
        std::any_of(e.memberships.begin(), e.memberships.end(),
                    [](const MembershipFact& f) { return razor_needs_enumeration(f.razor); });
    std::optional<ClassReport> report;
    if (wants_report && e.expected_independences)
        report.emplace(*e.expected_independences, e.ranges, threads);

    for (const MembershipFact& f : e.memberships) {
        const RazorVerdict v =
            classify_one(e.dag(f.dag), *e.expected_independences, f.razor, e.ranges,
                         report ? &*report : nullptr);
        record(f.dag + (f.member ? " belongs to " : " stays outside ") + razor_name(f.razor),
               v.member == f.member,
               v.member ? "it is a member" : "it is not a member: " + v.witness);
    }

    for (const ClassFact& f : e.class_facts) {
        std::vector<std::uint64_t> want;
        for (const std::string& name : f.members) want.push_back(e.dag(name).arc_mask());
        std::sort(want.begin(), want.end());
        std::vector<std::uint64_t> got = report->members(f.razor);
        std::sort(got.begin(), got.end());
        record("class " + razor_name(f.razor) + " holds exactly the " +
                   std::to_string(f.members.size()) + " declared member(s)",
               got == want, "it holds " + std::to_string(got.size()) + " member(s)");
    }

    return out;
}

inline bool all_pass(const std::vector<EntryCheck>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const EntryCheck& c) { return c.pass; });
}

}  // namespace razors

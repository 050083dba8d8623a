// Command-line front end: classify graphs, enumerate classes, verify the
// built-in examples, re-check the stored relation grid, inspect set
// functions, reduce between equivalent graphs, draw samples, and score
// candidate structures.
//
// Exit codes: 0 success, 1 expectation mismatch, 2 input error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "razors/catalog.hpp"
#include "razors/hierarchy.hpp"
#include "razors/io_json.hpp"
#include "razors/scoring.hpp"
#include "razors/transforms.hpp"

namespace {

using nlohmann::json;
using namespace razors;

struct LoadedModel {
    std::string origin;
    IndependenceModel model{1};
    std::optional<RangeSpec> ranges;
    std::optional<MultinomialModel> distribution;
};

LoadedModel load_model(const std::string& spec) {
    LoadedModel out;
    out.origin = spec;
    if (spec.rfind("catalog:", 0) == 0) {
        const CatalogEntry& e = catalog_entry(spec.substr(8));
        if (e.expected_independences)
            out.model = *e.expected_independences;
        else if (e.model)
            out.model = extract_independence_model(*e.model);
        else
            throw std::invalid_argument("catalog entry " + e.id + " carries no model");
        out.ranges = e.ranges;
        out.distribution = e.model;
        return out;
    }
    const ModelDocument doc = load_model_file(spec);
    if (const auto* independence = std::get_if<IndependenceModel>(&doc)) {
        out.model = *independence;
    } else {
        const auto& distribution = std::get<MultinomialModel>(doc);
        out.model = extract_independence_model(distribution);
        out.ranges = distribution.ranges();
        out.distribution = distribution;
    }
    return out;
}

Dag load_dag(const std::string& path) { return Dag::parse_text(read_text_file(path)); }

std::string format_score(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", value);
    return buf;
}

void emit(const std::string& text) { std::cout << text; }

// ---- classify -------------------------------------------------------------

int run_classify(const std::string& model_spec, const std::string& dag_path,
                 const std::string& format) {
    const LoadedModel lm = load_model(model_spec);
    const Dag g = load_dag(dag_path);
    if (g.m() != lm.model.m())
        throw std::invalid_argument("graph has m=" + std::to_string(g.m()) +
                                    " but the model has m=" + std::to_string(lm.model.m()));
    const std::vector<RazorVerdict> verdicts = classify(g, lm.model, lm.ranges);
    if (format == "json") {
        json j;
        j["dag"] = dag_path;
        j["model"] = lm.origin;
        j["verdicts"] = json::array();
        for (const RazorVerdict& v : verdicts)
            j["verdicts"].push_back(
                {{"razor", razor_name(v.razor)}, {"member", v.member}, {"witness", v.witness}});
        json skipped = json::array();
        for (RazorId id : all_razors())
            if (razor_needs_ranges(id) && !lm.ranges) skipped.push_back(razor_name(id));
        j["skipped"] = skipped;
        emit(j.dump(2) + "\n");
        return 0;
    }
    std::size_t next = 0;
    for (RazorId id : all_razors()) {
        if (next < verdicts.size() && verdicts[next].razor == id) {
            const RazorVerdict& v = verdicts[next++];
            emit(razor_name(id) + (v.member ? ": yes\n" : ": no\n"));
            if (!v.member) emit("  " + v.witness + "\n");
        } else {
            emit(razor_name(id) + ": skipped (the model carries no range spec)\n");
        }
    }
    return 0;
}

// ---- enumerate-class ------------------------------------------------------

int run_enumerate_class(const std::string& model_spec, const std::string& razor,
                        const std::string& format, int threads, int max_m) {
    const LoadedModel lm = load_model(model_spec);
    const RazorId id = razor_from_name(razor);
    const ClassReport report(lm.model, lm.ranges, threads, max_m);
    const std::vector<std::uint64_t>& members = report.members(id);
    if (format == "json") {
        json j;
        j["razor"] = razor_name(id);
        j["model"] = lm.origin;
        j["m"] = lm.model.m();
        j["size"] = members.size();
        j["members"] = json::array();
        for (const std::uint64_t mask : members) {
            const Dag g = Dag::from_arc_mask(lm.model.m(), mask);
            json edges = json::array();
            for (const auto& [a, b] : g.edges()) edges.push_back(Dag::edge_name(a, b));
            j["members"].push_back({{"arc_mask", mask}, {"edges", edges}});
        }
        emit(j.dump(2) + "\n");
        return 0;
    }
    emit("class " + razor_name(id) + ": " + std::to_string(members.size()) + " members\n");
    for (const std::uint64_t mask : members) {
        const Dag g = Dag::from_arc_mask(lm.model.m(), mask);
        std::string line = "  arcs=" + std::to_string(mask) + ":";
        if (g.edge_count() == 0) line += " (no edges)";
        for (const auto& [a, b] : g.edges()) line += " " + Dag::edge_name(a, b) + ";";
        emit(line + "\n");
    }
    return 0;
}

// ---- hierarchy ------------------------------------------------------------

int run_hierarchy(bool against_paper, const std::vector<std::string>& model_paths,
                  const std::string& format, int threads) {
    if (against_paper) {
        const std::vector<std::string> diffs = verify_hierarchy(threads);
        if (format == "json") {
            json j;
            j["status"] = diffs.empty() ? "zero diffs" : "mismatch";
            j["diffs"] = diffs;
            emit(j.dump(2) + "\n");
        } else if (diffs.empty()) {
            emit("all 169 cells confirmed: zero diffs\n");
        } else {
            for (const std::string& d : diffs) emit(d + "\n");
            emit(std::to_string(diffs.size()) + " cells disagree\n");
        }
        return diffs.empty() ? 0 : 1;
    }
    std::vector<HierarchyInput> inputs;
    if (model_paths.empty()) {
        inputs = hierarchy_inputs();
    } else {
        for (const std::string& path : model_paths) {
            const LoadedModel lm = load_model(path);
            inputs.push_back({lm.origin, lm.model, lm.ranges, {}});
        }
    }
    const HierarchyMatrix matrix = hierarchy_matrix(inputs, threads);
    if (format == "json") {
        json cells = json::array();
        for (RazorId row : all_razors())
            for (RazorId col : all_razors())
                cells.push_back({{"row", razor_name(row)},
                                 {"col", razor_name(col)},
                                 {"label", cell_label(matrix.at(row, col))}});
        json j;
        j["cells"] = cells;
        emit(j.dump(2) + "\n");
        return 0;
    }
    emit(hierarchy_to_text(matrix));
    return 0;
}

// ---- verify-example -------------------------------------------------------

int run_verify_example(const std::string& id, const std::string& format, int threads) {
    const CatalogEntry& e = catalog_entry(id);
    const std::vector<EntryCheck> checks = verify_catalog_entry(e, threads);
    const bool ok = all_pass(checks);
    if (format == "json") {
        json j;
        j["id"] = e.id;
        j["all_pass"] = ok;
        j["checks"] = json::array();
        for (const EntryCheck& c : checks)
            j["checks"].push_back({{"label", c.label}, {"pass", c.pass}, {"detail", c.detail}});
        emit(j.dump(2) + "\n");
        return ok ? 0 : 1;
    }
    std::size_t passed = 0;
    for (const EntryCheck& c : checks) {
        emit(std::string(c.pass ? "PASS  " : "FAIL  ") + c.label +
             (c.detail.empty() || c.pass ? "" : " — " + c.detail) + "\n");
        if (c.pass) ++passed;
    }
    emit(e.id + ": " + std::to_string(passed) + "/" + std::to_string(checks.size()) +
         " checks passed\n");
    return ok ? 0 : 1;
}

// ---- imset ----------------------------------------------------------------

int run_imset(const std::string& dag_path, const std::vector<int>& ranges,
              const std::string& format) {
    const Dag g = load_dag(dag_path);
    std::optional<RangeSpec> spec;
    if (!ranges.empty()) spec.emplace(ranges);
    const std::vector<VertexSet> sets = parameterizing_sets(g);
    if (format == "json") {
        json j;
        j["dag"] = dag_path;
        j["m"] = g.m();
        j["set_count"] = sets.size();
        j["sets"] = json::array();
        for (const VertexSet s : sets) j["sets"].push_back(vs_to_vector(s));
        if (spec) j["param_count"] = param_count_via_imset(g, *spec);
        emit(j.dump(2) + "\n");
        return 0;
    }
    emit(dump_parameterizing_sets(g));
    emit("set count = " + std::to_string(sets.size()) + "\n");
    if (spec) emit("param_count = " + std::to_string(param_count_via_imset(g, *spec)) + "\n");
    return 0;
}

// ---- chickering -----------------------------------------------------------

int run_chickering(const std::string& from_path, const std::string& to_path,
                   const std::string& format) {
    const Dag h = load_dag(from_path);
    const Dag g = load_dag(to_path);
    const std::optional<ChickeringSequence> seq = chickering_sequence(h, g);
    if (format == "json") {
        json j;
        j["from"] = from_path;
        j["to"] = to_path;
        j["found"] = seq.has_value();
        j["steps"] = json::array();
        if (seq)
            for (const ChickeringStep& step : seq->steps) j["steps"].push_back(step.describe());
        emit(j.dump(2) + "\n");
        return seq ? 0 : 1;
    }
    if (!seq) {
        emit("no stepwise reduction: the start graph does not entail the goal graph's model\n");
        return 1;
    }
    emit(seq->to_text());
    emit("steps = " + std::to_string(seq->steps.size()) + "\n");
    return 0;
}

// ---- sample ---------------------------------------------------------------

int run_sample(const std::string& model_spec, long long n, std::uint64_t seed,
               const std::string& out_path, const std::string& format) {
    const LoadedModel lm = load_model(model_spec);
    if (!lm.distribution)
        throw std::invalid_argument("sampling needs a model with full probability tables");
    const JointTable joint = joint_from_model(*lm.distribution);
    const Dataset data = sample(joint, n, seed, lm.origin);
    std::string text;
    if (format == "json") {
        json j;
        j["ranges"] = lm.distribution->ranges().ranges();
        j["n"] = data.n();
        j["provenance"] = data.provenance;
        j["rows"] = data.rows;
        text = j.dump(2) + "\n";
    } else {
        text = data.to_text();
    }
    if (out_path.empty())
        emit(text);
    else
        write_text_file(out_path, text);
    return 0;
}

// ---- score ----------------------------------------------------------------

int run_score(const std::string& model_spec, const std::string& data_path,
              const std::vector<std::string>& dag_paths, const std::string& criterion,
              long long n, std::uint64_t seed, double c, const std::string& format) {
    const bool want_nec = criterion != "bic";
    const bool want_bic = criterion != "nec";
    std::optional<LoadedModel> lm;
    if (!model_spec.empty()) lm = load_model(model_spec);
    std::optional<Dataset> data;
    if (!data_path.empty()) data = Dataset::parse_text(read_text_file(data_path));
    if (want_nec && !lm)
        throw std::invalid_argument("the edge-count score needs --model");
    if (want_bic && !data) {
        if (!lm || !lm->distribution)
            throw std::invalid_argument(
                "the data score needs --data, or a --model with full probability tables");
        data = sample(joint_from_model(*lm->distribution), n, seed, lm->origin);
    }
    json out = json::array();
    for (const std::string& path : dag_paths) {
        const Dag g = load_dag(path);
        json row;
        row["dag"] = path;
        row["edges"] = g.edge_count();
        if (format != "json")
            emit("dag " + path + " (m=" + std::to_string(g.m()) + ", " +
                 std::to_string(g.edge_count()) + " edges)\n");
        if (want_nec) {
            const NecScore s = nec(g, lm->model);
            if (format == "json") {
                row["nec"] = {{"markovian", s.markovian}, {"value", s.value()}};
                if (s.violation) row["nec"]["violation"] = s.violation->to_string();
            } else {
                std::string line = "  nec = " + format_score(s.value());
                if (s.violation) line += "  (violates " + s.violation->to_string() + ")";
                emit(line + "\n");
            }
        }
        if (want_bic) {
            const BicBreakdown b = bic(g, *data, c);
            long long params = 0;
            for (const BicVertexTerm& t : b.terms) params += t.params;
            if (format == "json") {
                row["bic"] = {{"total", b.total}, {"params", params}, {"n", b.n}, {"c", b.c}};
            } else {
                char buf[128];
                std::snprintf(buf, sizeof buf, "  bic = %.6f (params = %lld, n = %lld, c = %g)\n",
                              b.total, params, b.n, b.c);
                emit(buf);
            }
        }
        out.push_back(row);
    }
    if (format == "json") emit(out.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration toolkit for simplicity criteria over directed graphs"};
    app.require_subcommand(1);

    std::string format = "text";
    int threads = 1;
    int max_m = kClassCeiling;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--threads", threads, "worker threads for enumeration")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-m", max_m, "vertex ceiling for class enumeration")
            ->check(CLI::Range(1, 6));
    };

    int rc = 0;

    auto* cls = app.add_subcommand("classify", "thirteen verdicts for one graph and one model");
    std::string cls_model, cls_dag;
    cls->add_option("--model", cls_model, "model file or catalog:ID")->required();
    cls->add_option("--dag", cls_dag, "graph file")->required();
    add_common(cls);
    cls->callback([&] { rc = run_classify(cls_model, cls_dag, format); });

    auto* enu = app.add_subcommand("enumerate-class", "list every graph a criterion keeps");
    std::string enu_model, enu_razor;
    enu->add_option("--model", enu_model, "model file or catalog:ID")->required();
    enu->add_option("--razor", enu_razor, "criterion name, e.g. Fr or ParamM")->required();
    add_common(enu);
    enu->callback([&] { rc = run_enumerate_class(enu_model, enu_razor, format, threads, max_m); });

    auto* hier = app.add_subcommand("hierarchy", "relate the thirteen criteria pairwise");
    bool against_paper = false;
    std::vector<std::string> hier_models;
    hier->add_flag("--against-paper", against_paper,
                   "re-verify the stored relation grid cell by cell");
    hier->add_option("--model", hier_models, "model files or catalog:IDs to gather evidence from");
    add_common(hier);
    hier->callback([&] { rc = run_hierarchy(against_paper, hier_models, format, threads); });

    auto* verify = app.add_subcommand("verify-example", "re-derive one built-in example");
    std::string verify_id;
    verify->add_option("id", verify_id, "catalog entry id or alias")->required();
    add_common(verify);
    verify->callback([&] { rc = run_verify_example(verify_id, format, threads); });

    auto* ims = app.add_subcommand("imset", "parameterizing sets and parameter count");
    std::string ims_dag;
    std::vector<int> ims_ranges;
    ims->add_option("--dag", ims_dag, "graph file")->required();
    ims->add_option("--ranges", ims_ranges, "comma-separated outcome counts, e.g. 2,2,3")
        ->delimiter(',');
    add_common(ims);
    ims->callback([&] { rc = run_imset(ims_dag, ims_ranges, format); });

    auto* chick = app.add_subcommand("chickering", "stepwise reduction between two graphs");
    std::string chick_from, chick_to;
    chick->add_option("--from", chick_from, "start graph file")->required();
    chick->add_option("--to", chick_to, "goal graph file")->required();
    add_common(chick);
    chick->callback([&] { rc = run_chickering(chick_from, chick_to, format); });

    auto* smp = app.add_subcommand("sample", "draw records from a full model");
    std::string smp_model, smp_out;
    long long smp_n = 0;
    std::uint64_t smp_seed = 0;
    smp->add_option("--model", smp_model, "model file or catalog:ID")->required();
    smp->add_option("--n", smp_n, "number of records")->required();
    smp->add_option("--seed", smp_seed, "generator seed");
    smp->add_option("--out", smp_out, "write to this file instead of stdout");
    add_common(smp);
    smp->callback([&] { rc = run_sample(smp_model, smp_n, smp_seed, smp_out, format); });

    auto* sc = app.add_subcommand("score", "edge-count and penalised data scores");
    std::string sc_model, sc_data, sc_criterion = "both";
    std::vector<std::string> sc_dags;
    long long sc_n = 10000;
    std::uint64_t sc_seed = 1;
    double sc_c = 1.0;
    sc->add_option("--model", sc_model, "model file or catalog:ID");
    sc->add_option("--data", sc_data, "dataset file");
    sc->add_option("--dag", sc_dags, "graph file (repeatable)")->required();
    sc->add_option("--criterion", sc_criterion, "nec, bic, or both")
        ->check(CLI::IsMember({"nec", "bic", "both"}));
    sc->add_option("--n", sc_n, "records to draw when sampling from --model");
    sc->add_option("--seed", sc_seed, "generator seed for the draw");
    sc->add_option("--c", sc_c, "penalty weight");
    add_common(sc);
    sc->callback(
        [&] { rc = run_score(sc_model, sc_data, sc_dags, sc_criterion, sc_n, sc_seed, sc_c, format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

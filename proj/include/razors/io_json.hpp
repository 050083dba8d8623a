// io_json.hpp - JSON documents for independence models and multinomial
// models, with auto-detection and deterministic emission.
//
// Two document shapes are supported:
//
//   independence model   {"m": 3, "cis": [{"i": 1, "j": 3, "s": [2]}, ...]}
//   multinomial model    {"ranges": [2, 3, 2],
//                         "edges":  [[1, 2], [2, 3]],
//                         "tables": [{"vertex": 1, "parents": [],
//                                     "rows": [["1/2", "1/2"]]}, ...]}
//
// Probability entries are exact rationals rendered as strings ("3/10" or
// "0.3" on input; always reduced "p/q" or integer text on output).  Table
// rows follow the mixed-radix parent-configuration order documented in
// multinomial.hpp.  Emission sorts object keys and uses a fixed indent, so a
// document re-emitted from its own parse is byte-identical.
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "core.hpp"
#include "dag.hpp"
#include "independence.hpp"
#include "multinomial.hpp"
#include "rational.hpp"

namespace razors {

using Json = nlohmann::json;

inline Json independence_model_to_json(const IndependenceModel& model) {
    Json cis = Json::array();
    for (const CiStatement& c : model.statements()) {
        Json s = Json::array();
        vs_for_each(c.s, [&](int v) { s.push_back(v); });
        cis.push_back(Json{{"i", c.i}, {"j", c.j}, {"s", std::move(s)}});
    }
    return Json{{"m", model.m()}, {"cis", std::move(cis)}};
}

inline IndependenceModel independence_model_from_json(const Json& doc) {
    require(doc.is_object() && doc.contains("m") && doc.contains("cis"),
            "an independence-model document needs the keys \"m\" and \"cis\"");
    require(doc["m"].is_number_integer(), "\"m\" must be an integer");
    IndependenceModel model(doc["m"].get<int>());
    require(doc["cis"].is_array(), "\"cis\" must be an array");
    for (const Json& entry : doc["cis"]) {
        require(entry.is_object() && entry.contains("i") && entry.contains("j"),
                "each statement needs the keys \"i\" and \"j\"");
        VertexSet s = 0;
        if (entry.contains("s")) {
            require(entry["s"].is_array(), "\"s\" must be an array of vertices");
            for (const Json& v : entry["s"]) {
                require(v.is_number_integer(), "\"s\" must hold integers");
                const int vertex = v.get<int>();
                require(vertex >= 1 && vertex <= model.m(),
                        "conditioning vertex " + std::to_string(vertex) + " out of range 1.." +
                            std::to_string(model.m()));
                require(!vs_contains(s, vertex),
                        "conditioning vertex " + std::to_string(vertex) + " listed twice");
                s = vs_add(s, vertex);
            }
        }
        model.insert(CiStatement(entry["i"].get<int>(), entry["j"].get<int>(), s));
    }
    return model;
}

inline Json multinomial_model_to_json(const MultinomialModel& model) {
    Json ranges = Json::array();
    for (int r : model.ranges().ranges()) ranges.push_back(r);

    Json edges = Json::array();
    for (const auto& [j, k] : model.dag().edges()) edges.push_back(Json::array({j, k}));

    Json tables = Json::array();
    for (int v = 1; v <= model.dag().m(); ++v) {
        const ThetaTable& t = model.table(v);
        Json parents = Json::array();
        vs_for_each(t.parents, [&](int p) { parents.push_back(p); });
        Json rows = Json::array();
        for (const std::vector<Rational>& row : t.rows) {
            Json out_row = Json::array();
            for (const Rational& p : row) out_row.push_back(rational_to_string(p));
            rows.push_back(std::move(out_row));
        }
        tables.push_back(Json{{"vertex", v},
                              {"parents", std::move(parents)},
                              {"rows", std::move(rows)}});
    }
    return Json{{"ranges", std::move(ranges)},
                {"edges", std::move(edges)},
                {"tables", std::move(tables)}};
}

inline MultinomialModel multinomial_model_from_json(const Json& doc) {
    require(doc.is_object() && doc.contains("ranges") && doc.contains("edges") &&
                doc.contains("tables"),
            "a multinomial-model document needs the keys \"ranges\", \"edges\" and \"tables\"");
    require(doc["ranges"].is_array() && !doc["ranges"].empty(),
            "\"ranges\" must be a non-empty array");
    std::vector<int> ranges;
    for (const Json& r : doc["ranges"]) {
        require(r.is_number_integer(), "\"ranges\" must hold integers");
        ranges.push_back(r.get<int>());
    }
    RangeSpec spec(ranges);

    require(doc["edges"].is_array(), "\"edges\" must be an array of [from, to] pairs");
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : doc["edges"]) {
        require(e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
                    e[1].is_number_integer(),
                "every edge must be a [from, to] pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    Dag dag(spec.m(), edges);

    require(doc["tables"].is_array(), "\"tables\" must be an array");
    std::vector<ThetaTable> tables;
    for (const Json& entry : doc["tables"]) {
        require(entry.is_object() && entry.contains("vertex") && entry.contains("parents") &&
                    entry.contains("rows"),
                "each table needs the keys \"vertex\", \"parents\" and \"rows\"");
        ThetaTable t;
        require(entry["vertex"].is_number_integer(), "\"vertex\" must be an integer");
        t.vertex = entry["vertex"].get<int>();
        require(entry["parents"].is_array(), "\"parents\" must be an array of vertices");
        for (const Json& p : entry["parents"]) {
            require(p.is_number_integer(), "\"parents\" must hold integers");
            const int parent = p.get<int>();
            require(parent >= 1 && parent <= spec.m(),
                    "parent " + std::to_string(parent) + " out of range 1.." +
                        std::to_string(spec.m()));
            require(!vs_contains(t.parents, parent),
                    "parent " + std::to_string(parent) + " listed twice");
            t.parents = vs_add(t.parents, parent);
        }
        require(entry["rows"].is_array(), "\"rows\" must be an array of rows");
        for (const Json& row : entry["rows"]) {
            require(row.is_array(), "every table row must be an array");
            std::vector<Rational> out_row;
            for (const Json& cell : row) {
                require(cell.is_string(),
                        "probability entries must be strings such as \"3/10\"");
                out_row.push_back(parse_rational(cell.get<std::string>()));
            }
            t.rows.push_back(std::move(out_row));
        }
        tables.push_back(std::move(t));
    }
    return MultinomialModel(std::move(dag), std::move(spec), std::move(tables));
}

using ModelDocument = std::variant<IndependenceModel, MultinomialModel>;

// Parse either document shape, detected by its keys.
inline ModelDocument parse_model_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("not valid JSON: ") + e.what());
    }
    require(doc.is_object(), "a model document must be a JSON object");
    if (doc.contains("cis")) return independence_model_from_json(doc);
    if (doc.contains("tables")) return multinomial_model_from_json(doc);
    throw std::invalid_argument(
        "unrecognised model document: expected the key \"cis\" (independence model) or "
        "\"tables\" (multinomial model)");
}

inline std::string model_document_to_text(const Json& doc) { return doc.dump(2) + "\n"; }

inline std::string to_text(const IndependenceModel& model) {
    return model_document_to_text(independence_model_to_json(model));
}

inline std::string to_text(const MultinomialModel& model) {
    return model_document_to_text(multinomial_model_to_json(model));
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::invalid_argument("failed writing " + path);
}

inline ModelDocument load_model_file(const std::string& path) {
    try {
        return parse_model_document(read_text_file(path));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

}  // namespace razors

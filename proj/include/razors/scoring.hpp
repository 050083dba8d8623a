// scoring.hpp - two ways to rank graphs: an edge-count score against an
// independence model, and a penalised likelihood score against sampled data.
//
// Sampling is contract-pinned ("mt19937_64/u53/v1"): one mt19937_64 draw per
// record, the top 53 bits scaled to [0,1), inverse-CDF over the joint's
// configurations in index order.  Identical seeds reproduce identical
// datasets on any conforming platform.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "dag.hpp"
#include "independence.hpp"
#include "multinomial.hpp"

namespace razors {

inline constexpr const char* kSamplerContract = "mt19937_64/u53/v1";

// ---- the model-based score ------------------------------------------------

// Markovian graphs score the negated edge count; everything else scores
// bottom.  The violation documents why a graph scored bottom.
struct NecScore {
    bool markovian = false;
    int edges = 0;
    std::optional<CiStatement> violation;

    double value() const {
        return markovian ? -static_cast<double>(edges)
                         : -std::numeric_limits<double>::infinity();
    }
};

inline NecScore nec(const Dag& g, const IndependenceModel& model) {
    NecScore score;
    score.edges = g.edge_count();
    score.violation = markov_violation(g, model);
    score.markovian = !score.violation.has_value();
    return score;
}

// ---- datasets -------------------------------------------------------------

// Rows of complete discrete records.  The text form is a 'ranges:' header,
// an 'n:' line, an optional 'provenance:' line, then one space-separated row
// per record.
struct Dataset {
    RangeSpec ranges;
    std::vector<std::vector<int>> rows;
    std::string provenance;

    long long n() const { return static_cast<long long>(rows.size()); }

    std::string to_text() const {
        std::ostringstream out;
        out << "ranges: [";
        for (int v = 1; v <= ranges.m(); ++v)
            out << (v == 1 ? "" : ", ") << ranges.range(v);
        out << "]\n";
        out << "n: " << n() << "\n";
        if (!provenance.empty()) out << "provenance: " << provenance << "\n";
        for (const auto& row : rows) {
            for (std::size_t k = 0; k < row.size(); ++k)
                out << (k == 0 ? "" : " ") << row[k];
            out << "\n";
        }
        return out.str();
    }

    static Dataset parse_text(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        std::optional<RangeSpec> ranges;
        long long declared_n = -1;
        std::string provenance;
        std::vector<std::vector<int>> rows;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') continue;
            if (line.rfind("ranges:", 0) == 0) {
                ranges = RangeSpec(parse_int_list(line.substr(7), lineno));
            } else if (line.rfind("n:", 0) == 0) {
                declared_n = std::stoll(line.substr(2));
            } else if (line.rfind("provenance:", 0) == 0) {
                provenance = line.substr(11);
                const auto b = provenance.find_first_not_of(' ');
                provenance = b == std::string::npos ? "" : provenance.substr(b);
            } else {
                require(ranges.has_value(), "line " + std::to_string(lineno) +
                                                ": data rows before the 'ranges:' header");
                std::istringstream row_in(line);
                std::vector<int> row;
                int value;
                while (row_in >> value) row.push_back(value);
                require(static_cast<int>(row.size()) == ranges->m(),
                        "line " + std::to_string(lineno) + ": row has " +
                            std::to_string(row.size()) + " values, expected " +
                            std::to_string(ranges->m()));
                for (int v = 1; v <= ranges->m(); ++v)
                    require(row[static_cast<std::size_t>(v - 1)] >= 0 &&
                                row[static_cast<std::size_t>(v - 1)] < ranges->range(v),
                            "line " + std::to_string(lineno) + ": value for vertex " +
                                std::to_string(v) + " out of range");
                rows.push_back(std::move(row));
            }
        }
        require(ranges.has_value(), "dataset lacks a 'ranges:' header");
        require(declared_n == static_cast<long long>(rows.size()),
                "dataset declares n = " + std::to_string(declared_n) + " but has " +
                    std::to_string(rows.size()) + " rows");
        return Dataset{*ranges, std::move(rows), std::move(provenance)};
    }

  private:
    static std::vector<int> parse_int_list(const std::string& body, int lineno) {
        std::string cleaned;
        for (char c : body)
            if (c != '[' && c != ']' && c != ',') cleaned += c;
            else cleaned += ' ';
        std::istringstream in(cleaned);
        std::vector<int> out;
        int v;
        while (in >> v) out.push_back(v);
        require(!out.empty(), "line " + std::to_string(lineno) + ": empty integer list");
        return out;
    }
};

// One record per engine draw: u = (draw >> 11) * 2^-53, then the first
// configuration whose cumulative probability exceeds u.
inline Dataset sample(const JointTable& joint, long long n, std::uint64_t seed,
                      const std::string& provenance_hint = "") {
    require(n >= 0, "sample size must be non-negative");
    const long long configs = static_cast<long long>(joint.probabilities().size());
    std::vector<double> cumulative(static_cast<std::size_t>(configs));
    double acc = 0.0;
    for (long long c = 0; c < configs; ++c) {
        acc += rational_to_double(joint.p(c));
        cumulative[static_cast<std::size_t>(c)] = acc;
    }
    cumulative.back() = 1.0;

    std::mt19937_64 rng(seed);
    Dataset data{joint.ranges(), {}, ""};
    data.rows.reserve(static_cast<std::size_t>(n));
    const VertexSet all = vs_all(joint.m());
    for (long long t = 0; t < n; ++t) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        long long lo = 0, hi = configs - 1;
        while (lo < hi) {
            const long long mid = (lo + hi) / 2;
            if (u < cumulative[static_cast<std::size_t>(mid)])
                hi = mid;
            else
                lo = mid + 1;
        }
        data.rows.push_back(joint.ranges().decode(all, lo));
    }
    std::ostringstream prov;
    if (!provenance_hint.empty()) prov << provenance_hint << " ";
    prov << "seed=" << seed << " generator=" << kSamplerContract;
    data.provenance = prov.str();
    return data;
}

// ---- the data-based score -------------------------------------------------

struct BicVertexTerm {
    int vertex = 0;
    long long params = 0;       // structural count, empty rows included
    double loglik = 0.0;        // maximised, natural log
    double contribution = 0.0;  // 2 * loglik - c * params * ln(n)
    std::vector<long long> empty_parent_rows;  // parent configs never observed
};

struct BicBreakdown {
    double total = 0.0;
    double c = 1.0;
    long long n = 0;
    std::vector<BicVertexTerm> terms;
};

// Penalised maximised log-likelihood, decomposed per vertex; zero counts
// contribute zero likelihood, and the penalty counts the structural
// parameters whether or not their rows were observed.
inline BicBreakdown bic(const Dag& g, const Dataset& data, double c = 1.0) {
    require(g.m() == data.ranges.m(), "graph and dataset must share a vertex count");
    require(data.n() > 0, "the score needs at least one record");
    BicBreakdown out;
    out.c = c;
    out.n = data.n();
    const double log_n = std::log(static_cast<double>(data.n()));
    for (int v = 1; v <= g.m(); ++v) {
        const VertexSet pa = g.parents(v);
        const long long pa_configs = data.ranges.num_configs(pa);
        const int card = data.ranges.range(v);
        std::vector<long long> counts(static_cast<std::size_t>(pa_configs * card), 0);
        std::vector<long long> pa_counts(static_cast<std::size_t>(pa_configs), 0);
        for (const auto& row : data.rows) {
            std::vector<int> pa_values;
            pa_values.reserve(static_cast<std::size_t>(vs_size(pa)));
            vs_for_each(pa, [&](int u) { pa_values.push_back(row[static_cast<std::size_t>(u - 1)]); });
            const long long pc = data.ranges.index_of(pa, pa_values);
            ++pa_counts[static_cast<std::size_t>(pc)];
            ++counts[static_cast<std::size_t>(pc * card + row[static_cast<std::size_t>(v - 1)])];
        }
        BicVertexTerm term;
        term.vertex = v;
        term.params = static_cast<long long>(card - 1) * pa_configs;
        for (long long pc = 0; pc < pa_configs; ++pc) {
            if (pa_counts[static_cast<std::size_t>(pc)] == 0) {
                term.empty_parent_rows.push_back(pc);
                continue;
            }
            for (int val = 0; val < card; ++val) {
                const long long k = counts[static_cast<std::size_t>(pc * card + val)];
                if (k == 0) continue;
                term.loglik += static_cast<double>(k) *
                               std::log(static_cast<double>(k) /
                                        static_cast<double>(pa_counts[static_cast<std::size_t>(pc)]));
            }
        }
        term.contribution = 2.0 * term.loglik - c * static_cast<double>(term.params) * log_n;
        out.total += term.contribution;
        out.terms.push_back(std::move(term));
    }
    return out;
}

// ---- repeated-draw comparison --------------------------------------------

struct ProbeCandidate {
    std::string name;
    Dag dag;
};

struct ProbeCell {
    long long n = 0;
    std::uint64_t seed = 0;
    std::vector<double> bic_totals;  // aligned with the candidate list
};

// For an ordered candidate pair, which consistency clause (if any) claims
// the first should win: 'a' when only the first is Markovian, 'b' when both
// are and the first has strictly fewer parameters, '-' otherwise.
struct ProbePairSummary {
    std::size_t first = 0, second = 0;
    char clause = '-';
    std::size_t trials = 0;
    std::size_t first_preferred = 0;  // strictly larger data score
};

struct ProbeReport {
    std::vector<ProbeCandidate> candidates;
    std::vector<NecScore> nec_scores;
    std::vector<long long> param_counts;
    std::vector<ProbeCell> cells;
    std::vector<ProbePairSummary> pairs;
};

inline ProbeReport consistency_probe(const std::vector<ProbeCandidate>& candidates,
                                     const MultinomialModel& truth,
                                     const std::vector<long long>& n_schedule,
                                     const std::vector<std::uint64_t>& seeds, double c = 1.0) {
    require(!candidates.empty(), "the probe needs at least one candidate graph");
    const JointTable joint = joint_from_model(truth);
    const IndependenceModel truth_model = extract_independence_model(joint);

    ProbeReport report;
    report.candidates = candidates;
    for (const ProbeCandidate& cand : candidates) {
        require(cand.dag.m() == truth.dag().m(),
                "candidate '" + cand.name + "' disagrees on vertex count");
        report.nec_scores.push_back(nec(cand.dag, truth_model));
        report.param_counts.push_back(param_count(cand.dag, truth.ranges()));
    }

    for (const long long n : n_schedule)
        for (const std::uint64_t seed : seeds) {
            const Dataset data = sample(joint, n, seed);
            ProbeCell cell{n, seed, {}};
            for (const ProbeCandidate& cand : candidates)
                cell.bic_totals.push_back(bic(cand.dag, data, c).total);
            report.cells.push_back(std::move(cell));
        }

    for (std::size_t a = 0; a < candidates.size(); ++a)
        for (std::size_t b = 0; b < candidates.size(); ++b) {
            if (a == b) continue;
            ProbePairSummary pair;
            pair.first = a;
            pair.second = b;
            const bool ma = report.nec_scores[a].markovian, mb = report.nec_scores[b].markovian;
            if (ma && !mb)
                pair.clause = 'a';
            else if (ma && mb && report.param_counts[a] < report.param_counts[b])
                pair.clause = 'b';
            for (const ProbeCell& cell : report.cells) {
                ++pair.trials;
                if (cell.bic_totals[a] > cell.bic_totals[b]) ++pair.first_preferred;
            }
            report.pairs.push_back(pair);
        }
    return report;
}

}  // namespace razors

// razors.hpp - the thirteen graph-selection criteria over an independence
// model, decided per graph (with textual witnesses for rejections) or by
// exhaustive enumeration of the whole graph space.
//
// Direct routes (no enumeration): the Markov condition, faithfulness and its
// adjacency / orientation / triangle restrictions, minimality via single
// deletions, maximality via equivalence-class deletions, and the unique-
// maximality construction.  Enumeration backs the frugality and parameter-
// minimality criteria and the class listings; it is capped at m = 5.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "core.hpp"
#include "dag.hpp"
#include "enumerate.hpp"
#include "imset.hpp"
#include "independence.hpp"
#include "multinomial.hpp"
#include "transforms.hpp"

namespace razors {

enum class RazorId {
    CFC,
    UPm,
    ResF,
    AdjF,
    OriF,
    UFr,
    Fr,
    UParamM,
    ParamM,
    Pm,
    SGS,
    TriF,
    CMC,
};

inline const std::vector<RazorId>& all_razors() {
    static const std::vector<RazorId> order = {
        RazorId::CFC, RazorId::UPm,     RazorId::ResF,   RazorId::AdjF, RazorId::OriF,
        RazorId::UFr, RazorId::Fr,      RazorId::UParamM, RazorId::ParamM,
        RazorId::Pm,  RazorId::SGS,     RazorId::TriF,   RazorId::CMC,
    };
    return order;
}

inline std::string razor_name(RazorId id) {
    switch (id) {
        case RazorId::CFC: return "CFC";
        case RazorId::UPm: return "uPm";
        case RazorId::ResF: return "resF";
        case RazorId::AdjF: return "adjF";
        case RazorId::OriF: return "oriF";
        case RazorId::UFr: return "uFr";
        case RazorId::Fr: return "Fr";
        case RazorId::UParamM: return "uParamM";
        case RazorId::ParamM: return "ParamM";
        case RazorId::Pm: return "Pm";
        case RazorId::SGS: return "SGS";
        case RazorId::TriF: return "triF";
        case RazorId::CMC: return "CMC";
    }
    throw std::logic_error("unknown razor id");
}

inline RazorId razor_from_name(const std::string& name) {
    for (RazorId id : all_razors())
        if (razor_name(id) == name) return id;
    throw std::invalid_argument("unknown razor '" + name + "'");
}

// Parameter-based criteria need a range spec on top of the model.
inline bool razor_needs_ranges(RazorId id) {
    return id == RazorId::ParamM || id == RazorId::UParamM;
}

// Criteria that quantify over the whole graph space rather than the graph
// itself and its equivalence class.
inline bool razor_needs_enumeration(RazorId id) {
    return id == RazorId::Fr || id == RazorId::UFr || id == RazorId::ParamM ||
           id == RazorId::UParamM;
}

struct RazorVerdict {
    RazorId razor;
    bool member = false;
    std::string witness;  // reason for a rejection; empty on acceptance
};

namespace detail {

// Conditioning sets of the model grouped by pair, for fast scans.
class PairIndex {
  public:
    explicit PairIndex(const IndependenceModel& model)
        : m_(model.m()), sets_(static_cast<std::size_t>(m_ * m_)) {
        for (const CiStatement& c : model.statements())
            sets_[slot(c.i, c.j)].push_back(c.s);
    }

    const std::vector<VertexSet>& sets(int i, int j) const {
        return sets_[slot(std::min(i, j), std::max(i, j))];
    }

  private:
    std::size_t slot(int i, int j) const {
        return static_cast<std::size_t>((i - 1) * m_ + (j - 1));
    }

    int m_;
    std::vector<std::vector<VertexSet>> sets_;
};

}  // namespace detail

// ---- direct (per-graph) criteria -----------------------------------------

inline RazorVerdict cmc_verdict(const Dag& g, const IndependenceModel& model) {
    if (const auto bad = markov_violation(g, model))
        return {RazorId::CMC, false,
                "the graph entails " + bad->to_string() + " which the model lacks"};
    return {RazorId::CMC, true, ""};
}

inline RazorVerdict cfc_verdict(const Dag& g, const IndependenceModel& model) {
    RazorVerdict v = cmc_verdict(g, model);
    if (!v.member) return {RazorId::CFC, false, v.witness};
    const IndependenceModel entailed = independence_model_of_dag(g);
    for (const CiStatement& c : model.statements())
        if (!entailed.contains(c))
            return {RazorId::CFC, false,
                    "the model holds " + c.to_string() + " which the graph does not entail"};
    return {RazorId::CFC, true, ""};
}

inline RazorVerdict adjf_verdict(const Dag& g, const IndependenceModel& model) {
    RazorVerdict v = cmc_verdict(g, model);
    if (!v.member) return {RazorId::AdjF, false, v.witness};
    const detail::PairIndex index(model);
    for (const auto& [j, k] : g.edges())
        for (const VertexSet s : index.sets(j, k))
            return {RazorId::AdjF, false,
                    "vertices " + std::to_string(std::min(j, k)) + " and " +
                        std::to_string(std::max(j, k)) + " are adjacent yet the model holds " +
                        CiStatement(j, k, s).to_string()};
    return {RazorId::AdjF, true, ""};
}

namespace detail {

// Shared clause for the orientation and triangle criteria: within the given
// triples, a collider middle must appear in no separating set of its outer
// pair, a non-collider middle in every one.
inline std::optional<std::string> triple_clause_violation(const std::vector<Triple>& triples,
                                                          const PairIndex& index) {
    for (const Triple& t : triples) {
        for (const VertexSet s : index.sets(t.i, t.k)) {
            if (t.collider_at_j && vs_contains(s, t.j))
                return "the collider " + std::to_string(t.i) + " -> " + std::to_string(t.j) +
                       " <- " + std::to_string(t.k) + " conflicts with " +
                       CiStatement(t.i, t.k, s).to_string();
            if (!t.collider_at_j && !vs_contains(s, t.j))
                return "the non-collider path " + std::to_string(t.i) + " - " +
                       std::to_string(t.j) + " - " + std::to_string(t.k) + " conflicts with " +
                       CiStatement(t.i, t.k, s).to_string();
        }
    }
    return std::nullopt;
}

}  // namespace detail

inline RazorVerdict orif_verdict(const Dag& g, const IndependenceModel& model) {
    RazorVerdict v = cmc_verdict(g, model);
    if (!v.member) return {RazorId::OriF, false, v.witness};
    const detail::PairIndex index(model);
    if (const auto bad = detail::triple_clause_violation(unshielded_triples(g), index))
        return {RazorId::OriF, false, *bad};
    return {RazorId::OriF, true, ""};
}

inline RazorVerdict trif_verdict(const Dag& g, const IndependenceModel& model) {
    RazorVerdict v = cmc_verdict(g, model);
    if (!v.member) return {RazorId::TriF, false, v.witness};
    const detail::PairIndex index(model);
    if (const auto bad = detail::triple_clause_violation(shielded_triples(g), index))
        return {RazorId::TriF, false, *bad};
    return {RazorId::TriF, true, ""};
}

inline RazorVerdict resf_verdict(const Dag& g, const IndependenceModel& model) {
    RazorVerdict adj = adjf_verdict(g, model);
    if (!adj.member) return {RazorId::ResF, false, adj.witness};
    RazorVerdict ori = orif_verdict(g, model);
    if (!ori.member) return {RazorId::ResF, false, ori.witness};
    return {RazorId::ResF, true, ""};
}

inline RazorVerdict sgs_verdict(const Dag& g, const IndependenceModel& model) {
    RazorVerdict v = cmc_verdict(g, model);
    if (!v.member) return {RazorId::SGS, false, v.witness};
    // A proper Markovian subgraph exists iff a single deletion stays
    // Markovian: entailed independencies only grow as edges are removed.
    for (const auto& [j, k] : g.edges())
        if (is_markovian(g.without_edge(j, k), model))
            return {RazorId::SGS, false,
                    "deleting " + Dag::edge_name(j, k) + " leaves a Markovian proper subgraph"};
    return {RazorId::SGS, true, ""};
}

// Maximality: no Markovian graph entails a strict superset of independencies.
// By the stepwise-reduction theorem it suffices to look for a Markovian
// single deletion anywhere in the equivalence class.
inline RazorVerdict pm_verdict(const Dag& g, const IndependenceModel& model) {
    RazorVerdict v = cmc_verdict(g, model);
    if (!v.member) return {RazorId::Pm, false, v.witness};
    for (const Dag& member : detail::covered_closure(g))
        for (const auto& [j, k] : member.edges())
            if (is_markovian(member.without_edge(j, k), model))
                return {RazorId::Pm, false,
                        "an equivalent graph minus " + Dag::edge_name(j, k) +
                            " is Markovian and entails strictly more: " +
                            member.without_edge(j, k).to_text()};
    return {RazorId::Pm, true, ""};
}

namespace detail {

// Starting from a graph entailing exactly one model statement, walk to a
// maximal Markovian graph: while some equivalent graph admits a Markovian
// deletion, take it.  Entailed independencies only grow, so the walk keeps
// the seed statement and terminates.
inline Dag climb_to_maximal(Dag x, const IndependenceModel& model) {
    bool improved = true;
    while (improved) {
        improved = false;
        for (const Dag& member : covered_closure(x)) {
            for (const auto& [j, k] : member.edges()) {
                Dag next = member.without_edge(j, k);
                if (is_markovian(next, model)) {
                    x = std::move(next);
                    improved = true;
                    break;
                }
            }
            if (improved) break;
        }
    }
    return x;
}

}  // namespace detail

// Unique maximality: the graph is maximal and every maximal graph is
// equivalent to it.  Rejections are constructive: a maximal graph entailing
// a model statement this graph lacks is exhibited.
inline RazorVerdict upm_verdict(const Dag& g, const IndependenceModel& model) {
    RazorVerdict pm = pm_verdict(g, model);
    if (!pm.member) return {RazorId::UPm, false, pm.witness};
    const IndependenceModel entailed = independence_model_of_dag(g);
    std::optional<CiStatement> missing;
    for (const CiStatement& c : model.statements())
        if (!entailed.contains(c)) {
            missing = c;
            break;
        }
    if (!missing) return {RazorId::UPm, true, ""};
    const Dag rival = detail::climb_to_maximal(single_ci_dag(g.m(), *missing), model);
    return {RazorId::UPm, false,
            "a non-equivalent maximal Markovian graph entails " + missing->to_string() + ":\n" +
                rival.to_text()};
}

// ---- exhaustive enumeration ----------------------------------------------

inline constexpr int kClassCeiling = 5;

// Everything the single enumeration pass learns about one Markovian graph.
struct MarkovianEntry {
    std::uint64_t mask = 0;
    int edges = 0;
    long long params = -1;  // -1 when no range spec was supplied
    bool faithful = false;
    bool adjf = false, orif = false, trif = false;
    std::uint64_t skeleton = 0;
    std::uint64_t colliders = 0;  // packed unshielded-collider triples
};

class ClassReport {
  public:
    ClassReport(IndependenceModel model, std::optional<RangeSpec> ranges, int threads = 1,
                int ceiling = kClassCeiling)
        : model_(std::move(model)), ranges_(std::move(ranges)), index_(model_) {
        require(model_.m() <= ceiling,
                "class enumeration is capped at m = " + std::to_string(ceiling) + ", got m = " +
                    std::to_string(model_.m()) +
                    "; per-graph classification remains available for the direct criteria");
        if (ranges_)
            require(ranges_->m() == model_.m(), "range spec and model disagree on vertex count");
        build(threads < 1 ? 1 : threads);
    }

    const IndependenceModel& model() const { return model_; }
    const std::optional<RangeSpec>& ranges() const { return ranges_; }
    const std::vector<MarkovianEntry>& markovian() const { return entries_; }
    bool is_markovian_mask(std::uint64_t mask) const { return markovian_masks_.count(mask) > 0; }

    const std::vector<std::uint64_t>& members(RazorId id) const {
        if (razor_needs_ranges(id) && !ranges_)
            throw std::invalid_argument("criterion " + razor_name(id) +
                                        " needs a range spec, and none was supplied");
        return members_.at(id);
    }

    bool contains(RazorId id, const Dag& g) const {
        const std::uint64_t mask = g.arc_mask();
        const auto& ms = members(id);
        return std::binary_search(ms.begin(), ms.end(), mask);
    }

    int min_edges() const { return min_edges_; }
    long long min_params() const { return min_params_; }

  private:
    void build(int threads) {
        const int m = model_.m();
        const std::vector<std::uint64_t> masks = all_dag_masks(m);
        std::vector<std::vector<MarkovianEntry>> partial(static_cast<std::size_t>(threads));
        const auto worker = [&](int t) {
            const std::size_t lo = masks.size() * static_cast<std::size_t>(t) /
                                   static_cast<std::size_t>(threads);
            const std::size_t hi = masks.size() * static_cast<std::size_t>(t + 1) /
                                   static_cast<std::size_t>(threads);
            for (std::size_t idx = lo; idx < hi; ++idx)
                if (auto entry = examine(masks[idx]))
                    partial[static_cast<std::size_t>(t)].push_back(*entry);
        };
        if (threads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
            for (std::thread& th : pool) th.join();
        }
        for (const auto& chunk : partial)
            entries_.insert(entries_.end(), chunk.begin(), chunk.end());
        for (const MarkovianEntry& e : entries_) markovian_masks_.insert(e.mask);
        summarise();
    }

    std::optional<MarkovianEntry> examine(std::uint64_t mask) const {
        const int m = model_.m();
        const Dag g = Dag::from_arc_mask(m, mask);
        std::size_t entailed = 0;
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                const VertexSet rest = vs_remove(vs_remove(g.vertex_set(), i), j);
                bool violated = false;
                vs_for_each_subset(rest, [&](VertexSet s) {
                    if (violated) return;
                    if (d_separated(g, i, j, s)) {
                        if (!model_.contains(i, j, s))
                            violated = true;
                        else
                            ++entailed;
                    }
                });
                if (violated) return std::nullopt;
            }

        MarkovianEntry e;
        e.mask = mask;
        e.edges = g.edge_count();
        if (ranges_) e.params = param_count(g, *ranges_);
        e.faithful = entailed == model_.size();
        e.adjf = true;
        for (const auto& [j, k] : g.edges())
            if (!index_.sets(j, k).empty()) e.adjf = false;
        e.orif = !detail::triple_clause_violation(unshielded_triples(g), index_).has_value();
        e.trif = !detail::triple_clause_violation(shielded_triples(g), index_).has_value();
        e.skeleton = skeleton_mask(g);
        e.colliders = pack_colliders(g);
        return e;
    }

    std::uint64_t pack_colliders(const Dag& g) const {
        // Bit per (outer pair, middle) triple; fits 64 bits for m <= 6.
        const int m = g.m();
        std::uint64_t packed = 0;
        for (const Triple& t : unshielded_colliders(g)) {
            int pair_index = 0, seen = 0;
            for (int a = 1; a <= m && !seen; ++a)
                for (int b = a + 1; b <= m; ++b) {
                    if (a == t.i && b == t.k) { seen = 1; break; }
                    ++pair_index;
                }
            int j_index = t.j - 1;
            if (t.j > t.i) --j_index;
            if (t.j > t.k) --j_index;
            packed |= std::uint64_t{1} << (pair_index * (m - 2) + j_index);
        }
        return packed;
    }

    void summarise() {
        for (const MarkovianEntry& e : entries_) {
            min_edges_ = min_edges_ < 0 ? e.edges : std::min(min_edges_, e.edges);
            if (ranges_) min_params_ = min_params_ < 0 ? e.params : std::min(min_params_, e.params);
        }

        std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::uint64_t>> mecs;
        for (const MarkovianEntry& e : entries_) {
            mecs[{e.skeleton, e.colliders}].push_back(e.mask);
            mec_key_[e.mask] = {e.skeleton, e.colliders};
        }

        const auto deletion_markovian = [&](std::uint64_t mask) {
            std::uint64_t rest = mask;
            while (rest) {
                const std::uint64_t bit = rest & (~rest + 1);
                if (markovian_masks_.count(mask & ~bit)) return true;
                rest &= ~bit;
            }
            return false;
        };

        std::vector<std::uint64_t> pm;
        for (const auto& [key, masks] : mecs) {
            bool maximal = true;
            for (const std::uint64_t mask : masks)
                if (deletion_markovian(mask)) { maximal = false; break; }
            if (maximal) pm.insert(pm.end(), masks.begin(), masks.end());
        }
        std::sort(pm.begin(), pm.end());

        const auto unique_class = [&](const std::vector<std::uint64_t>& ms) {
            for (const std::uint64_t mask : ms)
                if (mec_key_.at(mask) != mec_key_.at(ms.front()))
                    return std::vector<std::uint64_t>{};
            return ms;
        };

        std::map<RazorId, std::vector<std::uint64_t>> out;
        for (const MarkovianEntry& e : entries_) {
            out[RazorId::CMC].push_back(e.mask);
            if (e.faithful) out[RazorId::CFC].push_back(e.mask);
            if (e.adjf) out[RazorId::AdjF].push_back(e.mask);
            if (e.orif) out[RazorId::OriF].push_back(e.mask);
            if (e.adjf && e.orif) out[RazorId::ResF].push_back(e.mask);
            if (e.trif) out[RazorId::TriF].push_back(e.mask);
            if (e.edges == min_edges_) out[RazorId::Fr].push_back(e.mask);
            if (ranges_ && e.params == min_params_) out[RazorId::ParamM].push_back(e.mask);
            if (!deletion_markovian(e.mask)) out[RazorId::SGS].push_back(e.mask);
        }
        out[RazorId::Pm] = pm;
        out[RazorId::UPm] = unique_class(pm);
        out[RazorId::UFr] = unique_class(out[RazorId::Fr]);
        if (ranges_) out[RazorId::UParamM] = unique_class(out[RazorId::ParamM]);
        for (RazorId id : all_razors()) {
            if (razor_needs_ranges(id) && !ranges_) continue;
            std::sort(out[id].begin(), out[id].end());
        }
        members_ = std::move(out);
    }

    IndependenceModel model_;
    std::optional<RangeSpec> ranges_;
    detail::PairIndex index_;
    std::vector<MarkovianEntry> entries_;
    std::unordered_set<std::uint64_t> markovian_masks_;
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> mec_key_;
    std::map<RazorId, std::vector<std::uint64_t>> members_;
    int min_edges_ = -1;
    long long min_params_ = -1;
};

// ---- per-graph classification --------------------------------------------

inline RazorVerdict classify_one(const Dag& g, const IndependenceModel& model, RazorId id,
                                 const std::optional<RangeSpec>& ranges = std::nullopt,
                                 const ClassReport* report = nullptr) {
    require(g.m() == model.m(), "graph and model must share a vertex count");
    switch (id) {
        case RazorId::CMC: return cmc_verdict(g, model);
        case RazorId::CFC: return cfc_verdict(g, model);
        case RazorId::AdjF: return adjf_verdict(g, model);
        case RazorId::OriF: return orif_verdict(g, model);
        case RazorId::ResF: return resf_verdict(g, model);
        case RazorId::TriF: return trif_verdict(g, model);
        case RazorId::SGS: return sgs_verdict(g, model);
        case RazorId::Pm: return pm_verdict(g, model);
        case RazorId::UPm: return upm_verdict(g, model);
        default: break;
    }
    if (razor_needs_ranges(id) && !ranges)
        throw std::invalid_argument("criterion " + razor_name(id) +
                                    " needs a range spec, and none was supplied");
    std::optional<ClassReport> local;
    if (report == nullptr) {
        local.emplace(model, ranges);
        report = &*local;
    }
    const bool member = report->contains(id, g);
    if (member) return {id, true, ""};

    std::string witness;
    switch (id) {
        case RazorId::Fr:
            witness = is_markovian(g, model)
                          ? "a Markovian graph with only " + std::to_string(report->min_edges()) +
                                " edges exists: " +
                                Dag::from_arc_mask(g.m(), report->members(RazorId::Fr).front())
                                    .to_text()
                          : cmc_verdict(g, model).witness;
            break;
        case RazorId::ParamM:
            witness = is_markovian(g, model)
                          ? "a Markovian graph with only " + std::to_string(report->min_params()) +
                                " parameters exists: " +
                                Dag::from_arc_mask(g.m(), report->members(RazorId::ParamM).front())
                                    .to_text()
                          : cmc_verdict(g, model).witness;
            break;
        case RazorId::UFr:
        case RazorId::UParamM: {
            const RazorId base = id == RazorId::UFr ? RazorId::Fr : RazorId::ParamM;
            const auto& ms = report->members(base);
            if (!report->contains(base, g)) {
                witness = classify_one(g, model, base, ranges, report).witness;
            } else {
                const Dag first = Dag::from_arc_mask(g.m(), ms.front());
                std::string rival_text = "?";
                for (const std::uint64_t mask : ms) {
                    const Dag other = Dag::from_arc_mask(g.m(), mask);
                    if (!markov_equivalent(first, other)) {
                        rival_text = other.to_text();
                        break;
                    }
                }
                witness = "the class collapses to empty: it holds non-equivalent members, "
                          "e.g.\n" +
                          first.to_text() + "and\n" + rival_text;
            }
            break;
        }
        default: throw std::logic_error("unhandled enumeration criterion");
    }
    return {id, false, witness};
}

inline std::vector<RazorVerdict> classify(const Dag& g, const IndependenceModel& model,
                                          const std::optional<RangeSpec>& ranges = std::nullopt,
                                          std::vector<RazorId> which = {},
                                          const ClassReport* report = nullptr) {
    if (which.empty()) {
        for (RazorId id : all_razors())
            if (ranges || !razor_needs_ranges(id)) which.push_back(id);
    }
    std::optional<ClassReport> local;
    const bool enumeration_wanted =
        std::any_of(which.begin(), which.end(),
                    [](RazorId id) { return razor_needs_enumeration(id); });
    if (report == nullptr && enumeration_wanted && model.m() <= kClassCeiling) {
        local.emplace(model, ranges);
        report = &*local;
    }
    std::vector<RazorVerdict> out;
    out.reserve(which.size());
    for (RazorId id : which) out.push_back(classify_one(g, model, id, ranges, report));
    return out;
}

// ---- realizability --------------------------------------------------------

struct RealizabilityRow {
    RazorId razor;
    bool empty = true;
    std::optional<std::uint64_t> example_mask;
    std::size_t size = 0;
};

inline std::vector<RealizabilityRow> realizability_report(const ClassReport& report) {
    std::vector<RealizabilityRow> out;
    for (RazorId id : all_razors()) {
        if (razor_needs_ranges(id) && !report.ranges()) continue;
        const auto& ms = report.members(id);
        RealizabilityRow row{id, ms.empty(), std::nullopt, ms.size()};
        if (!ms.empty()) row.example_mask = ms.front();
        out.push_back(row);
    }
    return out;
}

// ---- random instances for property tests ---------------------------------

// Deterministic Fisher-Yates on the raw engine; avoids std::shuffle's
// implementation-defined draws.
inline std::vector<int> random_permutation(int m, std::mt19937_64& rng) {
    std::vector<int> order(static_cast<std::size_t>(m));
    for (int v = 1; v <= m; ++v) order[static_cast<std::size_t>(v - 1)] = v;
    for (int i = m - 1; i > 0; --i)
        std::swap(order[static_cast<std::size_t>(i)],
                  order[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1))]);
    return order;
}

// Random graph: a random vertex order, each pair wired with probability 1/2
// and oriented along the order.
inline Dag random_dag(int m, std::mt19937_64& rng) {
    const std::vector<int> order = random_permutation(m, rng);
    std::vector<int> position(static_cast<std::size_t>(m) + 1, 0);
    for (int t = 0; t < m; ++t) position[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])] = t;
    std::vector<Edge> edges;
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v)
            if (rng() & 1u) {
                if (position[static_cast<std::size_t>(u)] < position[static_cast<std::size_t>(v)])
                    edges.emplace_back(u, v);
                else
                    edges.emplace_back(v, u);
            }
    return Dag(m, edges);
}

inline constexpr int kRandomDenominatorCap = 20;

// Strictly positive conditional rows: a random denominator d <= 20 split
// into card positive parts via distinct cut points.
inline std::vector<Rational> random_theta_row(int card, std::mt19937_64& rng) {
    const int lo = std::max(card, 2);
    const int d = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                            kRandomDenominatorCap - lo + 1));
    std::vector<int> cuts(static_cast<std::size_t>(d - 1));
    for (int c = 1; c < d; ++c) cuts[static_cast<std::size_t>(c - 1)] = c;
    for (int i = d - 2; i > 0; --i)
        std::swap(cuts[static_cast<std::size_t>(i)],
                  cuts[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1))]);
    cuts.resize(static_cast<std::size_t>(card - 1));
    std::sort(cuts.begin(), cuts.end());
    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(card));
    int prev = 0;
    for (const int c : cuts) {
        row.emplace_back(Rational(c - prev, d));
        prev = c;
    }
    row.emplace_back(Rational(d - prev, d));
    return row;
}

inline MultinomialModel random_multinomial_model(int m, std::mt19937_64& rng, int max_range = 3) {
    require(max_range >= 2, "max_range must be at least 2");
    const Dag g = random_dag(m, rng);
    std::vector<int> r(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v)
        r[static_cast<std::size_t>(v)] =
            2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_range - 1));
    const RangeSpec ranges(r);
    std::vector<ThetaTable> tables;
    for (int v = 1; v <= m; ++v) {
        ThetaTable t;
        t.vertex = v;
        t.parents = g.parents(v);
        const long long rows = ranges.num_configs(t.parents);
        for (long long row = 0; row < rows; ++row)
            t.rows.push_back(random_theta_row(ranges.range(v), rng));
        tables.push_back(std::move(t));
    }
    return MultinomialModel(g, ranges, std::move(tables));
}

}  // namespace razors

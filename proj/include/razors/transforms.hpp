// transforms.hpp - covered-edge reversals, equivalence-class traversal, and
// stepwise reduction of one graph onto an independence-equivalent-or-sparser
// one via reversals and deletions.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "core.hpp"
#include "dag.hpp"
#include "independence.hpp"

namespace razors {

// An edge j -> k is covered when j and k share all other parents:
// Pa(j) = Pa(k) \ {j}.  Reversing such an edge keeps the graph acyclic and
// entails exactly the same independence model.
inline bool is_covered_edge(const Dag& g, int j, int k) {
    require(g.has_edge(j, k), "no edge " + Dag::edge_name(j, k));
    return g.parents(j) == vs_remove(g.parents(k), j);
}

inline std::vector<Edge> covered_edges(const Dag& g) {
    std::vector<Edge> out;
    for (const auto& [j, k] : g.edges())
        if (is_covered_edge(g, j, k)) out.emplace_back(j, k);
    return out;
}

inline Dag reverse_covered(const Dag& g, int j, int k) {
    require(g.has_edge(j, k), "no edge " + Dag::edge_name(j, k) + " to reverse");
    if (!is_covered_edge(g, j, k))
        throw std::invalid_argument(
            "edge " + Dag::edge_name(j, k) + " is not covered: Pa(" + std::to_string(j) +
            ") = " + vs_to_string(g.parents(j)) + " but Pa(" + std::to_string(k) + ") \\ {" +
            std::to_string(j) + "} = " + vs_to_string(vs_remove(g.parents(k), j)));
    return g.with_reversed_edge(j, k);
}

namespace detail {

// Closure of g under covered-edge reversals, sorted by arc mask.  By the
// classical reversal characterisation this closure is the whole Markov
// equivalence class; the test suite checks that against the brute-force
// definition.
inline std::vector<Dag> covered_closure(const Dag& g) {
    std::unordered_set<std::uint64_t> seen{g.arc_mask()};
    std::deque<Dag> frontier{g};
    std::vector<Dag> out{g};
    while (!frontier.empty()) {
        const Dag cur = frontier.front();
        frontier.pop_front();
        for (const auto& [j, k] : covered_edges(cur)) {
            Dag next = cur.with_reversed_edge(j, k);
            if (seen.insert(next.arc_mask()).second) {
                frontier.push_back(next);
                out.push_back(std::move(next));
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Dag& a, const Dag& b) { return a.arc_mask() < b.arc_mask(); });
    return out;
}

}  // namespace detail

inline constexpr int kMecCeiling = 5;

// Every graph equivalent to g, sorted by arc mask.  The ceiling guards the
// public entry point; internal callers that enumerate nothing but a single
// class may raise it.
inline std::vector<Dag> mec_members(const Dag& g, int ceiling = kMecCeiling) {
    require(g.m() <= ceiling, "equivalence-class listing is capped at m = " +
                                  std::to_string(ceiling) + ", got m = " + std::to_string(g.m()));
    return detail::covered_closure(g);
}

struct ChickeringStep {
    bool is_reversal = false;  // otherwise a deletion
    Edge edge{0, 0};
    Dag result;

    std::string describe() const {
        return std::string(is_reversal ? "reverse " : "delete ") +
               Dag::edge_name(edge.first, edge.second);
    }
};

struct ChickeringSequence {
    Dag start;
    std::vector<ChickeringStep> steps;

    const Dag& end() const { return steps.empty() ? start : steps.back().result; }

    // Numbered transcript with a snapshot of the graph after each step.
    std::string to_text() const {
        std::ostringstream out;
        out << "start\n" << start.to_text();
        for (std::size_t t = 0; t < steps.size(); ++t) {
            out << (t + 1) << ". " << steps[t].describe() << "\n";
            out << steps[t].result.to_text();
        }
        return out.str();
    }
};

inline constexpr int kChickeringCeiling = 5;

// A stepwise reduction from h to g by covered-edge reversals and edge
// deletions, never entailing an independence that g lacks.  Exists exactly
// when every independence of h is one of g; returns nothing otherwise.
// The search is best-first on skeleton distance with a generous depth bound;
// exhausting the bound would contradict the existence guarantee, so that
// case raises a defect instead of returning absence.
inline std::optional<ChickeringSequence> chickering_sequence(const Dag& h, const Dag& g,
                                                             int ceiling = kChickeringCeiling) {
    require(h.m() == g.m(), "graphs must share a vertex count");
    require(h.m() <= ceiling, "stepwise reduction is capped at m = " + std::to_string(ceiling) +
                                  ", got m = " + std::to_string(h.m()));
    const IndependenceModel target = independence_model_of_dag(g);
    if (!model_subset(independence_model_of_dag(h), target)) return std::nullopt;

    const int depth_bound = h.edge_count() + h.m() * h.m();
    struct Node {
        int priority;
        std::uint64_t mask;
    };
    const auto node_after = [](const Node& a, const Node& b) {
        return a.priority != b.priority ? a.priority > b.priority : a.mask > b.mask;
    };
    const std::uint64_t goal_skeleton = skeleton_mask(g);
    const auto priority_of = [&](const Dag& d) {
        return std::popcount(skeleton_mask(d) ^ goal_skeleton);
    };

    struct Provenance {
        std::uint64_t parent_mask;
        ChickeringStep step;
        int depth;
    };
    std::unordered_map<std::uint64_t, Provenance> visited;
    visited.emplace(h.arc_mask(), Provenance{0, ChickeringStep{false, {0, 0}, h}, 0});
    std::priority_queue<Node, std::vector<Node>, decltype(node_after)> queue(node_after);
    queue.push(Node{priority_of(h), h.arc_mask()});

    while (!queue.empty()) {
        const Node top = queue.top();
        queue.pop();
        const Dag cur = Dag::from_arc_mask(h.m(), top.mask);
        const int depth = visited.at(top.mask).depth;
        if (top.mask == g.arc_mask()) {
            // Reconstruct the step list back to h.
            std::vector<ChickeringStep> steps;
            std::uint64_t at = top.mask;
            while (at != h.arc_mask()) {
                const Provenance& prov = visited.at(at);
                steps.push_back(prov.step);
                at = prov.parent_mask;
            }
            std::reverse(steps.begin(), steps.end());
            return ChickeringSequence{h, std::move(steps)};
        }
        if (depth >= depth_bound) continue;

        const auto offer = [&](ChickeringStep step) {
            const std::uint64_t mask = step.result.arc_mask();
            if (visited.count(mask)) return;
            const int priority = priority_of(step.result);
            visited.emplace(mask, Provenance{top.mask, std::move(step), depth + 1});
            queue.push(Node{priority, mask});
        };
        for (const auto& [j, k] : covered_edges(cur))
            offer(ChickeringStep{true, {j, k}, cur.with_reversed_edge(j, k)});
        for (const auto& [j, k] : cur.edges()) {
            Dag next = cur.without_edge(j, k);
            if (is_markovian(next, target))
                offer(ChickeringStep{false, {j, k}, std::move(next)});
        }
    }
    throw std::logic_error(
        "no reduction found although one must exist; the search itself is defective");
}

}  // namespace razors

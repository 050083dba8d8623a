// enumerate.hpp - exhaustive generation of DAGs over 1..m, plus two directed
// constructions: the minimal-parent graph of a vertex ordering and the
// complete-minus-one-pair graph entailing a single statement.
//
// Enumeration visits every DAG exactly once, in ascending arc-mask order
// (bit (j-1)*m + (k-1) encodes edge j -> k), so runs are reproducible.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "core.hpp"
#include "dag.hpp"
#include "independence.hpp"

namespace razors {

inline constexpr int kEnumerationCeiling = 6;

namespace detail {

// Acyclicity test on raw parent masks (index 0 unused).
inline bool masks_acyclic(const std::vector<VertexSet>& pa, int m) {
    VertexSet placed = 0;
    for (int round = 0; round < m; ++round) {
        bool emitted = false;
        for (int v = 1; v <= m && !emitted; ++v) {
            if (!vs_contains(placed, v) && (pa[static_cast<std::size_t>(v)] & ~placed) == 0) {
                placed = vs_add(placed, v);
                emitted = true;
            }
        }
        if (!emitted) return false;
    }
    return true;
}

}  // namespace detail

// Arc masks of every DAG over 1..m, sorted ascending.  Each unordered pair of
// vertices is independently absent, oriented one way, or oriented the other;
// cyclic assignments are discarded.
inline std::vector<std::uint64_t> all_dag_masks(int m) {
    require(m >= 1 && m <= kEnumerationCeiling,
            "exhaustive enumeration supports m in 1.." + std::to_string(kEnumerationCeiling) +
                ", got " + std::to_string(m));
    std::vector<Edge> pairs;
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v) pairs.emplace_back(u, v);

    std::vector<std::uint64_t> out;
    std::vector<int> trit(pairs.size(), 0);  // 0 absent, 1 u->v, 2 v->u
    std::vector<VertexSet> pa(static_cast<std::size_t>(m) + 1, 0);
    while (true) {
        std::fill(pa.begin(), pa.end(), 0);
        for (std::size_t t = 0; t < pairs.size(); ++t) {
            if (trit[t] == 1)
                pa[static_cast<std::size_t>(pairs[t].second)] =
                    vs_add(pa[static_cast<std::size_t>(pairs[t].second)], pairs[t].first);
            else if (trit[t] == 2)
                pa[static_cast<std::size_t>(pairs[t].first)] =
                    vs_add(pa[static_cast<std::size_t>(pairs[t].first)], pairs[t].second);
        }
        if (detail::masks_acyclic(pa, m)) {
            std::uint64_t mask = 0;
            for (int k = 1; k <= m; ++k)
                vs_for_each(pa[static_cast<std::size_t>(k)], [&](int j) {
                    mask |= std::uint64_t{1} << ((j - 1) * m + (k - 1));
                });
            out.push_back(mask);
        }
        std::size_t t = 0;
        while (t < trit.size() && trit[t] == 2) trit[t++] = 0;
        if (t == trit.size()) break;
        ++trit[t];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Visit every DAG over 1..m in ascending arc-mask order.
template <typename Fn>
void for_each_dag(int m, Fn&& fn) {
    for (const std::uint64_t mask : all_dag_masks(m)) fn(Dag::from_arc_mask(m, mask));
}

inline std::vector<Dag> enumerate_dags(int m) {
    std::vector<Dag> out;
    for_each_dag(m, [&](const Dag& g) { out.push_back(g); });
    return out;
}

// Graph with the fewest parents compatible with the model along the given
// vertex ordering: vertex order[t] starts with all earlier vertices as
// parents, then candidate parents are discarded - scanned in ascending label
// order, repeatedly until stable - whenever the model separates the pair
// given the remaining candidates.
inline Dag permutation_dag(const std::vector<int>& order, const IndependenceModel& model) {
    const int m = model.m();
    require(static_cast<int>(order.size()) == m,
            "ordering must list all " + std::to_string(m) + " vertices");
    VertexSet seen = 0;
    for (int v : order) {
        require(v >= 1 && v <= m, "ordering contains out-of-range vertex " + std::to_string(v));
        require(!vs_contains(seen, v), "ordering repeats vertex " + std::to_string(v));
        seen = vs_add(seen, v);
    }

    Dag g(m);
    VertexSet predecessors = 0;
    std::vector<Edge> edges;
    for (int t = 0; t < m; ++t) {
        const int i = order[static_cast<std::size_t>(t)];
        VertexSet p = predecessors;
        bool changed = true;
        while (changed) {
            changed = false;
            vs_for_each(p, [&](int j) {
                if (model.contains(std::min(i, j), std::max(i, j), vs_remove(p, j))) {
                    p = vs_remove(p, j);
                    changed = true;
                }
            });
        }
        vs_for_each(p, [&](int j) { edges.emplace_back(j, i); });
        predecessors = vs_add(predecessors, i);
    }
    return Dag(m, edges);
}

// The unique-statement construction: a graph over 1..m whose entailed model is
// exactly {<i, j | s>}.  Relabel i first, then s in ascending order, then j,
// then the remaining vertices in ascending order; connect every relabeled pair
// low -> high except the (i, j) pair itself.  For m = 2 this is the empty
// graph.
inline Dag single_ci_dag(int m, const CiStatement& stmt) {
    require(stmt.j <= m, "statement " + stmt.to_string() + " exceeds vertex range");
    require((stmt.s & ~vs_all(m)) == 0, "statement " + stmt.to_string() + " exceeds vertex range");

    std::vector<int> relabel_to_original;
    relabel_to_original.reserve(static_cast<std::size_t>(m));
    relabel_to_original.push_back(stmt.i);
    vs_for_each(stmt.s, [&](int v) { relabel_to_original.push_back(v); });
    relabel_to_original.push_back(stmt.j);
    const VertexSet used = vs_add(vs_add(stmt.s, stmt.i), stmt.j);
    for (int v = 1; v <= m; ++v)
        if (!vs_contains(used, v)) relabel_to_original.push_back(v);

    const int pos_i = 0;
    const int pos_j = 1 + vs_size(stmt.s);
    std::vector<Edge> edges;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            if (a == pos_i && b == pos_j) continue;
            edges.emplace_back(relabel_to_original[static_cast<std::size_t>(a)],
                               relabel_to_original[static_cast<std::size_t>(b)]);
        }
    return Dag(m, edges);
}

}  // namespace razors

// imset.hpp - the 0/1 set function attached to a DAG over non-empty vertex
// subsets, its parameterizing sets, and the induced parameter count.
//
// A non-empty subset s scores 1 exactly when some member i of s has all of
// s \ {i} among its parents; singletons therefore always score 1.  The
// witness is unique (two witnesses would need arrows both ways between
// them), so the scoring sets partition by witness vertex.
#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "dag.hpp"
#include "multinomial.hpp"

namespace razors {

// The unique witness of s, or 0 when s scores 0.  Uniqueness failure would
// mean a two-cycle, which Dag construction rules out, so it is reported as a
// defect rather than a result.
inline int imset_witness(const Dag& g, VertexSet s) {
    require(s != 0, "the set function is defined on non-empty subsets");
    require((s & ~g.vertex_set()) == 0, "subset " + vs_to_string(s) + " out of vertex range");
    int witness = 0;
    vs_for_each(s, [&](int i) {
        if ((vs_remove(s, i) & ~g.parents(i)) == 0) {
            if (witness != 0)
                throw std::logic_error("subset " + vs_to_string(s) +
                                       " has two witnesses; the graph is corrupt");
            witness = i;
        }
    });
    return witness;
}

inline bool imset_value(const Dag& g, VertexSet s) { return imset_witness(g, s) != 0; }

// All non-empty subsets scoring 1, in canonical order (size, then
// lexicographic).  Every singleton appears.
inline std::vector<VertexSet> parameterizing_sets(const Dag& g) {
    std::vector<VertexSet> out;
    vs_for_each_subset(g.vertex_set(), [&](VertexSet s) {
        if (s != 0 && imset_value(g, s)) out.push_back(s);
    });
    std::sort(out.begin(), out.end(),
              [](VertexSet a, VertexSet b) { return vs_compare_canonical(a, b) < 0; });
    return out;
}

// Parameterizing sets grouped by witness vertex.  The group of vertex i is
// exactly the family of subsets s with i in s and s contained in {i} plus
// the parents of i.
inline std::map<int, std::vector<VertexSet>> parameterizing_partition(const Dag& g) {
    std::map<int, std::vector<VertexSet>> out;
    for (const VertexSet s : parameterizing_sets(g)) out[imset_witness(g, s)].push_back(s);
    return out;
}

// Parameter count through the set function: every parameterizing set
// contributes the product of (r(j) - 1) over its members.  Agrees with the
// per-vertex count from the conditional tables.
inline long long param_count_via_imset(const Dag& g, const RangeSpec& ranges) {
    require(g.m() == ranges.m(), "graph and range spec must share a vertex count");
    long long total = 0;
    for (const VertexSet s : parameterizing_sets(g)) {
        long long prod = 1;
        vs_for_each(s, [&](int j) { prod *= ranges.range(j) - 1; });
        total += prod;
    }
    return total;
}

// True when every parameterizing set of sub also parameterizes super.
inline bool paramsets_subset(const Dag& sub, const Dag& super) {
    require(sub.m() == super.m(), "graphs must share a vertex count");
    for (const VertexSet s : parameterizing_sets(sub))
        if (!imset_value(super, s)) return false;
    return true;
}

// One line per parameterizing set, annotated with its witness vertex.
inline std::string dump_parameterizing_sets(const Dag& g) {
    std::ostringstream out;
    for (const VertexSet s : parameterizing_sets(g))
        out << vs_to_string(s) << " witness=" << imset_witness(g, s) << "\n";
    return out.str();
}

}  // namespace razors

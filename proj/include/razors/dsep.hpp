// dsep.hpp - d-separation queries on a Dag.
//
// d_separated(g, i, j, s) decides whether every path between i and j is
// blocked by s: a non-collider on the path blocks when it lies in s, and a
// collider blocks unless it or one of its descendants lies in s.  The
// implementation walks directed reachability states (vertex, entry direction)
// instead of enumerating paths, so each query is linear in the arc count.
#pragma once

#include <vector>

#include "core.hpp"
#include "dag.hpp"

namespace razors {

inline bool d_separated(const Dag& g, int i, int j, VertexSet s) {
    require(i >= 1 && i <= g.m(), "vertex " + std::to_string(i) + " out of range");
    require(j >= 1 && j <= g.m(), "vertex " + std::to_string(j) + " out of range");
    require(i != j, "d-separation needs two distinct vertices");
    require((s & ~g.vertex_set()) == 0, "conditioning set " + vs_to_string(s) + " out of range");
    require(!vs_contains(s, i) && !vs_contains(s, j),
            "conditioning set " + vs_to_string(s) + " must avoid the queried pair");

    // Vertices with themselves or a descendant in s: exactly the set through
    // which a collider may be passed.
    const VertexSet opens_collider = g.ancestral_closure(s);

    // State (v, direction): direction UP means v was entered against an arrow
    // (from a child), DOWN means along an arrow (from a parent).
    VertexSet seen_up = 0, seen_down = 0;
    std::vector<std::pair<int, bool>> stack;  // (vertex, entered_down)
    stack.emplace_back(i, false);
    while (!stack.empty()) {
        const auto [v, entered_down] = stack.back();
        stack.pop_back();
        VertexSet& seen = entered_down ? seen_down : seen_up;
        if (vs_contains(seen, v)) continue;
        seen = vs_add(seen, v);
        if (v == j) return false;

        if (!entered_down) {
            // Entered from a child: v is a non-collider on any continuation.
            if (!vs_contains(s, v)) {
                vs_for_each(g.parents(v), [&](int p) { stack.emplace_back(p, false); });
                vs_for_each(g.children(v), [&](int c) { stack.emplace_back(c, true); });
            }
        } else {
            // Entered from a parent: continuing downward keeps v a
            // non-collider; turning back up makes v a collider.
            if (!vs_contains(s, v))
                vs_for_each(g.children(v), [&](int c) { stack.emplace_back(c, true); });
            if (vs_contains(opens_collider, v))
                vs_for_each(g.parents(v), [&](int p) { stack.emplace_back(p, false); });
        }
    }
    return true;
}

}  // namespace razors

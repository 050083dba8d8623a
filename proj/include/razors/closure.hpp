// closure.hpp - deductive closure of independence statements under selectable
// axiom systems.
//
// Closure works on set-valued statements <A, B | C> (A, B non-empty, all three
// pairwise disjoint); seed singleton models are lifted, closed, and can be
// projected back to the singleton-pair fragment.  The statement lattice is
// tiny for m <= 5, so a plain fixed-point sweep suffices.
#pragma once

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "core.hpp"
#include "independence.hpp"

namespace razors {

struct SetCi {
    VertexSet a, b, c;

    SetCi(VertexSet a_, VertexSet b_, VertexSet c_) : a(a_), b(b_), c(c_) {
        require(a != 0 && b != 0, "both components of a set statement must be non-empty");
        require((a & b) == 0 && (a & c) == 0 && (b & c) == 0,
                "components of a set statement must be pairwise disjoint");
    }

    bool operator<(const SetCi& o) const {
        if (const int r = vs_compare_canonical(a, o.a)) return r < 0;
        if (const int r = vs_compare_canonical(b, o.b)) return r < 0;
        return vs_compare_canonical(c, o.c) < 0;
    }
    bool operator==(const SetCi& o) const { return a == o.a && b == o.b && c == o.c; }

    std::string to_string() const {
        std::string out = "<" + vs_to_string(a) + "," + vs_to_string(b);
        if (c != 0) out += "|" + vs_to_string(c);
        return out + ">";
    }
};

struct AxiomSet {
    bool symmetry = false;
    bool decomposition = false;
    bool weak_union = false;
    bool contraction = false;
    bool intersection = false;
    bool composition = false;

    static AxiomSet semigraphoid() { return {true, true, true, true, false, false}; }
    static AxiomSet graphoid() { return {true, true, true, true, true, false}; }
    static AxiomSet compositional_graphoid() { return {true, true, true, true, true, true}; }
};

// Fixed-point closure of the seed statements under the enabled axioms.
inline std::set<SetCi> closure_over_sets(int m, const std::vector<SetCi>& seed,
                                         const AxiomSet& ax) {
    require(m >= 1 && m <= 5, "set-statement closure supports m in 1..5, got " + std::to_string(m));
    const VertexSet universe = vs_all(m);
    std::set<SetCi> closed;
    for (const SetCi& s : seed) {
        require(((s.a | s.b | s.c) & ~universe) == 0,
                "statement " + s.to_string() + " exceeds vertex range 1.." + std::to_string(m));
        closed.insert(s);
    }

    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<SetCi> snapshot(closed.begin(), closed.end());
        const auto add = [&](VertexSet a, VertexSet b, VertexSet c) {
            if (a == 0 || b == 0) return;
            if (closed.insert(SetCi(a, b, c)).second) grew = true;
        };

        for (const SetCi& s : snapshot) {
            if (ax.symmetry) add(s.b, s.a, s.c);
            if (ax.decomposition || ax.weak_union) {
                vs_for_each_subset(s.b, [&](VertexSet w) {
                    if (w == 0 || w == s.b) return;
                    if (ax.decomposition) add(s.a, w, s.c);
                    if (ax.weak_union) add(s.a, s.b & ~w, s.c | w);
                });
            }
        }
        for (const SetCi& s : snapshot) {
            for (const SetCi& t : snapshot) {
                if (s.a != t.a) continue;
                // s = <A, B | C>, t = <A, W | C'>
                if (ax.contraction && (t.b & s.b) == 0 && t.c == (s.c | s.b))
                    add(s.a, s.b | t.b, s.c);
                if (ax.intersection && (t.b & s.b) == 0 && (t.b & s.c) == t.b) {
                    const VertexSet z = s.c & ~t.b;
                    if (t.c == (z | s.b)) add(s.a, s.b | t.b, z);
                }
                if (ax.composition && (t.b & s.b) == 0 && t.c == s.c)
                    add(s.a, s.b | t.b, s.c);
            }
        }
    }
    return closed;
}

inline std::vector<SetCi> lift_to_sets(const IndependenceModel& model) {
    std::vector<SetCi> out;
    out.reserve(model.size());
    for (const CiStatement& c : model.statements())
        out.emplace_back(vs_bit(c.i), vs_bit(c.j), c.s);
    return out;
}

// Singleton-pair fragment of a closed statement set (pairs canonicalised).
inline IndependenceModel project_to_singletons(int m, const std::set<SetCi>& statements) {
    IndependenceModel out(m);
    for (const SetCi& s : statements)
        if (vs_size(s.a) == 1 && vs_size(s.b) == 1)
            out.insert(CiStatement(vs_first(s.a), vs_first(s.b), s.c));
    return out;
}

// Closure of a singleton model: lift, close over set-valued statements, and
// project back to singleton pairs.  Use closure_over_sets directly when the
// intermediate set-valued consequences are of interest.
inline IndependenceModel closure(const IndependenceModel& model, const AxiomSet& ax) {
    return project_to_singletons(model.m(), closure_over_sets(model.m(), lift_to_sets(model), ax));
}

}  // namespace razors

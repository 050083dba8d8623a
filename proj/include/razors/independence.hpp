// independence.hpp - conditional-independence statements over singleton pairs
// and the independence models built from them.
//
// A CiStatement <i, j | s> is canonical with i < j and s disjoint from both.
// An IndependenceModel is a symmetric, canonically ordered set of statements
// over vertices 1..m; iteration order (and the serialized order) is by
// (i, j, |s|, s lexicographic).
#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "dag.hpp"
#include "dsep.hpp"

namespace razors {

struct CiStatement {
    int i, j;
    VertexSet s;

    CiStatement(int a, int b, VertexSet cond) : i(std::min(a, b)), j(std::max(a, b)), s(cond) {
        require(a != b, "a statement needs two distinct vertices");
        require(!vs_contains(cond, i) && !vs_contains(cond, j),
                "conditioning set " + vs_to_string(cond) + " must avoid the pair (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
    }

    bool operator==(const CiStatement& o) const { return i == o.i && j == o.j && s == o.s; }
    bool operator!=(const CiStatement& o) const { return !(*this == o); }

    bool operator<(const CiStatement& o) const {
        if (i != o.i) return i < o.i;
        if (j != o.j) return j < o.j;
        return vs_compare_canonical(s, o.s) < 0;
    }

    std::string to_string() const {
        std::string out = "<X" + std::to_string(i) + ",X" + std::to_string(j);
        if (s != 0) out += "|" + vs_to_string(s);
        out += ">";
        return out;
    }
};

class IndependenceModel {
  public:
    explicit IndependenceModel(int m) : m_(m) {
        require(m >= 1 && m <= 31, "vertex count must be in 1..31, got " + std::to_string(m));
    }

    IndependenceModel(int m, std::initializer_list<CiStatement> cis) : IndependenceModel(m) {
        for (const CiStatement& c : cis) insert(c);
    }

    int m() const { return m_; }
    std::size_t size() const { return cis_.size(); }
    bool empty() const { return cis_.empty(); }

    void insert(const CiStatement& c) {
        require(c.j <= m_, "statement " + c.to_string() + " exceeds vertex range 1.." +
                               std::to_string(m_));
        require((c.s & ~vs_all(m_)) == 0, "statement " + c.to_string() +
                                              " conditions outside vertex range 1.." +
                                              std::to_string(m_));
        cis_.insert(c);
    }

    bool contains(const CiStatement& c) const { return cis_.count(c) > 0; }
    bool contains(int i, int j, VertexSet s) const { return contains(CiStatement(i, j, s)); }

    const std::set<CiStatement>& statements() const { return cis_; }

    bool operator==(const IndependenceModel& o) const { return m_ == o.m_ && cis_ == o.cis_; }
    bool operator!=(const IndependenceModel& o) const { return !(*this == o); }

    IndependenceModel united_with(const IndependenceModel& o) const {
        require(m_ == o.m_, "models must share a vertex count");
        IndependenceModel out = *this;
        for (const CiStatement& c : o.cis_) out.insert(c);
        return out;
    }

    // Statements of this model missing from the other.
    std::vector<CiStatement> difference(const IndependenceModel& o) const {
        require(m_ == o.m_, "models must share a vertex count");
        std::vector<CiStatement> out;
        for (const CiStatement& c : cis_)
            if (!o.contains(c)) out.push_back(c);
        return out;
    }

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (const CiStatement& c : cis_) {
            if (!first) out += ", ";
            out += c.to_string();
            first = false;
        }
        return out + "}";
    }

  private:
    int m_;
    std::set<CiStatement> cis_;
};

// True when every statement of sub is a statement of super.
inline bool model_subset(const IndependenceModel& sub, const IndependenceModel& super) {
    require(sub.m() == super.m(), "models must share a vertex count");
    for (const CiStatement& c : sub.statements())
        if (!super.contains(c)) return false;
    return true;
}

// All d-separation statements of g over singleton pairs.
inline IndependenceModel independence_model_of_dag(const Dag& g) {
    IndependenceModel model(g.m());
    for (int i = 1; i <= g.m(); ++i)
        for (int j = i + 1; j <= g.m(); ++j) {
            const VertexSet rest = vs_remove(vs_remove(g.vertex_set(), i), j);
            vs_for_each_subset(rest, [&](VertexSet s) {
                if (d_separated(g, i, j, s)) model.insert(CiStatement(i, j, s));
            });
        }
    return model;
}

// First d-separation statement of g absent from the model, if any: g satisfies
// the model's Markov condition exactly when this returns nothing.
inline std::optional<CiStatement> markov_violation(const Dag& g, const IndependenceModel& model) {
    require(g.m() == model.m(), "graph and model must share a vertex count");
    for (int i = 1; i <= g.m(); ++i)
        for (int j = i + 1; j <= g.m(); ++j) {
            const VertexSet rest = vs_remove(vs_remove(g.vertex_set(), i), j);
            std::optional<CiStatement> hit;
            vs_for_each_subset(rest, [&](VertexSet s) {
                if (hit) return;
                if (d_separated(g, i, j, s) && !model.contains(i, j, s))
                    hit = CiStatement(i, j, s);
            });
            if (hit) return hit;
        }
    return std::nullopt;
}

inline bool is_markovian(const Dag& g, const IndependenceModel& model) {
    return !markov_violation(g, model).has_value();
}

// Statements of the model that g does not entail.  Requires g to satisfy the
// model's Markov condition; the error names the first entailed-but-missing
// statement otherwise.
inline IndependenceModel unfaithful_set(const Dag& g, const IndependenceModel& model) {
    if (const auto bad = markov_violation(g, model))
        throw std::invalid_argument("graph entails " + bad->to_string() +
                                    " which the model lacks; the unfaithful set is defined "
                                    "only for graphs satisfying the Markov condition");
    IndependenceModel out(model.m());
    const IndependenceModel ig = independence_model_of_dag(g);
    for (const CiStatement& c : model.statements())
        if (!ig.contains(c)) out.insert(c);
    return out;
}

inline bool is_faithful(const Dag& g, const IndependenceModel& model) {
    return independence_model_of_dag(g) == model;
}

// Markov equivalence via the skeleton-and-unshielded-collider characterisation.
inline bool markov_equivalent(const Dag& g, const Dag& h) {
    require(g.m() == h.m(), "graphs must share a vertex count");
    if (skeleton_mask(g) != skeleton_mask(h)) return false;
    return unshielded_colliders(g) == unshielded_colliders(h);
}

}  // namespace razors

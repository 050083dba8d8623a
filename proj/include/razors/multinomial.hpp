// multinomial.hpp - exact discrete models: range specs, conditional tables,
// factorised joints, and conditional-independence tests with no rounding.
//
// Conventions used throughout (and by the file formats):
//   - vertex v takes values 0 .. r(v)-1;
//   - a configuration of a vertex set is indexed in mixed radix over the
//     set's vertices in ascending order, smallest vertex most significant;
//   - conditional tables have one row per parent configuration (same mixed
//     radix) and one column per value of the vertex.
#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "core.hpp"
#include "dag.hpp"
#include "independence.hpp"
#include "rational.hpp"

namespace razors {

inline constexpr long long kJointCeiling = 4096;
inline constexpr int kExtractionCeiling = 6;

class RangeSpec {
  public:
    explicit RangeSpec(std::vector<int> ranges) : r_(std::move(ranges)) {
        require(!r_.empty(), "a range spec needs at least one vertex");
        require(r_.size() <= 31, "a range spec supports at most 31 vertices");
        for (std::size_t v = 0; v < r_.size(); ++v)
            require(r_[v] >= 2, "vertex " + std::to_string(v + 1) + " has range " +
                                    std::to_string(r_[v]) + "; every range must be at least 2");
    }

    int m() const { return static_cast<int>(r_.size()); }

    int range(int v) const {
        require(v >= 1 && v <= m(), "vertex " + std::to_string(v) + " out of range");
        return r_[static_cast<std::size_t>(v - 1)];
    }

    const std::vector<int>& ranges() const { return r_; }

    long long num_configs(VertexSet s) const {
        long long n = 1;
        vs_for_each(s, [&](int v) { n *= range(v); });
        return n;
    }

    // Mixed-radix index of a configuration of s; values[k] belongs to the
    // k-th smallest vertex of s.
    long long index_of(VertexSet s, const std::vector<int>& values) const {
        require(static_cast<int>(values.size()) == vs_size(s),
                "configuration size does not match the set");
        long long idx = 0;
        std::size_t k = 0;
        vs_for_each(s, [&](int v) {
            const int val = values[k++];
            require(val >= 0 && val < range(v), "value " + std::to_string(val) +
                                                    " out of range for vertex " + std::to_string(v));
            idx = idx * range(v) + val;
        });
        return idx;
    }

    std::vector<int> decode(VertexSet s, long long idx) const {
        std::vector<int> values(static_cast<std::size_t>(vs_size(s)));
        const std::vector<int> verts = vs_to_vector(s);
        for (std::size_t k = verts.size(); k-- > 0;) {
            const int r = range(verts[k]);
            values[k] = static_cast<int>(idx % r);
            idx /= r;
        }
        return values;
    }

    bool operator==(const RangeSpec& o) const { return r_ == o.r_; }
    bool operator!=(const RangeSpec& o) const { return !(*this == o); }

  private:
    std::vector<int> r_;
};

struct ThetaTable {
    int vertex = 0;
    VertexSet parents = 0;
    std::vector<std::vector<Rational>> rows;  // rows[parent config][vertex value]
};

class MultinomialModel {
  public:
    MultinomialModel(Dag dag, RangeSpec ranges, std::vector<ThetaTable> tables)
        : dag_(std::move(dag)), ranges_(std::move(ranges)), tables_(ranges_.m() + 1) {
        require(ranges_.m() == dag_.m(), "range spec covers " + std::to_string(ranges_.m()) +
                                             " vertices but the graph has " +
                                             std::to_string(dag_.m()));
        std::vector<bool> seen(static_cast<std::size_t>(dag_.m()) + 1, false);
        for (ThetaTable& t : tables) {
            require(t.vertex >= 1 && t.vertex <= dag_.m(),
                    "table vertex " + std::to_string(t.vertex) + " out of range");
            require(!seen[static_cast<std::size_t>(t.vertex)],
                    "vertex " + std::to_string(t.vertex) + " has two tables");
            seen[static_cast<std::size_t>(t.vertex)] = true;
            require(t.parents == dag_.parents(t.vertex),
                    "table for vertex " + std::to_string(t.vertex) + " lists parents " +
                        vs_to_string(t.parents) + " but the graph has " +
                        vs_to_string(dag_.parents(t.vertex)));
            validate_rows(t);
            tables_[static_cast<std::size_t>(t.vertex)] = std::move(t);
        }
        for (int v = 1; v <= dag_.m(); ++v)
            require(seen[static_cast<std::size_t>(v)],
                    "vertex " + std::to_string(v) + " has no table");
    }

    const Dag& dag() const { return dag_; }
    const RangeSpec& ranges() const { return ranges_; }
    const ThetaTable& table(int v) const {
        require(v >= 1 && v <= dag_.m(), "vertex " + std::to_string(v) + " out of range");
        return tables_[static_cast<std::size_t>(v)];
    }

  private:
    void validate_rows(const ThetaTable& t) const {
        const long long want_rows = ranges_.num_configs(t.parents);
        require(static_cast<long long>(t.rows.size()) == want_rows,
                "table for vertex " + std::to_string(t.vertex) + " has " +
                    std::to_string(t.rows.size()) + " rows; its parent set needs " +
                    std::to_string(want_rows));
        const int width = ranges_.range(t.vertex);
        for (std::size_t row = 0; row < t.rows.size(); ++row) {
            require(static_cast<int>(t.rows[row].size()) == width,
                    "row " + std::to_string(row) + " of vertex " + std::to_string(t.vertex) +
                        " has " + std::to_string(t.rows[row].size()) + " entries; expected " +
                        std::to_string(width));
            Rational sum = 0;
            for (const Rational& p : t.rows[row]) {
                require(p >= 0 && p <= 1, "row " + std::to_string(row) + " of vertex " +
                                              std::to_string(t.vertex) +
                                              " has an entry outside [0,1]");
                sum += p;
            }
            require(sum == 1, "row " + std::to_string(row) + " of vertex " +
                                  std::to_string(t.vertex) + " sums to " +
                                  rational_to_string(sum) + ", not 1");
        }
    }

    Dag dag_;
    RangeSpec ranges_;
    std::vector<ThetaTable> tables_;
};

class JointTable {
  public:
    JointTable(RangeSpec ranges, std::vector<Rational> p)
        : ranges_(std::move(ranges)), p_(std::move(p)) {
        require(static_cast<long long>(p_.size()) == ranges_.num_configs(vs_all(ranges_.m())),
                "joint table size does not match the range spec");
        Rational sum = 0;
        for (const Rational& q : p_) {
            require(q >= 0 && q <= 1, "joint table has an entry outside [0,1]");
            sum += q;
        }
        require(sum == 1, "joint table sums to " + rational_to_string(sum) + ", not 1");
    }

    const RangeSpec& ranges() const { return ranges_; }
    int m() const { return ranges_.m(); }

    const Rational& p(long long full_config_index) const {
        return p_.at(static_cast<std::size_t>(full_config_index));
    }

    const std::vector<Rational>& probabilities() const { return p_; }

    // Marginal over s, indexed by s-configurations.
    std::vector<Rational> marginal_table(VertexSet s) const {
        const VertexSet all = vs_all(m());
        require((s & ~all) == 0, "marginal set " + vs_to_string(s) + " out of range");
        std::vector<Rational> out(static_cast<std::size_t>(ranges_.num_configs(s)), Rational(0));
        const long long n = static_cast<long long>(p_.size());
        for (long long idx = 0; idx < n; ++idx) {
            const std::vector<int> full = ranges_.decode(all, idx);
            std::vector<int> restricted;
            restricted.reserve(static_cast<std::size_t>(vs_size(s)));
            std::size_t k = 0;
            vs_for_each(all, [&](int v) {
                if (vs_contains(s, v)) restricted.push_back(full[k]);
                ++k;
            });
            out[static_cast<std::size_t>(ranges_.index_of(s, restricted))] +=
                p_[static_cast<std::size_t>(idx)];
        }
        return out;
    }

  private:
    RangeSpec ranges_;
    std::vector<Rational> p_;
};

// Exact factorised joint of the model.  Guarded by a configuration ceiling so
// a mistyped range spec cannot silently allocate a huge table.
inline JointTable joint_from_model(const MultinomialModel& model) {
    const RangeSpec& ranges = model.ranges();
    const VertexSet all = vs_all(ranges.m());
    const long long n = ranges.num_configs(all);
    require(n <= kJointCeiling, "joint has " + std::to_string(n) +
                                    " configurations, above the ceiling of " +
                                    std::to_string(kJointCeiling));
    std::vector<Rational> p(static_cast<std::size_t>(n));
    for (long long idx = 0; idx < n; ++idx) {
        const std::vector<int> full = ranges.decode(all, idx);
        Rational prob = 1;
        for (int v = 1; v <= ranges.m(); ++v) {
            const ThetaTable& t = model.table(v);
            std::vector<int> parent_values;
            parent_values.reserve(static_cast<std::size_t>(vs_size(t.parents)));
            std::size_t k = 0;
            vs_for_each(all, [&](int u) {
                if (vs_contains(t.parents, u)) parent_values.push_back(full[k]);
                ++k;
            });
            const long long row = ranges.index_of(t.parents, parent_values);
            prob *= t.rows[static_cast<std::size_t>(row)]
                          [static_cast<std::size_t>(full[static_cast<std::size_t>(v - 1)])];
            if (prob == 0) break;
        }
        p[static_cast<std::size_t>(idx)] = prob;
    }
    return JointTable(ranges, std::move(p));
}

// Exact set-valued conditional independence A _||_ B | C in the joint.
// Conditioning on a zero-probability configuration holds vacuously: the test
// is the cross-multiplied identity P(a,b,c) * P(c) == P(a,c) * P(b,c).
inline bool exact_ci_sets(const JointTable& joint, VertexSet a, VertexSet b, VertexSet c) {
    require(a != 0 && b != 0, "both sides of an independence query must be non-empty");
    require((a & b) == 0 && (a & c) == 0 && (b & c) == 0,
            "independence query needs pairwise disjoint sets");
    const RangeSpec& ranges = joint.ranges();
    const VertexSet abc = a | b | c;
    require((abc & ~vs_all(joint.m())) == 0, "independence query out of vertex range");

    const std::vector<Rational> p_abc = joint.marginal_table(abc);
    const std::vector<Rational> p_ac = joint.marginal_table(a | c);
    const std::vector<Rational> p_bc = joint.marginal_table(b | c);
    const std::vector<Rational> p_c = c == 0 ? std::vector<Rational>{Rational(1)}
                                             : joint.marginal_table(c);

    std::array<int, 32> value_of{};  // indexed by vertex
    const auto index_in = [&](VertexSet s) {
        long long idx = 0;
        vs_for_each(s, [&](int v) { idx = idx * ranges.range(v) + value_of[static_cast<std::size_t>(v)]; });
        return static_cast<std::size_t>(idx);
    };

    const long long na = ranges.num_configs(a), nb = ranges.num_configs(b),
                    nc = ranges.num_configs(c);
    for (long long ia = 0; ia < na; ++ia) {
        const std::vector<int> va = ranges.decode(a, ia);
        for (long long ib = 0; ib < nb; ++ib) {
            const std::vector<int> vb = ranges.decode(b, ib);
            for (long long ic = 0; ic < nc; ++ic) {
                const std::vector<int> vc = ranges.decode(c, ic);
                std::size_t k = 0;
                vs_for_each(a, [&](int v) { value_of[static_cast<std::size_t>(v)] = va[k++]; });
                k = 0;
                vs_for_each(b, [&](int v) { value_of[static_cast<std::size_t>(v)] = vb[k++]; });
                k = 0;
                vs_for_each(c, [&](int v) { value_of[static_cast<std::size_t>(v)] = vc[k++]; });
                const Rational lhs = p_abc[index_in(abc)] * p_c[index_in(c)];
                const Rational rhs = p_ac[index_in(a | c)] * p_bc[index_in(b | c)];
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

inline bool exact_ci(const JointTable& joint, const CiStatement& stmt) {
    return exact_ci_sets(joint, vs_bit(stmt.i), vs_bit(stmt.j), stmt.s);
}

// Every singleton-pair independence that holds exactly in the joint.
inline IndependenceModel extract_independence_model(const JointTable& joint) {
    require(joint.m() <= kExtractionCeiling,
            "model extraction supports m up to " + std::to_string(kExtractionCeiling) + ", got " +
                std::to_string(joint.m()));
    IndependenceModel model(joint.m());
    const VertexSet all = vs_all(joint.m());
    for (int i = 1; i <= joint.m(); ++i)
        for (int j = i + 1; j <= joint.m(); ++j) {
            const VertexSet rest = vs_remove(vs_remove(all, i), j);
            vs_for_each_subset(rest, [&](VertexSet s) {
                if (exact_ci_sets(joint, vs_bit(i), vs_bit(j), s))
                    model.insert(CiStatement(i, j, s));
            });
        }
    return model;
}

inline IndependenceModel extract_independence_model(const MultinomialModel& model) {
    return extract_independence_model(joint_from_model(model));
}

// First vertex whose local condition fails: v must be independent of its
// non-descendants given its parents.  Factorised joints always pass.
inline std::optional<int> local_markov_violation(const Dag& g, const JointTable& joint) {
    require(g.m() == joint.m(), "graph and joint must share a vertex count");
    for (int v = 1; v <= g.m(); ++v) {
        const VertexSet pa = g.parents(v);
        const VertexSet nd =
            vs_remove(g.vertex_set() & ~g.descendants(v), v) & ~pa;
        if (nd == 0) continue;
        if (!exact_ci_sets(joint, vs_bit(v), nd, pa)) return v;
    }
    return std::nullopt;
}

// Free-parameter count of the family: each vertex contributes (r(v) - 1)
// entries per parent configuration.
inline long long param_count(const Dag& g, const RangeSpec& ranges) {
    require(g.m() == ranges.m(), "graph and range spec must share a vertex count");
    long long total = 0;
    for (int v = 1; v <= g.m(); ++v)
        total += static_cast<long long>(ranges.range(v) - 1) * ranges.num_configs(g.parents(v));
    return total;
}

}  // namespace razors

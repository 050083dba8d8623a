// dag.hpp - directed acyclic graphs over vertices 1..m.
//
// A Dag is an immutable value: construct it from an edge list (validated for
// range, simplicity and acyclicity) and derive modified copies via
// with_edge / without_edge / with_reversed_edge.  The text format is
//   m=<int>
//   <j> -> <k>
// one line per edge, edges sorted by (j, k); parse/serialize round-trips
// byte-identically on canonical text.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "core.hpp"

namespace razors {

using Edge = std::pair<int, int>;  // (j, k) means j -> k

class Dag {
  public:
    explicit Dag(int m) : m_(m), pa_(static_cast<std::size_t>(m) + 1, 0) {
        require(m >= 1 && m <= 31, "vertex count must be in 1..31, got " + std::to_string(m));
    }

    Dag(int m, const std::vector<Edge>& edges) : Dag(m) {
        for (const auto& [j, k] : edges) add_edge_checked(j, k);
        require_acyclic();
    }

    Dag(int m, std::initializer_list<Edge> edges)
        : Dag(m, std::vector<Edge>(edges)) {}

    int m() const { return m_; }

    VertexSet vertex_set() const { return vs_all(m_); }

    VertexSet parents(int v) const {
        check_vertex(v);
        return pa_[static_cast<std::size_t>(v)];
    }

    VertexSet children(int v) const {
        check_vertex(v);
        VertexSet ch = 0;
        for (int k = 1; k <= m_; ++k)
            if (vs_contains(pa_[static_cast<std::size_t>(k)], v)) ch = vs_add(ch, k);
        return ch;
    }

    bool has_edge(int j, int k) const {
        check_vertex(j);
        check_vertex(k);
        return vs_contains(pa_[static_cast<std::size_t>(k)], j);
    }

    bool adjacent(int u, int v) const { return has_edge(u, v) || has_edge(v, u); }

    // Neighbours in the skeleton (parents and children).
    VertexSet neighbors(int v) const { return parents(v) | children(v); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int j = 1; j <= m_; ++j)
            for (int k = 1; k <= m_; ++k)
                if (has_edge(j, k)) out.emplace_back(j, k);
        return out;  // already sorted by (j, k)
    }

    int edge_count() const {
        int n = 0;
        for (int v = 1; v <= m_; ++v) n += vs_size(pa_[static_cast<std::size_t>(v)]);
        return n;
    }

    // Strict ancestors of v (v itself excluded).
    VertexSet ancestors(int v) const {
        VertexSet an = parents(v);
        bool grew = true;
        while (grew) {
            grew = false;
            VertexSet next = an;
            vs_for_each(an, [&](int u) { next |= parents(u); });
            if (next != an) { an = next; grew = true; }
        }
        return vs_remove(an, v);  // defensive: acyclic, so v never appears
    }

    // Strict descendants of v (v itself excluded).
    VertexSet descendants(int v) const {
        VertexSet de = children(v);
        bool grew = true;
        while (grew) {
            grew = false;
            VertexSet next = de;
            vs_for_each(de, [&](int u) { next |= children(u); });
            if (next != de) { de = next; grew = true; }
        }
        return vs_remove(de, v);
    }

    // s together with every ancestor of a member of s.
    VertexSet ancestral_closure(VertexSet s) const {
        VertexSet out = s;
        vs_for_each(s, [&](int v) { out |= ancestors(v); });
        return out;
    }

    // Vertices in topological order (parents before children); deterministic:
    // among ready vertices the smallest label is emitted first.
    std::vector<int> topological_order() const {
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(m_));
        VertexSet placed = 0;
        while (static_cast<int>(order.size()) < m_) {
            bool emitted = false;
            for (int v = 1; v <= m_; ++v) {
                if (vs_contains(placed, v)) continue;
                if ((parents(v) & ~placed) == 0) {
                    order.push_back(v);
                    placed = vs_add(placed, v);
                    emitted = true;
                    break;
                }
            }
            if (!emitted) throw std::logic_error("cycle encountered in topological sort");
        }
        return order;
    }

    Dag with_edge(int j, int k) const {
        Dag d = *this;
        d.add_edge_checked(j, k);
        d.require_acyclic();
        return d;
    }

    Dag without_edge(int j, int k) const {
        require(has_edge(j, k), "no edge " + edge_name(j, k) + " to remove");
        Dag d = *this;
        d.pa_[static_cast<std::size_t>(k)] = vs_remove(d.pa_[static_cast<std::size_t>(k)], j);
        return d;
    }

    Dag with_reversed_edge(int j, int k) const {
        require(has_edge(j, k), "no edge " + edge_name(j, k) + " to reverse");
        Dag d = *this;
        d.pa_[static_cast<std::size_t>(k)] = vs_remove(d.pa_[static_cast<std::size_t>(k)], j);
        d.pa_[static_cast<std::size_t>(j)] = vs_add(d.pa_[static_cast<std::size_t>(j)], k);
        d.require_acyclic();
        return d;
    }

    // Compact canonical encoding: bit (j-1)*m + (k-1) set iff edge j -> k.
    // Requires m <= 8; every graph of equal m has a distinct mask.
    std::uint64_t arc_mask() const {
        require(m_ <= 8, "arc_mask supports m <= 8");
        std::uint64_t mask = 0;
        for (int k = 1; k <= m_; ++k)
            vs_for_each(pa_[static_cast<std::size_t>(k)], [&](int j) {
                mask |= std::uint64_t{1} << ((j - 1) * m_ + (k - 1));
            });
        return mask;
    }

    static Dag from_arc_mask(int m, std::uint64_t mask) {
        Dag d(m);
        for (int j = 1; j <= m; ++j)
            for (int k = 1; k <= m; ++k)
                if ((mask >> ((j - 1) * m + (k - 1))) & 1u) d.add_edge_checked(j, k);
        d.require_acyclic();
        return d;
    }

    std::string to_text() const {
        std::ostringstream out;
        out << "m=" << m_ << "\n";
        for (const auto& [j, k] : edges()) out << j << " -> " << k << "\n";
        return out.str();
    }

    static Dag parse_text(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        int m = -1;
        std::vector<Edge> edges;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const std::string trimmed = trim(line);
            if (trimmed.empty() || trimmed[0] == '#') continue;
            if (m < 0) {
                if (trimmed.rfind("m=", 0) != 0)
                    throw std::invalid_argument("line " + std::to_string(lineno) +
                                                ": expected 'm=<int>' header, got '" + trimmed + "'");
                m = parse_int(trimmed.substr(2), lineno);
                continue;
            }
            const auto arrow = trimmed.find("->");
            if (arrow == std::string::npos)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": expected '<j> -> <k>', got '" + trimmed + "'");
            const int j = parse_int(trim(trimmed.substr(0, arrow)), lineno);
            const int k = parse_int(trim(trimmed.substr(arrow + 2)), lineno);
            edges.emplace_back(j, k);
        }
        if (m < 0) throw std::invalid_argument("missing 'm=<int>' header");
        return Dag(m, edges);
    }

    bool operator==(const Dag& other) const { return m_ == other.m_ && pa_ == other.pa_; }
    bool operator!=(const Dag& other) const { return !(*this == other); }

    static std::string edge_name(int j, int k) {
        return std::to_string(j) + " -> " + std::to_string(k);
    }

  private:
    void check_vertex(int v) const {
        require(v >= 1 && v <= m_,
                "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(m_));
    }

    void add_edge_checked(int j, int k) {
        check_vertex(j);
        check_vertex(k);
        require(j != k, "self-loop " + edge_name(j, k) + " is not allowed");
        require(!has_edge(j, k), "duplicate edge " + edge_name(j, k));
        require(!has_edge(k, j),
                "edges " + edge_name(k, j) + " and " + edge_name(j, k) + " cannot coexist");
        pa_[static_cast<std::size_t>(k)] = vs_add(pa_[static_cast<std::size_t>(k)], j);
    }

    void require_acyclic() const {
        VertexSet placed = 0;
        for (int placed_count = 0; placed_count < m_; ++placed_count) {
            bool emitted = false;
            for (int v = 1; v <= m_ && !emitted; ++v) {
                if (!vs_contains(placed, v) && (parents(v) & ~placed) == 0) {
                    placed = vs_add(placed, v);
                    emitted = true;
                }
            }
            if (!emitted) throw std::invalid_argument("edge set contains a directed cycle");
        }
    }

    static std::string trim(const std::string& s) {
        std::size_t b = s.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) return "";
        std::size_t e = s.find_last_not_of(" \t\r\n");
        return s.substr(b, e - b + 1);
    }

    static int parse_int(const std::string& s, int lineno) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument("trailing characters");
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected integer, got '" + s + "'");
        }
    }

    int m_;
    std::vector<VertexSet> pa_;  // pa_[v] = parents of v; index 0 unused
};

// An ordered triple (i, j, k) of distinct vertices with i and j, and j and k,
// adjacent.  Shielded means i and k are also adjacent (a triangle); a collider
// has both arrows pointing at j.  Triples are canonicalised with i < k.
struct Triple {
    int i, j, k;
    bool shielded;
    bool collider_at_j;

    bool operator<(const Triple& o) const {
        return std::tie(i, j, k) < std::tie(o.i, o.j, o.k);
    }
    bool operator==(const Triple& o) const {
        return i == o.i && j == o.j && k == o.k && shielded == o.shielded &&
               collider_at_j == o.collider_at_j;
    }
};

inline std::vector<Triple> collect_triples(const Dag& g, bool shielded) {
    std::vector<Triple> out;
    for (int j = 1; j <= g.m(); ++j) {
        const VertexSet nb = g.neighbors(j);
        vs_for_each(nb, [&](int i) {
            vs_for_each(nb, [&](int k) {
                if (i >= k) return;
                if (g.adjacent(i, k) != shielded) return;
                const bool collider = g.has_edge(i, j) && g.has_edge(k, j);
                out.push_back(Triple{i, j, k, shielded, collider});
            });
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Triples i - j - k with i, k non-adjacent.
inline std::vector<Triple> unshielded_triples(const Dag& g) { return collect_triples(g, false); }

// Triples i - j - k inside a triangle (all three pairs adjacent).
inline std::vector<Triple> shielded_triples(const Dag& g) { return collect_triples(g, true); }

// Unshielded triples whose middle vertex is a collider, as (i, j, k), i < k.
inline std::vector<Triple> unshielded_colliders(const Dag& g) {
    std::vector<Triple> out;
    for (const Triple& t : unshielded_triples(g))
        if (t.collider_at_j) out.push_back(t);
    return out;
}

// Skeleton as a set of bits: unordered pair {u, v}, u < v, occupies bit
// index (u-1)*m + (v-1).
inline std::uint64_t skeleton_mask(const Dag& g) {
    std::uint64_t mask = 0;
    for (const auto& [j, k] : g.edges()) {
        const int u = std::min(j, k), v = std::max(j, k);
        mask |= std::uint64_t{1} << ((u - 1) * g.m() + (v - 1));
    }
    return mask;
}

}  // namespace razors

template <>
struct std::hash<razors::Dag> {
    std::size_t operator()(const razors::Dag& g) const {
        return std::hash<std::uint64_t>{}(g.arc_mask() * 1315423911u + static_cast<std::uint64_t>(g.m()));
    }
};

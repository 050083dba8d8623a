// core.hpp - small vertex-set utilities shared by the whole library.
//
// Vertices are 1-based (1..m); a VertexSet packs vertex v into bit (v-1).
// All helpers are branch-light and safe for m <= 31.
#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace razors {

using VertexSet = std::uint32_t;

constexpr VertexSet vs_empty = 0;

constexpr VertexSet vs_bit(int v) { return VertexSet{1} << (v - 1); }

constexpr bool vs_contains(VertexSet s, int v) { return (s >> (v - 1)) & 1u; }

constexpr VertexSet vs_add(VertexSet s, int v) { return s | vs_bit(v); }

constexpr VertexSet vs_remove(VertexSet s, int v) { return s & ~vs_bit(v); }

constexpr int vs_size(VertexSet s) { return std::popcount(s); }

// Full set {1..m}.
constexpr VertexSet vs_all(int m) { return (VertexSet{1} << m) - 1; }

// Smallest vertex in a non-empty set.
inline int vs_first(VertexSet s) { return std::countr_zero(s) + 1; }

inline VertexSet vs_of(std::initializer_list<int> vs) {
    VertexSet s = 0;
    for (int v : vs) s = vs_add(s, v);
    return s;
}

inline VertexSet vs_of(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) s = vs_add(s, v);
    return s;
}

inline std::vector<int> vs_to_vector(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(vs_size(s)));
    while (s) {
        int v = vs_first(s);
        out.push_back(v);
        s = vs_remove(s, v);
    }
    return out;
}

// Apply fn(v) to each vertex in ascending order.
template <typename Fn>
void vs_for_each(VertexSet s, Fn&& fn) {
    while (s) {
        int v = vs_first(s);
        fn(v);
        s = vs_remove(s, v);
    }
}

// Apply fn(subset) to every subset of mask (incl. empty and mask itself),
// in ascending numeric order of the packed bits.
template <typename Fn>
void vs_for_each_subset(VertexSet mask, Fn&& fn) {
    VertexSet sub = 0;
    while (true) {
        fn(sub);
        if (sub == mask) break;
        sub = (sub - mask) & mask;  // next submask in ascending order
    }
}

// Canonical ordering of vertex sets: by size, then lexicographically as
// ascending vertex lists ({1,4} before {2,3}).  Returns <0, 0, >0.
inline int vs_compare_canonical(VertexSet a, VertexSet b) {
    const int sa = vs_size(a), sb = vs_size(b);
    if (sa != sb) return sa < sb ? -1 : 1;
    while (a && b) {
        const int va = vs_first(a), vb = vs_first(b);
        if (va != vb) return va < vb ? -1 : 1;
        a = vs_remove(a, va);
        b = vs_remove(b, vb);
    }
    return 0;
}

inline std::string vs_to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    vs_for_each(s, [&](int v) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    });
    out += "}";
    return out;
}

inline void require(bool cond, const std::string& message) {
    if (!cond) throw std::invalid_argument(message);
}

}  // namespace razors

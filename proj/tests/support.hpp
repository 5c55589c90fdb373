#pragma once

// Fixtures and brute-force oracles shared by the test suites. The oracles
// deliberately avoid the library's shadow/matching machinery.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "bc4/bc4.hpp"

namespace bc4::testing {

inline Hypergraph single_edge() { return Hypergraph(3, {{0, 1, 2}}); }
inline Hypergraph k4() { return Hypergraph(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }
inline Hypergraph k4_minus() { return Hypergraph(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}); }
inline Hypergraph sunflower() { return Hypergraph(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}); }
// Three edges pairwise meeting in one vertex; shadow cycle 1-2-3-4 is rare.
inline Hypergraph loose_triangle() { return Hypergraph(7, {{1, 2, 3}, {1, 4, 5}, {3, 4, 6}}); }

/// Uniformly chosen m-subset of the triples on n vertices.
inline Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::uint64_t seed) {
    std::vector<Triple> all;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) all.push_back({a, b, c});
    std::mt19937_64 rng(seed);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(m, all.size()));
    return Hypergraph(n, std::move(all));
}

/// Visits every sequence of `len` distinct vertices from [0, n).
inline void for_each_arrangement(std::size_t n, std::size_t len,
                                 const std::function<bool(const std::vector<Vertex>&)>& visit) {
    std::vector<Vertex> seq;
    std::vector<bool> used(n, false);
    std::function<bool()> rec = [&]() -> bool {
        if (seq.size() == len) return visit(seq);
        for (Vertex v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            seq.push_back(v);
            bool stop = rec();
            seq.pop_back();
            used[v] = false;
            if (stop) return true;
        }
        return false;
    };
    rec();
}

/// Naive Berge cycle test: every ordered l-tuple of distinct vertices against
/// every injective assignment of l distinct edges (positions filled in order).
inline bool naive_has_berge_cycle(const Hypergraph& h, std::size_t l) {
    const auto edges = h.edges();
    bool found = false;
    for_each_arrangement(h.vertex_count(), l, [&](const std::vector<Vertex>& vs) {
        std::vector<std::size_t> chosen;
        std::function<bool(std::size_t)> assign = [&](std::size_t pos) -> bool {
            if (pos == l) return true;
            for (std::size_t e = 0; e < edges.size(); ++e) {
                if (std::find(chosen.begin(), chosen.end(), e) != chosen.end()) continue;
                const Triple& t = edges[e];
                auto has = [&](Vertex v) { return t[0] == v || t[1] == v || t[2] == v; };
                if (!has(vs[pos]) || !has(vs[(pos + 1) % l])) continue;
                chosen.push_back(e);
                bool ok = assign(pos + 1);
                chosen.pop_back();
                if (ok) return true;
            }
            return false;
        };
        found = assign(0);
        return found;
    });
    return found;
}

inline bool naive_has_bc4(const Hypergraph& h) { return naive_has_berge_cycle(h, 4); }

/// Unordered 3-paths (x, u, y), x < y, counted from adjacency alone.
inline std::uint64_t naive_count_3paths(std::size_t n, const std::function<bool(Vertex, Vertex)>& adj) {
    std::uint64_t count = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = x + 1; y < n; ++y)
                if (x != u && y != u && adj(x, u) && adj(u, y)) ++count;
    return count;
}

/// Rare 4-cycles counted by brute force over vertex 4-sequences, each cycle
/// found 8 times (4 rotations x 2 directions).
inline std::uint64_t naive_count_rare(const Hypergraph& h) {
    auto edge_with = [&](std::vector<Vertex> vs) {
        for (const auto& t : h.edges()) {
            bool all = true;
            for (Vertex v : vs) all = all && (t[0] == v || t[1] == v || t[2] == v);
            if (all) return true;
        }
        return false;
    };
    auto is_edge = [&](Vertex a, Vertex b, Vertex c) {
        Triple t{a, b, c};
        std::sort(t.begin(), t.end());
        return std::find(h.edges().begin(), h.edges().end(), t) != h.edges().end();
    };
    std::uint64_t hits = 0;
    for_each_arrangement(h.vertex_count(), 4, [&](const std::vector<Vertex>& c) {
        for (int i = 0; i < 4; ++i)
            if (!edge_with({c[i], c[(i + 1) % 4]})) return false;
        bool rare = true;
        for (int i = 0; i < 2; ++i)
            if (is_edge(c[i], c[i + 2], c[i + 1]) && is_edge(c[i], c[i + 2], c[(i + 3) % 4])) rare = false;
        if (rare) ++hits;
        return false;
    });
    return hits / 8;
}

} // namespace bc4::testing

#pragma once

// Shadow 3-paths, 4-cycles, representative edges, rare 4-cycles and good
// 3-paths, with the counting claims checked on concrete instances.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "bc4/blocks.hpp"
#include "bc4/errors.hpp"
#include "bc4/hypergraph.hpp"

namespace bc4 {

/// Which hyperedges may witness a shared diagonal when deciding rarity.
///   Induced:  only hyperedges lying inside the cycle's four vertices.
///   AnyEdges: any two hyperedges of H containing the diagonal pair.
enum class DiagonalRule { Induced, AnyEdges };

constexpr std::string_view to_string(DiagonalRule r) noexcept {
    return r == DiagonalRule::Induced ? "induced" : "any-edges";
}

/// Vertices in cyclic order.
using FourCycle = std::array<Vertex, 4>;

struct FourCycleRecord {
    FourCycle vertices;  // canonical: least vertex first, then its smaller neighbour
    std::vector<EdgeIndex> representative_edges;
    bool rare = false;
};

struct ClaimCheck {
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool pass = true;

    friend bool operator==(const ClaimCheck&, const ClaimCheck&) = default;
};

struct CensusReport {
    DiagonalRule rule = DiagonalRule::Induced;
    std::uint64_t total_3paths = 0;
    std::uint64_t good_3paths = 0;
    std::uint64_t nongood_3paths = 0;
    std::uint64_t four_cycles = 0;
    std::uint64_t rare_4cycles = 0;
    std::uint64_t cycles_without_representative = 0;
    std::uint64_t cycles_with_four_representatives = 0;
    std::map<VertexPair, std::uint64_t> per_pair_good_counts;  // nonzero entries only

    ClaimCheck claim1;   // max good 3-paths between one pair <= 2
    ClaimCheck claim2;   // rare 4-cycles <= 6|E|
    ClaimCheck claim3;   // good 3-paths <= 2 C(n,2) - 4 sum C(d_b,2)
    ClaimCheck nongood;  // non-good 3-paths <= 21|E|

    bool all_claims_pass() const { return claim1.pass && claim2.pass && claim3.pass && nongood.pass; }
};

namespace detail {

inline void require_4cycle(const ShadowGraph& g, const FourCycle& c) {
    for (Vertex v : c)
        if (v >= g.vertex_count()) throw ArgumentError("4-cycle vertex out of range");
    std::array<Vertex, 4> s = c;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ArgumentError("4-cycle vertices must be distinct");
    for (std::size_t i = 0; i < 4; ++i)
        if (!g.adjacent(c[i], c[(i + 1) % 4])) throw ArgumentError("not a 4-cycle of the shadow");
}

inline std::vector<EdgeIndex> inside_edges(const Hypergraph& h, const FourCycle& c) {
    std::vector<EdgeIndex> out;
    for (std::size_t skip = 0; skip < 4; ++skip) {
        Triple t{};
        std::size_t k = 0;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != skip) t[k++] = c[i];
        if (auto idx = h.find_edge(t)) out.push_back(*idx);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool rare_unchecked(const Hypergraph& h, const FourCycle& c, DiagonalRule rule) {
    for (std::size_t i = 0; i < 2; ++i) {
        const Vertex p = c[i], q = c[i + 2];
        if (rule == DiagonalRule::AnyEdges) {
            if (h.edges_containing(p, q).size() >= 2) return false;
        } else {
            // The only triples inside the cycle containing the diagonal add one of the other two vertices.
            const bool first = h.find_edge({p, q, c[(i + 1) % 4]}).has_value();
            const bool second = h.find_edge({p, q, c[(i + 3) % 4]}).has_value();
            if (first && second) return false;
        }
    }
    return true;
}

} // namespace detail

/// All 4-cycles of g, each once, in lexicographic order of their canonical form.
template <class Visit>
void for_each_4cycle(const ShadowGraph& g, Visit&& visit) {
    for (Vertex a = 0; a < g.vertex_count(); ++a)
        for (Vertex b : g.neighbors(a)) {
            if (b <= a) continue;
            for (Vertex c : g.neighbors(b)) {
                if (c <= a) continue;
                for (Vertex d : g.neighbors(c)) {
                    if (d <= b || !g.adjacent(d, a)) continue;
                    visit(FourCycle{a, b, c, d});
                }
            }
        }
}

inline std::vector<EdgeIndex> representative_edges(const Hypergraph& h, const ShadowGraph& g, const FourCycle& c) {
    detail::require_4cycle(g, c);
    return detail::inside_edges(h, c);
}

/// Hyperedges whose three vertices all lie on the shadow 4-cycle c.
inline std::vector<EdgeIndex> representative_edges(const Hypergraph& h, const FourCycle& c) {
    return representative_edges(h, shadow(h), c);
}

inline bool is_rare(const Hypergraph& h, const ShadowGraph& g, const FourCycle& c,
                    DiagonalRule rule = DiagonalRule::Induced) {
    detail::require_4cycle(g, c);
    return detail::rare_unchecked(h, c, rule);
}

/// A shadow 4-cycle (a, b, x, y) is rare when no two hyperedges share one of its
/// diagonals {a, x} or {b, y}.
inline bool is_rare(const Hypergraph& h, const FourCycle& c, DiagonalRule rule = DiagonalRule::Induced) {
    return is_rare(h, shadow(h), c, rule);
}

inline bool is_good_3path(const Hypergraph& h, const ShadowGraph& g, Vertex x1, Vertex x2, Vertex x3,
                          DiagonalRule rule = DiagonalRule::Induced) {
    if (x1 == x3 || x1 == x2 || x2 == x3 || !g.adjacent(x1, x2) || !g.adjacent(x2, x3))
        throw ArgumentError("not a 3-path of the shadow");
    if (h.find_edge({x1, x2, x3})) return false;
    for (Vertex x : g.neighbors(x1)) {
        if (x == x2 || !g.adjacent(x, x3)) continue;
        if (detail::rare_unchecked(h, FourCycle{x, x1, x2, x3}, rule)) return false;
    }
    return true;
}

/// x1 x2 x3 is good when {x1,x2,x3} is not a hyperedge and no vertex x closes
/// x, x1, x2, x3 into a rare 4-cycle.
inline bool is_good_3path(const Hypergraph& h, Vertex x1, Vertex x2, Vertex x3,
                          DiagonalRule rule = DiagonalRule::Induced) {
    return is_good_3path(h, shadow(h), x1, x2, x3, rule);
}

inline std::vector<FourCycleRecord> four_cycles(const Hypergraph& h, DiagonalRule rule = DiagonalRule::Induced) {
    const ShadowGraph g = shadow(h);
    std::vector<FourCycleRecord> out;
    for_each_4cycle(g, [&](const FourCycle& c) {
        out.push_back({c, detail::inside_edges(h, c), detail::rare_unchecked(h, c, rule)});
    });
    return out;
}

inline CensusReport census(const Hypergraph& h, DiagonalRule rule = DiagonalRule::Induced) {
    const ShadowGraph g = shadow(h);
    const std::uint64_t n = h.vertex_count();
    CensusReport r;
    r.rule = rule;

    // 3-paths lying on some rare 4-cycle, keyed by (middle, low end, high end).
    std::vector<std::uint64_t> on_rare;
    auto key = [n](Vertex mid, Vertex x, Vertex y) {
        if (x > y) std::swap(x, y);
        return (static_cast<std::uint64_t>(mid) * n + x) * n + y;
    };
    for_each_4cycle(g, [&](const FourCycle& c) {
        ++r.four_cycles;
        const auto reps = detail::inside_edges(h, c);
        if (reps.empty()) ++r.cycles_without_representative;
        if (reps.size() == 4) ++r.cycles_with_four_representatives;
        if (!detail::rare_unchecked(h, c, rule)) return;
        ++r.rare_4cycles;
        for (std::size_t i = 0; i < 4; ++i) on_rare.push_back(key(c[(i + 1) % 4], c[i], c[(i + 2) % 4]));
    });
    std::sort(on_rare.begin(), on_rare.end());
    on_rare.erase(std::unique(on_rare.begin(), on_rare.end()), on_rare.end());

    for (Vertex u = 0; u < n; ++u) {
        auto nb = g.neighbors(u);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                ++r.total_3paths;
                const Vertex x = nb[i], y = nb[j];
                const bool good = !h.find_edge({x, u, y}) &&
                                  !std::binary_search(on_rare.begin(), on_rare.end(), key(u, x, y));
                if (good) {
                    ++r.good_3paths;
                    ++r.per_pair_good_counts[VertexPair{x, y}];
                } else {
                    ++r.nongood_3paths;
                }
            }
    }
    if (r.total_3paths != count_3paths(g)) throw std::logic_error("3-path enumeration disagrees with degree count");

    const auto m = static_cast<std::int64_t>(h.edge_count());
    std::uint64_t max_pair = 0;
    for (auto& [pair, count] : r.per_pair_good_counts) max_pair = std::max(max_pair, count);
    r.claim1 = {static_cast<std::int64_t>(max_pair), 2, max_pair <= 2};
    r.claim2 = {static_cast<std::int64_t>(r.rare_4cycles), 6 * m, static_cast<std::int64_t>(r.rare_4cycles) <= 6 * m};

    const auto db = block_degrees(h, decompose(h));
    std::int64_t correction = 0;
    for (auto d : db) correction += static_cast<std::int64_t>(choose2(d));
    const std::int64_t claim3_rhs = 2 * static_cast<std::int64_t>(choose2(n)) - 4 * correction;
    r.claim3 = {static_cast<std::int64_t>(r.good_3paths), claim3_rhs,
                static_cast<std::int64_t>(r.good_3paths) <= claim3_rhs};
    r.nongood = {static_cast<std::int64_t>(r.nongood_3paths), 21 * m,
                 static_cast<std::int64_t>(r.nongood_3paths) <= 21 * m};
    return r;
}

inline ClaimCheck check_claim1(const Hypergraph& h) { return census(h).claim1; }
inline ClaimCheck check_claim2(const Hypergraph& h) { return census(h).claim2; }
inline ClaimCheck check_claim3(const Hypergraph& h) { return census(h).claim3; }
inline ClaimCheck check_nongood(const Hypergraph& h) { return census(h).nongood; }

} // namespace bc4

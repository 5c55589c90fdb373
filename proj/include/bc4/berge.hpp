#pragma once

// Berge paths and cycles: witness verification and detection.
//
// A candidate cycle (or path) in the shadow is a Berge cycle iff its consecutive
// vertex pairs admit a system of distinct representative hyperedges. That is a
// bipartite matching problem between positions and hyperedges, solved here with
// augmenting paths.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bc4/errors.hpp"
#include "bc4/hypergraph.hpp"

namespace bc4 {

struct BergeCycleWitness {
    std::vector<Vertex> vertices;       // cyclic order v_1 .. v_l
    std::vector<EdgeIndex> hyperedges;  // e_i contains {v_i, v_{i+1}}

    friend bool operator==(const BergeCycleWitness&, const BergeCycleWitness&) = default;
};

struct BergePathWitness {
    std::vector<Vertex> vertices;       // v_1 .. v_{l+1}
    std::vector<EdgeIndex> hyperedges;  // e_i contains {v_i, v_{i+1}}

    friend bool operator==(const BergePathWitness&, const BergePathWitness&) = default;
};

namespace detail {

inline void check_in_range(const Hypergraph& h, std::span<const Vertex> vs, std::span<const EdgeIndex> es) {
    for (Vertex v : vs)
        if (v >= h.vertex_count()) throw InvalidWitness("witness vertex " + std::to_string(v) + " out of range");
    for (EdgeIndex e : es)
        if (e >= h.edge_count()) throw InvalidWitness("witness edge index " + std::to_string(e) + " out of range");
}

template <class T>
bool all_distinct(std::span<const T> xs) {
    std::vector<T> s(xs.begin(), xs.end());
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

/// Distinct representatives for `slots`: assignment[i] is taken from slots[i].
/// Kuhn's augmenting paths; candidates are tried in the order given, so the
/// result is deterministic.
class RepresentativeMatcher {
public:
    std::optional<std::vector<EdgeIndex>> solve(std::span<const std::span<const EdgeIndex>> slots) {
        const std::size_t k = slots.size();
        slots_ = slots;
        owner_.clear();
        assign_.assign(k, npos);
        for (std::size_t i = 0; i < k; ++i) {
            if (slots[i].empty()) return std::nullopt;
            visited_.clear();
            if (!augment(i)) return std::nullopt;
        }
        return assign_;
    }

private:
    static constexpr EdgeIndex npos = static_cast<EdgeIndex>(-1);

    std::size_t owner_of(EdgeIndex e) const {
        for (auto& [edge, slot] : owner_)
            if (edge == e) return slot;
        return npos;
    }

    void set_owner(EdgeIndex e, std::size_t slot) {
        for (auto& [edge, s] : owner_)
            if (edge == e) {
                s = slot;
                return;
            }
        owner_.emplace_back(e, slot);
    }

    bool augment(std::size_t slot) {
        for (EdgeIndex e : slots_[slot]) {
            if (std::find(visited_.begin(), visited_.end(), e) != visited_.end()) continue;
            visited_.push_back(e);
            std::size_t holder = owner_of(e);
            if (holder == npos || augment(holder)) {
                set_owner(e, slot);
                assign_[slot] = e;
                return true;
            }
        }
        return false;
    }

    std::span<const std::span<const EdgeIndex>> slots_;
    std::vector<std::pair<EdgeIndex, std::size_t>> owner_;
    std::vector<EdgeIndex> visited_;
    std::vector<EdgeIndex> assign_;
};

} // namespace detail

/// True iff `w` is a Berge cycle of H. Throws InvalidWitness if `w` names
/// vertices or edge indices that do not exist.
inline bool verify_cycle_witness(const Hypergraph& h, const BergeCycleWitness& w) {
    detail::check_in_range(h, w.vertices, w.hyperedges);
    const std::size_t l = w.vertices.size();
    if (l < 2 || w.hyperedges.size() != l) return false;
    if (!detail::all_distinct<Vertex>(w.vertices) || !detail::all_distinct<EdgeIndex>(w.hyperedges)) return false;
    for (std::size_t i = 0; i < l; ++i)
        if (!contains(h.edge(w.hyperedges[i]), w.vertices[i], w.vertices[(i + 1) % l])) return false;
    return true;
}

inline bool verify_path_witness(const Hypergraph& h, const BergePathWitness& w) {
    detail::check_in_range(h, w.vertices, w.hyperedges);
    const std::size_t l = w.hyperedges.size();
    if (l < 1 || w.vertices.size() != l + 1) return false;
    if (!detail::all_distinct<Vertex>(w.vertices) || !detail::all_distinct<EdgeIndex>(w.hyperedges)) return false;
    for (std::size_t i = 0; i < l; ++i)
        if (!contains(h.edge(w.hyperedges[i]), w.vertices[i], w.vertices[i + 1])) return false;
    return true;
}

namespace detail {

// Depth-first enumeration of simple shadow paths. Neighbours are visited in
// ascending order, so complete paths appear in lexicographic order.
class PathWalker {
public:
    PathWalker(const Hypergraph& h, const ShadowGraph& g) : h_(h), g_(g) {}

    std::optional<BergeCycleWitness> first_cycle(std::size_t length) {
        cycle_ = true;
        length_ = length;
        return run<BergeCycleWitness>();
    }

    std::optional<BergePathWitness> first_path(std::size_t length) {
        cycle_ = false;
        length_ = length + 1;  // vertices on the path
        return run<BergePathWitness>();
    }

private:
    template <class W>
    std::optional<W> run() {
        found_.clear();
        on_path_.assign(g_.vertex_count(), false);
        for (Vertex a = 0; a < g_.vertex_count(); ++a) {
            if (g_.degree(a) == 0) continue;
            path_ = {a};
            on_path_[a] = true;
            bool hit = extend();
            on_path_[a] = false;
            if (hit) return W{path_, found_};
        }
        return std::nullopt;
    }

    bool accept() {
        const std::size_t k = path_.size();
        std::vector<std::span<const EdgeIndex>> slots;
        if (cycle_) {
            if (!g_.adjacent(path_.back(), path_.front())) return false;
            if (k >= 3 && path_[1] > path_.back()) return false;  // reflection
            for (std::size_t i = 0; i < k; ++i) slots.push_back(h_.edges_containing(path_[i], path_[(i + 1) % k]));
        } else {
            if (path_.front() > path_.back()) return false;  // reversal
            for (std::size_t i = 0; i + 1 < k; ++i) slots.push_back(h_.edges_containing(path_[i], path_[i + 1]));
        }
        auto m = matcher_.solve(slots);
        if (!m) return false;
        found_ = std::move(*m);
        return true;
    }

    bool extend() {
        if (path_.size() == length_) return accept();
        const Vertex first = path_.front();
        for (Vertex next : g_.neighbors(path_.back())) {
            if (on_path_[next]) continue;
            if (cycle_ && next < first) continue;  // smallest vertex leads
            path_.push_back(next);
            on_path_[next] = true;
            bool hit = extend();
            on_path_[next] = false;
            if (hit) return true;
            path_.pop_back();
        }
        return false;
    }

    const Hypergraph& h_;
    const ShadowGraph& g_;
    bool cycle_ = true;
    std::size_t length_ = 0;
    std::vector<Vertex> path_;
    std::vector<bool> on_path_;
    std::vector<EdgeIndex> found_;
    RepresentativeMatcher matcher_;
};

} // namespace detail

/// First Berge cycle of the given length in canonical order: the smallest vertex
/// comes first, the second vertex is smaller than the last, and among those the
/// vertex sequence is lexicographically least.
inline std::optional<BergeCycleWitness> find_berge_cycle(const Hypergraph& h, std::size_t length) {
    if (length < 2) throw ArgumentError("Berge cycle length must be at least 2");
    if (h.edge_count() < length) return std::nullopt;
    const ShadowGraph g = shadow(h);
    return detail::PathWalker(h, g).first_cycle(length);
}

/// First Berge path with `length` edges, canonical up to reversal (first vertex
/// smaller than last vertex, then lexicographic).
inline std::optional<BergePathWitness> find_berge_path(const Hypergraph& h, std::size_t length) {
    if (length < 1) throw ArgumentError("Berge path length must be at least 1");
    if (h.edge_count() < length) return std::nullopt;
    const ShadowGraph g = shadow(h);
    return detail::PathWalker(h, g).first_path(length);
}

inline bool is_bc4_free(const Hypergraph& h) { return !find_berge_cycle(h, 4).has_value(); }

/// Berge-C4 freeness under edge insertion.
///
/// If the current edge set is BC4-free, any Berge C4 in the set plus a new edge
/// e must use e for one consecutive pair {x, y}. So it suffices to look for
/// y - v3 - v4 - x Berge paths of length 3 among the existing edges.
class IncrementalBc4 {
public:
    explicit IncrementalBc4(std::size_t vertex_count)
        : n_(vertex_count), mult_(n_ * n_, 0), pair_edges_(n_ * n_) {}

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Triple> edges() const noexcept { return edges_; }

    bool would_create_c4(Triple e) const {
        e = sorted(e);
        const std::array<std::array<Vertex, 2>, 3> pairs{{{e[0], e[1]}, {e[0], e[2]}, {e[1], e[2]}}};
        for (auto [x, y] : pairs)
            if (closes_path(x, y)) return true;
        return false;
    }

    /// Appends e; does not check freeness (call would_create_c4 first).
    void push(Triple e) {
        e = sorted(e);
        if (e[0] == e[1] || e[1] == e[2] || e[2] >= n_) throw ArgumentError("invalid hyperedge");
        const auto id = static_cast<std::uint32_t>(edges_.size());
        for (auto [x, y] : pairs_of(e)) {
            ++mult_[x * n_ + y];
            ++mult_[y * n_ + x];
            pair_edges_[x * n_ + y].push_back(id);
        }
        edges_.push_back(e);
    }

    void pop() {
        const Triple e = edges_.back();
        for (auto [x, y] : pairs_of(e)) {
            --mult_[x * n_ + y];
            --mult_[y * n_ + x];
            pair_edges_[x * n_ + y].pop_back();
        }
        edges_.pop_back();
    }

    Hypergraph to_hypergraph() const { return Hypergraph(n_, edges_); }

private:
    static std::array<std::array<Vertex, 2>, 3> pairs_of(const Triple& e) {
        return {{{e[0], e[1]}, {e[0], e[2]}, {e[1], e[2]}}};
    }

    const std::vector<std::uint32_t>& edges_on(Vertex x, Vertex y) const {
        return x < y ? pair_edges_[x * n_ + y] : pair_edges_[y * n_ + x];
    }

    bool adjacent(Vertex x, Vertex y) const { return mult_[x * n_ + y] != 0; }

    bool closes_path(Vertex x, Vertex y) const {
        for (Vertex v3 = 0; v3 < n_; ++v3) {
            if (v3 == x || v3 == y || !adjacent(y, v3)) continue;
            for (Vertex v4 = 0; v4 < n_; ++v4) {
                if (v4 == x || v4 == y || v4 == v3 || !adjacent(v3, v4) || !adjacent(v4, x)) continue;
                if (distinct_triple(edges_on(y, v3), edges_on(v3, v4), edges_on(v4, x))) return true;
            }
        }
        return false;
    }

    static bool distinct_triple(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                const std::vector<std::uint32_t>& c) {
        for (auto f1 : a)
            for (auto f2 : b) {
                if (f2 == f1) continue;
                for (auto f3 : c)
                    if (f3 != f1 && f3 != f2) return true;
            }
        return false;
    }

    std::size_t n_;
    std::vector<std::uint16_t> mult_;
    std::vector<std::vector<std::uint32_t>> pair_edges_;
    std::vector<Triple> edges_;
};

} // namespace bc4

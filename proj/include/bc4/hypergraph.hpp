#pragma once

// 3-uniform hypergraphs, their 2-shadow, and the shadow-level degree notions.

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <iterator>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bc4/errors.hpp"

namespace bc4 {

using Vertex = std::uint32_t;
using EdgeIndex = std::size_t;
using Triple = std::array<Vertex, 3>;
using VertexPair = std::array<Vertex, 2>;

inline Triple sorted(Triple t) noexcept {
    std::sort(t.begin(), t.end());
    return t;
}

inline VertexPair sorted(Vertex x, Vertex y) noexcept {
    return x < y ? VertexPair{x, y} : VertexPair{y, x};
}

inline bool contains(const Triple& e, Vertex v) noexcept {
    return e[0] == v || e[1] == v || e[2] == v;
}

inline bool contains(const Triple& e, Vertex x, Vertex y) noexcept {
    return contains(e, x) && contains(e, y);
}

inline std::size_t intersection_size(const Triple& e, const Triple& f) noexcept {
    std::size_t k = 0;
    for (Vertex v : e) k += contains(f, v) ? 1 : 0;
    return k;
}

inline constexpr std::uint64_t choose2(std::uint64_t x) noexcept { return x < 2 ? 0 : x * (x - 1) / 2; }

namespace detail {

// Compressed adjacency: bucket i holds items_[offsets_[i] .. offsets_[i+1]).
template <class T>
class Buckets {
public:
    Buckets() : offsets_(1, 0) {}

    explicit Buckets(std::vector<std::vector<T>> lists) {
        offsets_.reserve(lists.size() + 1);
        offsets_.push_back(0);
        for (auto& l : lists) {
            items_.insert(items_.end(), l.begin(), l.end());
            offsets_.push_back(items_.size());
        }
    }

    std::span<const T> operator[](std::size_t i) const noexcept {
        return {items_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }

    std::size_t size() const noexcept { return offsets_.size() - 1; }

private:
    std::vector<std::size_t> offsets_;
    std::vector<T> items_;
};

} // namespace detail

/// A 3-uniform hypergraph on vertex ids [0, n).
///
/// Edges are stored sorted ascending and the edge list is kept in lexicographic
/// order, so two hypergraphs compare equal iff their edge sets are equal. Edge
/// indices used throughout the library refer to this canonical order.
class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(std::size_t vertex_count, std::vector<Triple> edges) : n_(vertex_count), edges_(std::move(edges)) {
        for (auto& e : edges_) {
            e = sorted(e);
            if (e[0] == e[1] || e[1] == e[2])
                throw ArgumentError("hyperedge with a repeated vertex");
            if (e[2] >= n_)
                throw ArgumentError("hyperedge vertex id " + std::to_string(e[2]) + " out of range for n = " +
                                    std::to_string(n_));
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw ArgumentError("duplicate hyperedge");
        build_indices();
    }

    explicit Hypergraph(std::size_t vertex_count) : Hypergraph(vertex_count, {}) {}

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Triple> edges() const noexcept { return edges_; }
    const Triple& edge(EdgeIndex i) const { return edges_.at(i); }

    std::optional<EdgeIndex> find_edge(Triple t) const {
        t = sorted(t);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), t);
        if (it == edges_.end() || *it != t) return std::nullopt;
        return static_cast<EdgeIndex>(it - edges_.begin());
    }

    /// Indices of the edges that contain both x and y, ascending.
    std::span<const EdgeIndex> edges_containing(Vertex x, Vertex y) const {
        if (x == y || x >= n_ || y >= n_) return {};
        const auto key = pair_key(x, y);
        auto [lo, hi] = std::equal_range(pair_keys_.begin(), pair_keys_.end(), key);
        return {pair_edges_.data() + (lo - pair_keys_.begin()), static_cast<std::size_t>(hi - lo)};
    }

    /// Indices of the edges that contain v, ascending.
    std::span<const EdgeIndex> incident_edges(Vertex v) const { return incidence_[v]; }

    std::size_t degree(Vertex v) const { return incidence_[v].size(); }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) noexcept {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::uint64_t pair_key(Vertex x, Vertex y) const noexcept {
        auto p = sorted(x, y);
        return static_cast<std::uint64_t>(p[0]) * n_ + p[1];
    }

    void build_indices() {
        std::vector<std::pair<std::uint64_t, EdgeIndex>> entries;
        entries.reserve(edges_.size() * 3);
        std::vector<std::vector<EdgeIndex>> inc(n_);
        for (EdgeIndex i = 0; i < edges_.size(); ++i) {
            const auto& e = edges_[i];
            entries.emplace_back(pair_key(e[0], e[1]), i);
            entries.emplace_back(pair_key(e[0], e[2]), i);
            entries.emplace_back(pair_key(e[1], e[2]), i);
            for (Vertex v : e) inc[v].push_back(i);
        }
        std::sort(entries.begin(), entries.end());
        pair_keys_.clear();
        pair_edges_.clear();
        for (auto& [k, i] : entries) {
            pair_keys_.push_back(k);
            pair_edges_.push_back(i);
        }
        incidence_ = detail::Buckets<EdgeIndex>(std::move(inc));
    }

    std::size_t n_ = 0;
    std::vector<Triple> edges_;
    std::vector<std::uint64_t> pair_keys_;
    std::vector<EdgeIndex> pair_edges_;
    detail::Buckets<EdgeIndex> incidence_;
};

/// Simple undirected graph; used for the 2-shadow of a hypergraph.
class ShadowGraph {
public:
    ShadowGraph() = default;

    ShadowGraph(std::size_t vertex_count, std::vector<VertexPair> pairs) : n_(vertex_count) {
        for (auto& p : pairs) {
            if (p[0] == p[1]) throw ArgumentError("self-loop in graph");
            if (p[0] >= n_ || p[1] >= n_) throw ArgumentError("graph vertex out of range");
            p = sorted(p[0], p[1]);
        }
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        edges_ = std::move(pairs);
        std::vector<std::vector<Vertex>> adj(n_);
        for (auto [x, y] : edges_) {
            adj[x].push_back(y);
            adj[y].push_back(x);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        adjacency_ = detail::Buckets<Vertex>(std::move(adj));
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const VertexPair> edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

    bool adjacent(Vertex x, Vertex y) const {
        if (x >= n_ || y >= n_) return false;
        auto nb = neighbors(x);
        return std::binary_search(nb.begin(), nb.end(), y);
    }

    friend bool operator==(const ShadowGraph& a, const ShadowGraph& b) noexcept {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<VertexPair> edges_;
    detail::Buckets<Vertex> adjacency_;
};

struct VertexDegrees {
    std::size_t d = 0;   // hyperedges through v
    std::size_t d_s = 0; // shadow degree
    std::size_t d_ex = 0;
    std::optional<std::size_t> d_b; // number of blocks through v, when known

    friend bool operator==(const VertexDegrees&, const VertexDegrees&) = default;
};

struct DegreeProfile {
    std::vector<VertexDegrees> vertices;

    std::uint64_t sum_d() const {
        std::uint64_t s = 0;
        for (auto& v : vertices) s += v.d;
        return s;
    }
    std::uint64_t sum_d_s() const {
        std::uint64_t s = 0;
        for (auto& v : vertices) s += v.d_s;
        return s;
    }
    std::uint64_t sum_d_ex() const {
        std::uint64_t s = 0;
        for (auto& v : vertices) s += v.d_ex;
        return s;
    }
};

inline ShadowGraph shadow(const Hypergraph& h) {
    std::vector<VertexPair> pairs;
    pairs.reserve(h.edge_count() * 3);
    for (const auto& e : h.edges()) {
        pairs.push_back({e[0], e[1]});
        pairs.push_back({e[0], e[2]});
        pairs.push_back({e[1], e[2]});
    }
    return ShadowGraph(h.vertex_count(), std::move(pairs));
}

inline DegreeProfile degrees(const Hypergraph& h, const ShadowGraph& g) {
    DegreeProfile p;
    p.vertices.resize(h.vertex_count());
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        auto& r = p.vertices[v];
        r.d = h.degree(v);
        r.d_s = g.degree(v);
        r.d_ex = r.d_s - r.d;
    }
    return p;
}

/// d, d_s and d_ex for every vertex; d_b is left empty (see block_degrees).
inline DegreeProfile degrees(const Hypergraph& h) { return degrees(h, shadow(h)); }

/// Number of 3-vertex paths in g, counted by their middle vertex.
inline std::uint64_t count_3paths(const ShadowGraph& g) {
    std::uint64_t total = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) total += choose2(g.degree(v));
    return total;
}

inline std::vector<Vertex> isolated_vertices(const Hypergraph& h) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) == 0) out.push_back(v);
    return out;
}

/// Relabels the non-isolated vertices to 0..k-1, keeping their relative order.
inline Hypergraph without_isolated_vertices(const Hypergraph& h) {
    std::vector<Vertex> relabel(h.vertex_count(), 0);
    Vertex next = 0;
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) > 0) relabel[v] = next++;
    std::vector<Triple> edges;
    edges.reserve(h.edge_count());
    for (const auto& e : h.edges()) edges.push_back({relabel[e[0]], relabel[e[1]], relabel[e[2]]});
    return Hypergraph(next, std::move(edges));
}

// ---------------------------------------------------------------------------
// Text format
//
//   # optional comment lines
//   n m
//   a b c        (m lines, 0-based ids, a < b < c < n)

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    return v;
}

} // namespace detail

inline Hypergraph parse_hypergraph(std::string_view text) {
    std::size_t line_no = 0;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
    std::vector<Triple> edges;
    std::vector<std::size_t> edge_lines;

    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (line.find('\r') != std::string_view::npos) throw ParseError(line_no, "carriage return (use LF line endings)");
        if (!line.empty() && line.front() == '#') continue;
        auto tok = detail::split_ws(line);
        if (tok.empty()) continue;

        if (!header) {
            if (tok.size() != 2) throw ParseError(line_no, "header must be 'n m'");
            header = {detail::parse_uint(tok[0], line_no), detail::parse_uint(tok[1], line_no)};
            if (header->first > std::numeric_limits<Vertex>::max())
                throw ParseError(line_no, "vertex count too large");
            continue;
        }
        if (edges.size() == header->second) throw ParseError(line_no, "more edge lines than declared");
        if (tok.size() != 3) throw ParseError(line_no, "edge line must have exactly three vertex ids");
        std::uint64_t a = detail::parse_uint(tok[0], line_no);
        std::uint64_t b = detail::parse_uint(tok[1], line_no);
        std::uint64_t c = detail::parse_uint(tok[2], line_no);
        if (!(a < b && b < c)) throw ParseError(line_no, "edge ids must satisfy a < b < c");
        if (c >= header->first) throw ParseError(line_no, "vertex id " + std::to_string(c) + " >= n");
        edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c)});
        edge_lines.push_back(line_no);
    }
    if (!header) throw ParseError(line_no + 1, "missing 'n m' header");
    if (edges.size() != header->second)
        throw ParseError(line_no + 1, "expected " + std::to_string(header->second) + " edges, found " +
                                          std::to_string(edges.size()));

    // Report duplicates against the second occurrence's line.
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return edges[x] < edges[y]; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (edges[order[i]] == edges[order[i - 1]])
            throw ParseError(std::max(edge_lines[order[i]], edge_lines[order[i - 1]]), "duplicate edge");

    return Hypergraph(static_cast<std::size_t>(header->first), std::move(edges));
}

inline Hypergraph read_hypergraph(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_hypergraph(text);
}

/// Canonical serialization. Each comment line is emitted as "# <comment>".
inline std::string to_text(const Hypergraph& h, std::span<const std::string> comments = {}) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << '\n';
    out << h.vertex_count() << ' ' << h.edge_count() << '\n';
    for (const auto& e : h.edges()) out << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
    return out.str();
}

/// FNV-1a (64 bit) of the canonical serialization, as 16 hex digits.
inline std::string digest(const Hypergraph& h) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char ch : to_text(h)) {
        hash ^= ch;
        hash *= 1099511628211ull;
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, hash >>= 4) s[static_cast<std::size_t>(i)] = hex[hash & 0xf];
    return s;
}

} // namespace bc4

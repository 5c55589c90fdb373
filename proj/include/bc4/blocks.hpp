#pragma once

// Block decomposition: the equivalence classes of hyperedges under the
// transitive closure of "shares exactly two vertices".

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string_view>
#include <vector>

#include "bc4/errors.hpp"
#include "bc4/hypergraph.hpp"

namespace bc4 {

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<unsigned char> rank_;
};

} // namespace detail

enum class BlockType { Type1, Type2, Other };

constexpr std::string_view to_string(BlockType t) noexcept {
    switch (t) {
    case BlockType::Type1: return "TYPE1";
    case BlockType::Type2: return "TYPE2";
    case BlockType::Other: return "OTHER";
    }
    return "?";
}

struct Block {
    std::vector<EdgeIndex> edge_indices;  // ascending
    std::vector<Vertex> vertex_set;       // ascending union of member edges
    BlockType classification = BlockType::Other;
    std::vector<EdgeIndex> leaf_edges;

    bool has_vertex(Vertex v) const { return std::binary_search(vertex_set.begin(), vertex_set.end(), v); }
};

struct BlockDecomposition {
    std::vector<Block> blocks;             // ordered by smallest member edge index
    std::vector<std::size_t> edge_to_block;
};

/// Edges h of the block containing a vertex met by no other edge of the block.
inline std::vector<EdgeIndex> leaf_edges(const Hypergraph& h, const Block& b) {
    std::vector<EdgeIndex> out;
    for (EdgeIndex i : b.edge_indices) {
        const Triple& e = h.edge(i);
        bool leaf = false;
        for (Vertex x : e) {
            bool alone = true;
            for (EdgeIndex j : b.edge_indices)
                if (j != i && contains(h.edge(j), x)) {
                    alone = false;
                    break;
                }
            if (alone) {
                leaf = true;
                break;
            }
        }
        if (leaf) out.push_back(i);
    }
    return out;
}

/// Three triples on four vertices, i.e. K4^(3)- (only four triples exist there).
inline bool is_type2(const Block& b) { return b.edge_indices.size() == 3 && b.vertex_set.size() == 4; }

/// Some member e meets every other member in two vertices, and any two other
/// members intersect inside e. Vacuous for a single edge.
inline bool is_type1(const Hypergraph& h, const Block& b) {
    for (EdgeIndex center : b.edge_indices) {
        const Triple& e = h.edge(center);
        bool ok = true;
        for (std::size_t x = 0; ok && x < b.edge_indices.size(); ++x) {
            const EdgeIndex fi = b.edge_indices[x];
            if (fi == center) continue;
            const Triple& f1 = h.edge(fi);
            if (intersection_size(e, f1) != 2) {
                ok = false;
                break;
            }
            for (std::size_t y = x + 1; ok && y < b.edge_indices.size(); ++y) {
                const EdgeIndex gi = b.edge_indices[y];
                if (gi == center) continue;
                for (Vertex v : f1)
                    if (contains(h.edge(gi), v) && !contains(e, v)) ok = false;
            }
        }
        if (ok) return true;
    }
    return false;
}

/// TYPE2 takes precedence over TYPE1; anything else is OTHER.
inline BlockType classify(const Hypergraph& h, const Block& b) {
    if (is_type2(b)) return BlockType::Type2;
    if (is_type1(h, b)) return BlockType::Type1;
    return BlockType::Other;
}

inline BlockDecomposition decompose(const Hypergraph& h) {
    const std::size_t m = h.edge_count();
    detail::UnionFind uf(m);
    // Every pair bucket is a set of edges pairwise sharing that pair.
    for (const auto& e : h.edges())
        for (auto [x, y] : {VertexPair{e[0], e[1]}, VertexPair{e[0], e[2]}, VertexPair{e[1], e[2]}}) {
            auto bucket = h.edges_containing(x, y);
            for (std::size_t k = 1; k < bucket.size(); ++k) uf.unite(bucket[0], bucket[k]);
        }

    BlockDecomposition d;
    d.edge_to_block.assign(m, 0);
    std::vector<std::size_t> root_to_block(m, static_cast<std::size_t>(-1));
    for (EdgeIndex i = 0; i < m; ++i) {
        const std::size_t r = uf.find(i);
        if (root_to_block[r] == static_cast<std::size_t>(-1)) {
            root_to_block[r] = d.blocks.size();
            d.blocks.emplace_back();
        }
        const std::size_t b = root_to_block[r];
        d.edge_to_block[i] = b;
        d.blocks[b].edge_indices.push_back(i);
    }
    for (auto& b : d.blocks) {
        for (EdgeIndex i : b.edge_indices)
            for (Vertex v : h.edge(i)) b.vertex_set.push_back(v);
        std::sort(b.vertex_set.begin(), b.vertex_set.end());
        b.vertex_set.erase(std::unique(b.vertex_set.begin(), b.vertex_set.end()), b.vertex_set.end());
        b.leaf_edges = leaf_edges(h, b);
        b.classification = classify(h, b);
    }
    return d;
}

/// d_b(v): number of blocks with an edge through v.
inline std::vector<std::size_t> block_degrees(const Hypergraph& h, const BlockDecomposition& d) {
    std::vector<std::size_t> db(h.vertex_count(), 0);
    for (const auto& b : d.blocks)
        for (Vertex v : b.vertex_set) ++db[v];
    return db;
}

/// Shadow degree minus hyperedge degree of v, both measured inside block b.
inline std::size_t excess_within(const Hypergraph& h, const Block& b, Vertex v) {
    if (!b.has_vertex(v)) throw ArgumentError("vertex " + std::to_string(v) + " is not in the block");
    std::vector<Vertex> nbrs;
    std::size_t deg = 0;
    for (EdgeIndex i : b.edge_indices) {
        const Triple& e = h.edge(i);
        if (!contains(e, v)) continue;
        ++deg;
        for (Vertex u : e)
            if (u != v) nbrs.push_back(u);
    }
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    return nbrs.size() - deg;
}

} // namespace bc4

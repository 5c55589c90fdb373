#pragma once

// Lower-bound construction (a C4-free bipartite graph with one colour class
// cloned into the edges) and a seeded generator of random BC4-free instances.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bc4/berge.hpp"
#include "bc4/errors.hpp"
#include "bc4/hypergraph.hpp"

namespace bc4 {

/// GF(q) for q prime, or q in {4, 8, 9, 16, 25, 27, 32, 49} via a fixed
/// irreducible polynomial. Elements are 0..q-1; for extension fields the
/// base-p digits of an element are its polynomial coefficients (low first).
class FiniteField {
public:
    explicit FiniteField(std::uint64_t q) : q_(q) {
        if (q < 2) throw ArgumentError("field order must be at least 2");
        p_ = smallest_prime_factor(q);
        std::uint64_t k = 0, r = q;
        while (r % p_ == 0) {
            r /= p_;
            ++k;
        }
        if (r != 1) throw ArgumentError(std::to_string(q) + " is not a prime power");
        if (k == 1) return;

        const std::vector<std::uint64_t>* poly = nullptr;
        for (const auto& [order, coeffs] : irreducible_table())
            if (order == q) poly = &coeffs;
        if (!poly) throw ArgumentError("prime power " + std::to_string(q) + " is not supported");
        build_tables(k, *poly);
    }

    std::uint64_t order() const noexcept { return q_; }
    std::uint64_t characteristic() const noexcept { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        return add_.empty() ? (a + b) % p_ : add_[a * q_ + b];
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return mul_.empty() ? (a * b) % p_ : mul_[a * q_ + b];
    }

    static std::uint64_t smallest_prime_factor(std::uint64_t q) {
        for (std::uint64_t d = 2; d * d <= q; ++d)
            if (q % d == 0) return d;
        return q;
    }

private:
    // Monic irreducible polynomials, coefficients of x^0 .. x^{k-1} (leading 1 implied).
    static const std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>>& irreducible_table() {
        static const std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> table{
            {4, {1, 1}},           // x^2 + x + 1
            {8, {1, 1, 0}},        // x^3 + x + 1
            {9, {1, 0}},           // x^2 + 1
            {16, {1, 1, 0, 0}},    // x^4 + x + 1
            {25, {2, 0}},          // x^2 + 2
            {27, {1, 2, 0}},       // x^3 + 2x + 1
            {32, {1, 0, 1, 0, 0}}, // x^5 + x^2 + 1
            {49, {1, 0}},          // x^2 + 1
        };
        return table;
    }

    void build_tables(std::uint64_t k, const std::vector<std::uint64_t>& low) {
        auto digits = [&](std::uint64_t a) {
            std::vector<std::uint64_t> d(k);
            for (auto& x : d) {
                x = a % p_;
                a /= p_;
            }
            return d;
        };
        auto encode = [&](const std::vector<std::uint64_t>& d) {
            std::uint64_t a = 0;
            for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
            return a;
        };
        add_.assign(q_ * q_, 0);
        mul_.assign(q_ * q_, 0);
        for (std::uint64_t a = 0; a < q_; ++a)
            for (std::uint64_t b = 0; b < q_; ++b) {
                auto da = digits(a), db = digits(b);
                std::vector<std::uint64_t> s(k);
                for (std::size_t i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p_;
                add_[a * q_ + b] = encode(s);

                std::vector<std::uint64_t> prod(2 * k - 1, 0);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                // x^k = -(low[0] + low[1] x + ...)
                for (std::size_t deg = prod.size(); deg-- > k;) {
                    const std::uint64_t c = prod[deg];
                    if (c == 0) continue;
                    prod[deg] = 0;
                    for (std::size_t i = 0; i < k; ++i)
                        prod[deg - k + i] = (prod[deg - k + i] + (p_ - low[i]) % p_ * c) % p_;
                }
                prod.resize(k);
                mul_[a * q_ + b] = encode(prod);
            }
    }

    std::uint64_t q_;
    std::uint64_t p_ = 0;
    std::vector<std::uint64_t> add_, mul_;
};

struct BipartiteGraph {
    std::size_t left_count = 0;
    std::size_t right_count = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (left, right), sorted, no duplicates

    /// No two left vertices have two common right neighbours.
    bool is_c4_free() const {
        std::vector<std::vector<std::uint32_t>> by_right(right_count);
        for (auto [l, r] : edges) by_right[r].push_back(l);
        std::vector<bool> seen(left_count * left_count, false);
        for (auto& ls : by_right)
            for (std::size_t i = 0; i < ls.size(); ++i)
                for (std::size_t j = i + 1; j < ls.size(); ++j) {
                    const std::size_t k = std::min(ls[i], ls[j]) * left_count + std::max(ls[i], ls[j]);
                    if (seen[k]) return false;
                    seen[k] = true;
                }
        return true;
    }
};

enum class Side { Left, Right };

/// Point-line incidence graph of PG(2, q): points on the left, lines on the right.
inline BipartiteGraph projective_plane_incidence(std::uint64_t q) {
    const FiniteField f(q);
    // Normalised homogeneous coordinates: first nonzero coordinate is 1.
    std::vector<std::array<std::uint64_t, 3>> pts;
    pts.push_back({0, 0, 1});
    for (std::uint64_t a = 0; a < q; ++a) pts.push_back({0, 1, a});
    for (std::uint64_t a = 0; a < q; ++a)
        for (std::uint64_t b = 0; b < q; ++b) pts.push_back({1, a, b});

    BipartiteGraph g;
    g.left_count = g.right_count = pts.size();
    for (std::uint32_t i = 0; i < pts.size(); ++i)
        for (std::uint32_t j = 0; j < pts.size(); ++j) {
            const auto& x = pts[i];
            const auto& y = pts[j];
            std::uint64_t dot = f.add(f.add(f.mul(x[0], y[0]), f.mul(x[1], y[1])), f.mul(x[2], y[2]));
            if (dot == 0) g.edges.emplace_back(i, j);
        }
    return g;
}

/// Every vertex v on `cloned` gets a twin v'; graph edge uv becomes {u, v, v'}.
/// Vertex ids: left side first, then right side, then the twins.
inline Hypergraph expand_to_hypergraph(const BipartiteGraph& g, Side cloned) {
    const auto left = static_cast<Vertex>(g.left_count);
    const auto right = static_cast<Vertex>(g.right_count);
    const std::size_t twins = cloned == Side::Left ? g.left_count : g.right_count;
    std::vector<Triple> edges;
    edges.reserve(g.edges.size());
    for (auto [l, r] : g.edges) {
        if (l >= left || r >= right) throw ArgumentError("bipartite edge out of range");
        const Vertex twin = left + right + (cloned == Side::Left ? l : r);
        edges.push_back({l, left + r, twin});
    }
    return Hypergraph(g.left_count + g.right_count + twins, std::move(edges));
}

/// Projective-plane incidence graph with the line class cloned:
/// n = 3(q^2+q+1) vertices and (q+1)(q^2+q+1) edges, free of Berge C4.
inline Hypergraph lower_bound_construction(std::uint64_t q) {
    const BipartiteGraph g = projective_plane_incidence(q);
    if (q <= 16 && !g.is_c4_free()) throw std::logic_error("incidence graph is not C4-free");
    Hypergraph h = expand_to_hypergraph(g, Side::Right);
    if (q <= 16 && !is_bc4_free(h)) throw std::logic_error("construction contains a Berge C4");
    return h;
}

namespace detail {

/// Uniform integer in [0, bound) from a 64-bit engine, by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

inline std::vector<Triple> all_triples(std::size_t n) {
    std::vector<Triple> out;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) out.push_back({a, b, c});
    return out;
}

} // namespace detail

/// Greedy random BC4-free hypergraph. All C(n,3) triples (lexicographic) are
/// shuffled by Fisher-Yates driven by mt19937_64(seed) with rejection sampling,
/// then each triple is kept iff the result stays BC4-free, until target_m edges.
inline Hypergraph random_bc4free(std::size_t n, std::size_t target_m, std::uint64_t seed) {
    if (n < 3) throw ArgumentError("random_bc4free needs n >= 3");
    std::vector<Triple> triples = detail::all_triples(n);
    std::mt19937_64 rng(seed);
    for (std::size_t i = triples.size(); i-- > 1;) std::swap(triples[i], triples[detail::uniform_below(rng, i + 1)]);

    IncrementalBc4 inc(n);
    for (const auto& t : triples) {
        if (inc.edge_count() >= target_m) break;
        if (!inc.would_create_c4(t)) inc.push(t);
    }
    return inc.to_hypergraph();
}

} // namespace bc4

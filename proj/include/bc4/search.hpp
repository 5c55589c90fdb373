#pragma once

// Exact ex_3(n, BC4) at small n: an exhaustive subset oracle and a pruned
// branch-and-bound.
//
// Both searches return the lexicographically least maximiser, comparing edge
// sets as sorted lists of triples. The branch-and-bound relies on three facts:
//
//  * BC4-freeness is hereditary, so a triple that is incompatible with the
//    current edge set stays incompatible below it; the count of still
//    compatible later triples bounds the subtree.
//  * Any BC4-free hypergraph has at most floor(upper_bound(n)) edges.
//  * Every nonempty hypergraph has a relabelling containing {0,1,2}, so some
//    maximiser contains triple 0, and hence so does the lexicographically least
//    one. The search pins it.
//
// Sets are visited in lexicographic order (include-first DFS over triples) and
// an incumbent is only replaced by a strictly larger set, which together give
// the least maximiser.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bc4/berge.hpp"
#include "bc4/bounds.hpp"
#include "bc4/construct.hpp"
#include "bc4/errors.hpp"
#include "bc4/hypergraph.hpp"

namespace bc4 {

enum class SearchMethod { BruteForce, BranchAndBound };

struct SearchResult {
    std::size_t n = 0;
    std::size_t max_edges = 0;
    Hypergraph witness;
    bool optimal = false;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{0};
    SearchMethod method = SearchMethod::BranchAndBound;

    /// Equality of everything except wall time.
    bool same_outcome(const SearchResult& o) const {
        return n == o.n && max_edges == o.max_edges && witness == o.witness && optimal == o.optimal &&
               nodes_explored == o.nodes_explored && method == o.method;
    }
};

struct SearchOptions {
    unsigned threads = 1;
    /// Extra known BC4-free hypergraph used as a starting lower bound.
    std::optional<Hypergraph> seed_witness;
};

namespace detail {

/// Lexicographic comparison of edge lists.
inline bool lex_less(const Hypergraph& a, const Hypergraph& b) {
    return std::lexicographical_compare(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end());
}

} // namespace detail

/// Exhaustive search over all 2^C(n,3) edge sets, 3 <= n <= 6. Freeness of each
/// set is decided by trying every 4-cycle of K_n against every injective choice
/// of four hyperedges.
inline SearchResult brute_force_ex(std::size_t n) {
    if (n < 3 || n > 6) throw ArgumentError("brute_force_ex supports 3 <= n <= 6");
    const auto start = std::chrono::steady_clock::now();
    const auto triples = detail::all_triples(n);
    const std::size_t m = triples.size();

    auto pair_mask = [&](Vertex x, Vertex y) {
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (contains(triples[i], x, y)) mask |= 1u << i;
        return mask;
    };
    // Each 4-cycle of K_n once: a < b < d, cycle a-b-c-d with c the remaining vertex.
    std::vector<std::array<std::uint32_t, 4>> cycles;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = a + 1; c < n; ++c)
                for (Vertex d = b + 1; d < n; ++d) {
                    if (c == b || c == d) continue;
                    cycles.push_back({pair_mask(a, b), pair_mask(b, c), pair_mask(c, d), pair_mask(d, a)});
                }

    auto has_c4 = [&](std::uint32_t set) {
        for (const auto& cyc : cycles) {
            const std::uint32_t s0 = cyc[0] & set, s1 = cyc[1] & set, s2 = cyc[2] & set, s3 = cyc[3] & set;
            if (!s0 || !s1 || !s2 || !s3) continue;
            for (std::uint32_t r0 = s0; r0; r0 &= r0 - 1) {
                const std::uint32_t e0 = r0 & -r0;
                for (std::uint32_t r1 = s1 & ~e0; r1; r1 &= r1 - 1) {
                    const std::uint32_t e1 = r1 & -r1;
                    for (std::uint32_t r2 = s2 & ~(e0 | e1); r2; r2 &= r2 - 1) {
                        const std::uint32_t e2 = r2 & -r2;
                        if (s3 & ~(e0 | e1 | e2)) return true;
                    }
                }
            }
        }
        return false;
    };

    std::uint32_t best = 0;
    int best_size = 0;
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t s = 0; s < total; ++s) {
        const auto set = static_cast<std::uint32_t>(s);
        const int size = std::popcount(set);
        if (size < best_size) continue;
        if (size == best_size) {
            // Lexicographically smaller iff the lowest differing triple belongs to `set`.
            const std::uint32_t diff = set ^ best;
            if (!(diff & set & -diff)) continue;
        }
        if (has_c4(set)) continue;
        best = set;
        best_size = size;
    }

    std::vector<Triple> edges;
    for (std::size_t i = 0; i < m; ++i)
        if (best >> i & 1u) edges.push_back(triples[i]);

    SearchResult r;
    r.n = n;
    r.max_edges = static_cast<std::size_t>(best_size);
    r.witness = Hypergraph(n, std::move(edges));
    r.optimal = true;
    r.nodes_explored = total;
    r.method = SearchMethod::BruteForce;
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

namespace detail {

// One subtree of the branch-and-bound: triple 0 plus `second` as the next
// included triple, searched with a fixed incumbent size.
class SubtreeSearch {
public:
    SubtreeSearch(std::size_t n, const std::vector<Triple>& triples, std::size_t cap)
        : n_(n), triples_(triples), cap_(cap), state_(n) {}

    struct Outcome {
        std::size_t best_size = 0;
        std::vector<Triple> best_edges;  // empty if nothing beat the incumbent
        std::uint64_t nodes = 0;
        bool aborted = false;
    };

    Outcome run(std::size_t second, std::size_t incumbent, std::uint64_t budget) {
        out_ = Outcome{};
        out_.best_size = incumbent;
        budget_ = budget;
        state_ = IncrementalBc4(n_);
        state_.push(triples_[0]);
        state_.push(triples_[second]);
        std::vector<std::uint16_t> cands;
        for (std::size_t i = second + 1; i < triples_.size(); ++i)
            if (!state_.would_create_c4(triples_[i])) cands.push_back(static_cast<std::uint16_t>(i));
        dfs(cands);
        return out_;
    }

private:
    void dfs(const std::vector<std::uint16_t>& cands) {
        if (out_.nodes >= budget_) {
            out_.aborted = true;
            return;
        }
        ++out_.nodes;
        const std::size_t count = state_.edge_count();
        if (count > out_.best_size) {
            out_.best_size = count;
            out_.best_edges.assign(state_.edges().begin(), state_.edges().end());
        }
        if (std::min(count + cands.size(), cap_) <= out_.best_size) return;

        std::vector<std::uint16_t> next;
        for (std::size_t k = 0; k < cands.size(); ++k) {
            if (std::min(count + cands.size() - k, cap_) <= out_.best_size) break;
            const Triple& t = triples_[cands[k]];
            state_.push(t);
            next.clear();
            for (std::size_t j = k + 1; j < cands.size(); ++j)
                if (!state_.would_create_c4(triples_[cands[j]])) next.push_back(cands[j]);
            dfs(std::vector<std::uint16_t>(next));
            state_.pop();
            if (out_.aborted) return;
        }
    }

    std::size_t n_;
    const std::vector<Triple>& triples_;
    std::size_t cap_;
    IncrementalBc4 state_;
    std::uint64_t budget_ = 0;
    Outcome out_;
};

inline Hypergraph embed(const Hypergraph& h, std::size_t n) {
    if (h.vertex_count() > n) throw ArgumentError("seed witness has too many vertices");
    return Hypergraph(n, std::vector<Triple>(h.edges().begin(), h.edges().end()));
}

} // namespace detail

/// Subtrees are processed in batches of this many; every subtree in a batch is
/// searched against the incumbent fixed at the start of the batch, which keeps
/// the outcome independent of the thread count.
inline constexpr std::size_t kSearchBatch = 8;

/// Depth-first branch-and-bound with a node budget. optimal is true iff the
/// search finished within the budget.
inline SearchResult branch_and_bound_ex(std::size_t n, std::uint64_t node_budget, const SearchOptions& opt = {}) {
    if (n < 3) throw ArgumentError("branch_and_bound_ex needs n >= 3");
    const auto start = std::chrono::steady_clock::now();
    const auto triples = detail::all_triples(n);
    if (triples.size() > 65535) throw ArgumentError("n too large for branch_and_bound_ex");
    const auto cap = static_cast<std::size_t>(std::min<BigInt>(upper_bound(n).floor(), BigInt(triples.size())));

    // Starting lower bound: greedy random instances, the sunflower on {0,1}, and the caller's seed.
    Hypergraph incumbent = random_bc4free(n, triples.size(), 1);
    auto consider = [&](const Hypergraph& h) {
        if (h.edge_count() > incumbent.edge_count() ||
            (h.edge_count() == incumbent.edge_count() && detail::lex_less(h, incumbent)))
            incumbent = h;
    };
    for (std::uint64_t seed = 2; seed <= 4; ++seed) consider(random_bc4free(n, triples.size(), seed));
    {
        std::vector<Triple> petals;
        for (Vertex v = 2; v < n; ++v) petals.push_back({0, 1, v});
        consider(Hypergraph(n, std::move(petals)));
    }
    if (opt.seed_witness) {
        Hypergraph s = detail::embed(*opt.seed_witness, n);
        if (!is_bc4_free(s)) throw ArgumentError("seed witness contains a Berge C4");
        consider(s);
    }

    SearchResult r;
    r.n = n;
    r.method = SearchMethod::BranchAndBound;
    std::uint64_t remaining = node_budget;
    bool complete = true;

    // Root: the set {triple 0}.
    std::size_t best = incumbent.edge_count() - 1;  // ties with the starting bound must still be found
    std::optional<std::vector<Triple>> found;
    if (remaining == 0) {
        complete = false;
    } else {
        --remaining;
        ++r.nodes_explored;
        if (best < 1) {
            best = 1;
            found = std::vector<Triple>{triples[0]};
        }
    }

    std::vector<std::size_t> seconds;
    for (std::size_t j = 1; j < triples.size(); ++j) seconds.push_back(j);
    const unsigned threads = std::max(1u, opt.threads);

    std::size_t next = 0;
    while (complete && next < seconds.size() && best < cap) {
        const std::size_t batch_end = std::min(seconds.size(), next + kSearchBatch);
        const std::size_t batch = batch_end - next;
        std::vector<detail::SubtreeSearch::Outcome> outcomes(batch);
        const std::size_t frozen = best;
        const std::uint64_t batch_budget = remaining;

        std::atomic<std::size_t> cursor{0};
        auto worker = [&] {
            detail::SubtreeSearch s(n, triples, cap);
            for (std::size_t i; (i = cursor.fetch_add(1)) < batch;)
                outcomes[i] = s.run(seconds[next + i], frozen, batch_budget);
        };
        const unsigned pool = static_cast<unsigned>(std::min<std::size_t>(threads, batch));
        if (pool <= 1) {
            worker();
        } else {
            std::vector<std::thread> ts;
            for (unsigned t = 0; t < pool; ++t) ts.emplace_back(worker);
            for (auto& t : ts) t.join();
        }

        // Fold in order, as a single thread would have run them.
        for (std::size_t i = 0; i < batch; ++i) {
            auto o = std::move(outcomes[i]);
            if (o.aborted || o.nodes > remaining) {
                o = detail::SubtreeSearch(n, triples, cap).run(seconds[next + i], frozen, remaining);
            }
            remaining -= o.nodes;
            r.nodes_explored += o.nodes;
            if (o.best_size > best) {
                best = o.best_size;
                found = std::move(o.best_edges);
            }
            if (o.aborted) {
                complete = false;
                break;
            }
            if (best >= cap) break;
        }
        next = batch_end;
    }

    if (found && found->size() >= incumbent.edge_count()) incumbent = Hypergraph(n, std::move(*found));
    r.witness = incumbent;
    r.max_edges = incumbent.edge_count();
    r.optimal = complete;
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

struct ExTableRow {
    SearchResult result;
    QuadraticSurd upper_bound_n;
    Rational ratio_value;
};

/// ex_3(n, BC4) for n = 3..n_max: brute force where n <= 6, branch-and-bound
/// above, each row seeded with the previous row's witness.
inline std::vector<ExTableRow> ex_table(std::size_t n_max, std::uint64_t budget, const SearchOptions& opt = {}) {
    if (n_max < 3) throw ArgumentError("ex_table needs n_max >= 3");
    std::vector<ExTableRow> rows;
    for (std::size_t n = 3; n <= n_max; ++n) {
        SearchResult res;
        if (n <= 6) {
            res = brute_force_ex(n);
        } else {
            SearchOptions o = opt;
            o.seed_witness = rows.back().result.witness;
            res = branch_and_bound_ex(n, budget, o);
        }
        rows.push_back({res, upper_bound(n), ratio(n, res.max_edges)});
    }
    return rows;
}

/// Tab-separated: n, max_edges, optimal, upper_bound (6 decimals), ratio.
inline std::string format_ex_table(const std::vector<ExTableRow>& rows) {
    std::ostringstream out;
    out << "n\tmax_edges\toptimal\tupper_bound\tratio\n";
    for (const auto& row : rows)
        out << row.result.n << '\t' << row.result.max_edges << '\t' << (row.result.optimal ? "true" : "false") << '\t'
            << row.upper_bound_n.to_decimal(6) << '\t' << to_decimal(row.ratio_value, ratio_digits(row.ratio_value))
            << '\n';
    return out.str();
}

} // namespace bc4

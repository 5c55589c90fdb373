#pragma once

// The inequality chain behind the upper bound on ex_3(n, BC4), evaluated
// exactly on concrete hypergraphs, and the per-n bound it implies.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bc4/berge.hpp"
#include "bc4/blocks.hpp"
#include "bc4/errors.hpp"
#include "bc4/exact.hpp"
#include "bc4/hypergraph.hpp"

namespace bc4 {

/// The chain is only claimed for BC4-free hypergraphs without isolated vertices.
class Refusal : public std::runtime_error {
public:
    enum class Reason { NotBc4Free, IsolatedVertices, TooFewVertices };

    Refusal(Reason reason, const std::string& what, std::optional<BergeCycleWitness> witness = std::nullopt,
            std::vector<Vertex> isolated = {})
        : std::runtime_error(what), reason_(reason), witness_(std::move(witness)), isolated_(std::move(isolated)) {}

    Reason reason() const noexcept { return reason_; }
    const std::optional<BergeCycleWitness>& witness() const noexcept { return witness_; }
    const std::vector<Vertex>& isolated() const noexcept { return isolated_; }

private:
    Reason reason_;
    std::optional<BergeCycleWitness> witness_;
    std::vector<Vertex> isolated_;
};

enum class Relation { LessEqual, GreaterEqual };

inline std::string to_string(Relation r) { return r == Relation::LessEqual ? "<=" : ">="; }

struct InequalityRecord {
    std::string label;
    Relation relation = Relation::LessEqual;
    Rational lhs;
    Rational rhs;
    bool pass = false;
};

struct BoundReport {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::vector<InequalityRecord> inequalities;  // eq1 .. eq6
    Rational block_excess_sum;                   // sum over blocks B of sum_v d_ex^B(v)
    QuadraticSurd upper_bound_n;
    bool within_upper_bound = false;

    bool all_pass() const {
        for (auto& r : inequalities)
            if (!r.pass) return false;
        return within_upper_bound;
    }

    const InequalityRecord& at(const std::string& label) const {
        for (auto& r : inequalities)
            if (r.label == label) return r;
        throw ArgumentError("no inequality labelled " + label);
    }
};

inline InequalityRecord make_record(std::string label, Relation rel, Rational lhs, Rational rhs) {
    const bool pass = rel == Relation::LessEqual ? lhs <= rhs : lhs >= rhs;
    return {std::move(label), rel, std::move(lhs), std::move(rhs), pass};
}

/// Both sides of the Jensen estimate n * C(L/n, 2) <= sum_v C(x_v, 2), valid
/// whenever the x_v are non-negative integers with sum at least L >= 0.
inline InequalityRecord jensen_estimate(std::string label, std::span<const std::uint64_t> values,
                                        const Rational& total_lower) {
    if (values.empty()) throw ArgumentError("Jensen estimate needs at least one value");
    const Rational n(values.size());
    Rational rhs = 0;
    for (auto x : values) rhs += binom2(Rational(x));
    return make_record(std::move(label), Relation::LessEqual, n * binom2(total_lower / n), rhs);
}

/// Largest real E with n C(4E/n, 2) + 4n C(E/n, 2) <= 2 C(n, 2) + 21 E.
///
/// The left side expands to 10E^2/n - 4E, so the condition is
///   10E^2 - 25nE - n^2(n-1) <= 0,
/// whose positive root is E = n (25 + sqrt(40n + 585)) / 20.
inline QuadraticSurd upper_bound(std::uint64_t n) {
    if (n < 3) throw ArgumentError("upper_bound needs n >= 3");
    return {BigInt(25) * n, BigInt(n), BigInt(40) * n + 585, BigInt(20)};
}

/// m / n^{3/2} rounded to nearest at 12 significant digits (exact rational).
inline Rational ratio(std::uint64_t n, std::uint64_t m) {
    if (n < 1) throw ArgumentError("ratio needs n >= 1");
    if (m == 0) return 0;
    // value * 10^s = sqrt(R) with R = m^2 10^{2s} / n^3; pick s so that it has 12 integer digits.
    const BigInt m2 = BigInt(m) * m;
    const BigInt n3 = BigInt(n) * n * n;
    auto scaled_square = [&](long s) {
        return s >= 0 ? Rational(m2 * pow10(static_cast<unsigned>(2 * s)), n3)
                      : Rational(m2, n3 * pow10(static_cast<unsigned>(-2 * s)));
    };
    const Rational lo(pow10(22)), hi(pow10(24));
    long s = 11;
    while (scaled_square(s) < lo) ++s;
    while (scaled_square(s) >= hi) --s;
    const Rational r = scaled_square(s);
    BigInt k = isqrt(floor(r));
    const Rational half = Rational(k) + Rational(1, 2);
    if (r >= half * half) ++k;
    return s >= 0 ? Rational(k, pow10(static_cast<unsigned>(s))) : Rational(k * pow10(static_cast<unsigned>(-s)));
}

/// Number of digits after the point needed to print ratio(n, m) exactly.
inline unsigned ratio_digits(const Rational& r) {
    BigInt den = boost::multiprecision::denominator(r);
    unsigned twos = 0, fives = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++twos;
    }
    while (den % 5 == 0) {
        den /= 5;
        ++fives;
    }
    if (den != 1) throw ArgumentError("not a terminating decimal");
    return std::max(twos, fives);
}

/// 1/(3 sqrt 3) and 1/sqrt 10: the lower and upper asymptotic constants.
inline QuadraticSurd lower_constant() { return {0, 1, 3, 9}; }
inline QuadraticSurd upper_constant() { return {0, 1, 10, 10}; }

/// Evaluates eq1 .. eq6 exactly. Refuses hypergraphs that contain a Berge C4 or
/// have isolated vertices.
inline BoundReport verify_chain(const Hypergraph& h) {
    if (auto iso = isolated_vertices(h); !iso.empty())
        throw Refusal(Refusal::Reason::IsolatedVertices,
                      "hypergraph has " + std::to_string(iso.size()) + " isolated vertices", std::nullopt, iso);
    if (h.vertex_count() < 3) throw Refusal(Refusal::Reason::TooFewVertices, "hypergraph needs at least 3 vertices");
    if (auto w = find_berge_cycle(h, 4)) throw Refusal(Refusal::Reason::NotBc4Free, "hypergraph contains a Berge C4", w);

    const std::uint64_t n = h.vertex_count();
    const std::uint64_t m = h.edge_count();
    const ShadowGraph g = shadow(h);
    const DegreeProfile deg = degrees(h, g);
    const BlockDecomposition dec = decompose(h);
    const std::vector<std::size_t> db = block_degrees(h, dec);

    std::vector<std::uint64_t> ds_values, db_values;
    Rational sum_ds2 = 0, sum_db2 = 0, sum_dex = 0, sum_db = 0;
    for (Vertex v = 0; v < n; ++v) {
        const auto& r = deg.vertices[v];
        ds_values.push_back(r.d + r.d_ex);
        db_values.push_back(db[v]);
        sum_ds2 += choose2(r.d_s);
        sum_db2 += choose2(db[v]);
        sum_dex += r.d_ex;
        sum_db += db[v];
    }
    const Rational N(n), E(m);
    const Rational two_binom_n = 2 * binom2(N);

    BoundReport rep;
    rep.vertex_count = n;
    rep.edge_count = m;
    rep.inequalities.push_back(make_record("eq1", Relation::LessEqual, sum_ds2, two_binom_n - 4 * sum_db2 + 21 * E));
    rep.inequalities.push_back(make_record("eq2", Relation::GreaterEqual, sum_dex, E));
    rep.inequalities.push_back(make_record("eq3", Relation::GreaterEqual, sum_db, E));
    rep.inequalities.push_back(jensen_estimate("eq4", ds_values, 4 * E));
    rep.inequalities.push_back(jensen_estimate("eq5", db_values, E));
    rep.inequalities.push_back(make_record("eq6", Relation::LessEqual,
                                           N * binom2(4 * E / N) + 4 * N * binom2(E / N), two_binom_n + 21 * E));

    for (const auto& b : dec.blocks)
        for (Vertex v : b.vertex_set) rep.block_excess_sum += excess_within(h, b, v);

    rep.upper_bound_n = upper_bound(n);
    rep.within_upper_bound = rep.upper_bound_n.compare(E) >= 0;
    return rep;
}

} // namespace bc4

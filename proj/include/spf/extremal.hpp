#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "spf/graph.hpp"
#include "spf/spectra.hpp"

namespace spf {

/// Parameters of the extremal families: minimum-degree target delta, order n,
/// and the cut size s (fixed to delta for G*).
struct FamilyParams {
    int delta = 0;
    int n = 0;
    int s = 0;
};

/// Cut size plus clique orders n_1 >= n_2 >= ... >= n_t for the general
/// family K_s v (K_{n_1} u ... u K_{n_t}).
struct PartitionSpec {
    int s = 0;
    std::vector<int> parts;
};

/// Theorem contexts assume delta >= 3 and n >= 2*delta^2; builders accept
/// smaller structurally valid parameters so small instances can be probed.
inline bool in_theorem_range(int delta, int n) { return delta >= 3 && n >= 2 * delta * delta; }

namespace detail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

/// Overflow-checked 64-bit integer; lets the closed-form coefficients read
/// exactly as displayed.
struct CInt {
    long long v = 0;

    friend CInt operator+(CInt a, CInt b) { return {checked_add(a.v, b.v)}; }
    friend CInt operator-(CInt a, CInt b) { return {checked_sub(a.v, b.v)}; }
    friend CInt operator*(CInt a, CInt b) { return {checked_mul(a.v, b.v)}; }
    friend CInt operator-(CInt a) { return {checked_sub(0, a.v)}; }
};

inline CInt ci(long long x) { return CInt{x}; }

}  // namespace detail

/// K_s v (K_{n_1} u K_{n_2} u ... u K_{n_t}). Canonical layout: the K_s block
/// takes labels 0..s-1, then the cliques in the given order.
inline Graph build_general(const PartitionSpec& spec) {
    detail::require(spec.s >= 1, "build_general: s must be >= 1");
    detail::require(!spec.parts.empty(), "build_general: at least one clique part");
    int total = spec.s;
    int prev = kMaxOrder + 1;
    for (int p : spec.parts) {
        detail::require(p >= 1, "build_general: clique orders must be positive");
        detail::require(p <= prev, "build_general: parts must be sorted descending");
        prev = p;
        total += p;
    }
    detail::require(total <= kMaxOrder,
                    "build_general: order " + std::to_string(total) + " exceeds maximum");
    Graph right = complete(spec.parts.front());
    for (std::size_t i = 1; i < spec.parts.size(); ++i)
        right = disjoint_union(right, complete(spec.parts[i]));
    return join(complete(spec.s), right);
}

/// The three canonical quotient blocks shared by every family built here:
/// [0,s) the cut clique, [s,s+big) the large clique, [s+big,n) the rest.
inline std::vector<VertexSet> three_block_partition(int s, int big, int n) {
    return {VertexSet::range(0, s), VertexSet::range(s, s + big), VertexSet::range(s + big, n)};
}

/// G* = K_delta v (K_{n-delta(delta-1)-1} u (delta(delta-2)+1) K_1), the
/// family named by the spectral threshold.
inline Graph build_extremal(int delta, int n) {
    detail::require(delta >= 3, "build_extremal: delta must be >= 3");
    int big = n - delta * (delta - 1) - 1;
    int ones = delta * (delta - 2) + 1;
    detail::require(big >= 1, "build_extremal: n must be >= delta(delta-1)+2");
    detail::require(n <= kMaxOrder, "build_extremal: order exceeds maximum");
    PartitionSpec spec;
    spec.s = delta;
    spec.parts.push_back(big);
    spec.parts.insert(spec.parts.end(), static_cast<std::size_t>(ones), 1);
    return build_general(spec);
}

inline std::vector<VertexSet> extremal_blocks(int delta, int n) {
    return three_block_partition(delta, n - delta * (delta - 1) - 1, n);
}

/// G2 = K_s v (K_{n-(delta-1)s-1} u ((delta-2)s+1) K_1). Structural bounds
/// only: the Case-1 range s >= delta+1 belongs to the harness sweeps, not
/// here, so the s = delta coincidence with G* stays constructible.
inline Graph build_case1(int s, int delta, int n) {
    detail::require(delta >= 3, "build_case1: delta must be >= 3");
    detail::require(s >= 1, "build_case1: s must be >= 1");
    int big = n - (delta - 1) * s - 1;
    int ones = (delta - 2) * s + 1;
    detail::require(big >= 1, "build_case1: n must be >= (delta-1)s+2");
    detail::require(n <= kMaxOrder, "build_case1: order exceeds maximum");
    PartitionSpec spec;
    spec.s = s;
    spec.parts.push_back(big);
    spec.parts.insert(spec.parts.end(), static_cast<std::size_t>(ones), 1);
    return build_general(spec);
}

inline std::vector<VertexSet> case1_blocks(int s, int delta, int n) {
    return three_block_partition(s, n - (delta - 1) * s - 1, n);
}

/// G3 = K_s v (K_{n-s-((delta-2)s+1)(delta+1-s)} u ((delta-2)s+1) K_{delta+1-s}),
/// the Case-3 family (1 <= s <= delta-1). The n bound keeps the large clique
/// at least as big as the small ones.
inline Graph build_case3(int s, int delta, int n) {
    detail::require(delta >= 3, "build_case3: delta must be >= 3");
    detail::require(s >= 1 && s <= delta - 1, "build_case3: s must satisfy 1 <= s <= delta-1");
    int copies_count = (delta - 2) * s + 1;
    int small = delta + 1 - s;
    int big = n - s - copies_count * small;
    detail::require(n >= ((delta - 2) * s + 2) * (delta + 1 - s) + s,
                    "build_case3: n must be >= ((delta-2)s+2)(delta+1-s)+s");
    detail::require(n <= kMaxOrder, "build_case3: order exceeds maximum");
    PartitionSpec spec;
    spec.s = s;
    spec.parts.push_back(big);
    spec.parts.insert(spec.parts.end(), static_cast<std::size_t>(copies_count), small);
    return build_general(spec);
}

inline std::vector<VertexSet> case3_blocks(int s, int delta, int n) {
    int big = n - s - ((delta - 2) * s + 1) * (delta + 1 - s);
    return three_block_partition(s, big, n);
}

/// Characteristic polynomial of B*, exact integers:
/// x^3 + (-n+d(d-2)+3)x^2 + (-n-d^2(d-2)+d(d-3)+2)x
///     + (d-2)d^2 n + dn - d^3(d-1)(d-2) - d^2(3d-5) - 2d.
inline IntCubic phi_bstar(int delta, int n) {
    detail::require(delta >= 3, "phi_bstar: delta must be >= 3");
    using detail::ci;
    const auto d = ci(delta), N = ci(n);
    const auto c2 = -N + d * (d - ci(2)) + ci(3);
    const auto c1 = -N - d * d * (d - ci(2)) + d * (d - ci(3)) + ci(2);
    const auto c0 = (d - ci(2)) * d * d * N + d * N - d * d * d * (d - ci(1)) * (d - ci(2)) -
                    d * d * (ci(3) * d - ci(5)) - ci(2) * d;
    return IntCubic{c2.v, c1.v, c0.v};
}

/// Characteristic polynomial of B2(s), exact integers:
/// x^3 + (-n+(d-2)s+3)x^2 + (-n-(d-2)s^2+(d-3)s+2)x
///     + (d-2)s^2 n + sn - (d-1)(d-2)s^3 - (3d-5)s^2 - 2s.
/// Replacing s by delta reproduces phi_bstar coefficientwise.
inline IntCubic phi_b2(int s, int delta, int n) {
    detail::require(delta >= 3, "phi_b2: delta must be >= 3");
    detail::require(s >= 1, "phi_b2: s must be >= 1");
    using detail::ci;
    const auto d = ci(delta), S = ci(s), N = ci(n);
    const auto c2 = -N + (d - ci(2)) * S + ci(3);
    const auto c1 = -N - (d - ci(2)) * S * S + (d - ci(3)) * S + ci(2);
    const auto c0 = (d - ci(2)) * S * S * N + S * N - (d - ci(1)) * (d - ci(2)) * S * S * S -
                    (ci(3) * d - ci(5)) * S * S - ci(2) * S;
    return IntCubic{c2.v, c1.v, c0.v};
}

/// Characteristic polynomial of B3(s), exact integers (the Case-3 display
/// with its quintic-in-s constant term).
inline IntCubic phi_b3(int s, int delta, int n) {
    detail::require(delta >= 3, "phi_b3: delta must be >= 3");
    detail::require(s >= 1, "phi_b3: s must be >= 1");
    using detail::ci;
    const auto d = ci(delta), S = ci(s), N = ci(n);
    const auto d2 = d * d, d3 = d * d * d, d4 = d * d * d * d;
    const auto s2 = S * S, s3 = S * S * S, s4 = s3 * S, s5 = s4 * S;
    const auto c2 = (-d + ci(2)) * s2 + (d2 - d - ci(2)) * S - N + ci(3);
    const auto c1 = (d2 - ci(3) * d + ci(2)) * s2 - (N + d3 - ci(2) * d2 - ci(2) * d + ci(1)) * S +
                    d * N - N - d2 - ci(2) * d + ci(2);
    const auto c0 = ((ci(2) - d) * s3 + (d2 - d - ci(3)) * s2 + d * S + d) * N -
                    (d - ci(2)) * (d - ci(2)) * s5 +
                    (ci(2) * d3 - ci(6) * d2 - d + ci(10)) * s4 -
                    (d4 - ci(2) * d3 - ci(6) * d2 + ci(7) * d + ci(10)) * s3 -
                    (ci(2) * d3 - d2 - ci(5) * d - ci(5)) * s2 - (d3 - d) * S - d2 - ci(2) * d;
    return IntCubic{c2.v, c1.v, c0.v};
}

/// Quadratic a x^2 + b x + c with exact integer coefficients; houses the
/// auxiliary comparison functions g and h.
struct IntQuadratic {
    long long a = 0;
    long long b = 0;
    long long c = 0;

    double eval(double x) const {
        return (static_cast<double>(a) * x + static_cast<double>(b)) * x +
               static_cast<double>(c);
    }

    friend bool operator==(const IntQuadratic&, const IntQuadratic&) = default;
};

/// g with (s-delta) g(x) = phi_B2(x) - phi_B*(x):
/// g(x) = (d-2)x^2 + (-(d-2)s-d^2+3d-3)x + (d-2)(s+d)n + n
///        - (d-1)(d-2)(s^2+ds+d^2) - (3d-5)(s+d) - 2.
inline IntQuadratic g_quadratic(int s, int delta, int n) {
    using detail::ci;
    const auto d = ci(delta), S = ci(s), N = ci(n);
    const auto a = d - ci(2);
    const auto b = -(d - ci(2)) * S - d * d + ci(3) * d - ci(3);
    const auto c = (d - ci(2)) * (S + d) * N + N -
                   (d - ci(1)) * (d - ci(2)) * (S * S + d * S + d * d) -
                   (ci(3) * d - ci(5)) * (S + d) - ci(2);
    return IntQuadratic{a.v, b.v, c.v};
}

/// h with (delta-s) h(x) = phi_B3(x) - phi_B*(x):
/// h(x) = (d-2)(s-1)x^2 + (n-d^2 s+3ds-2s+d^2-4d+1)x + (d^2-4d+4)s^4
///        - (d^3-2d^2-5d+10)s^3 + (dn-2n-d^2-3d+10)s^2
///        + (-dn+3n+d^3-4d^2+5d-5)s - d^2 n + 2dn + d^4 - 3d^3 + 5d^2 - 6d.
inline IntQuadratic h_quadratic(int s, int delta, int n) {
    using detail::ci;
    const auto d = ci(delta), S = ci(s), N = ci(n);
    const auto d2 = d * d, d3 = d * d * d, d4 = d * d * d * d;
    const auto s2 = S * S, s3 = S * S * S, s4 = s3 * S;
    const auto a = (d - ci(2)) * (S - ci(1));
    const auto b = N - d2 * S + ci(3) * d * S - ci(2) * S + d2 - ci(4) * d + ci(1);
    const auto c = (d2 - ci(4) * d + ci(4)) * s4 - (d3 - ci(2) * d2 - ci(5) * d + ci(10)) * s3 +
                   (d * N - ci(2) * N - d2 - ci(3) * d + ci(10)) * s2 +
                   (-d * N + ci(3) * N + d3 - ci(4) * d2 + ci(5) * d - ci(5)) * S - d2 * N +
                   ci(2) * d * N + d4 - ci(3) * d3 + ci(5) * d2 - ci(6) * d;
    return IntQuadratic{a.v, b.v, c.v};
}

inline double eval_g(int s, int delta, int n, double x) {
    return g_quadratic(s, delta, n).eval(x);
}

inline double eval_h(int s, int delta, int n, double x) {
    return h_quadratic(s, delta, n).eval(x);
}

/// Displayed derivative of phi_B3; identical to 3x^2 + 2 c2 x + c1 of phi_b3.
inline double eval_phi_b3_prime(int s, int delta, int n, double x) {
    IntCubic p = phi_b3(s, delta, n);
    return (3 * x + 2 * static_cast<double>(p.c2)) * x + static_cast<double>(p.c1);
}

}  // namespace spf

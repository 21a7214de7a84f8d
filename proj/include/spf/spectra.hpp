#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "spf/errors.hpp"
#include "spf/graph.hpp"

namespace spf {

namespace detail {

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in polynomial arithmetic");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in polynomial arithmetic");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in polynomial arithmetic");
    return r;
}

}  // namespace detail

/// Monic cubic x^3 + c2 x^2 + c1 x + c0 over the reals.
struct CubicPoly {
    double c2 = 0;
    double c1 = 0;
    double c0 = 0;

    double eval(double x) const { return ((x + c2) * x + c1) * x + c0; }
    double deriv(double x) const { return (3 * x + 2 * c2) * x + c1; }

    friend bool operator==(const CubicPoly&, const CubicPoly&) = default;
};

/// Monic cubic with exact 64-bit integer coefficients; the zero-tolerance
/// currency of the polynomial-identity checks.
struct IntCubic {
    long long c2 = 0;
    long long c1 = 0;
    long long c0 = 0;

    CubicPoly to_poly() const {
        return CubicPoly{static_cast<double>(c2), static_cast<double>(c1),
                         static_cast<double>(c0)};
    }

    friend bool operator==(const IntCubic&, const IntCubic&) = default;
};

/// Characteristic polynomial det(xI - M) of an integer 3x3 matrix by
/// cofactor expansion, exact in 64-bit integers.
inline IntCubic char_poly_cubic(const std::array<std::array<long long, 3>, 3>& m) {
    using detail::checked_add;
    using detail::checked_mul;
    using detail::checked_sub;
    long long trace = checked_add(checked_add(m[0][0], m[1][1]), m[2][2]);
    long long minors = 0;
    minors = checked_add(minors, checked_sub(checked_mul(m[1][1], m[2][2]),
                                             checked_mul(m[1][2], m[2][1])));
    minors = checked_add(minors, checked_sub(checked_mul(m[0][0], m[2][2]),
                                             checked_mul(m[0][2], m[2][0])));
    minors = checked_add(minors, checked_sub(checked_mul(m[0][0], m[1][1]),
                                             checked_mul(m[0][1], m[1][0])));
    long long det = 0;
    det = checked_add(det, checked_mul(m[0][0], checked_sub(checked_mul(m[1][1], m[2][2]),
                                                            checked_mul(m[1][2], m[2][1]))));
    det = checked_sub(det, checked_mul(m[0][1], checked_sub(checked_mul(m[1][0], m[2][2]),
                                                            checked_mul(m[1][2], m[2][0]))));
    det = checked_add(det, checked_mul(m[0][2], checked_sub(checked_mul(m[1][0], m[2][1]),
                                                            checked_mul(m[1][1], m[2][0]))));
    return IntCubic{-trace, minors, -det};
}

/// Outcome of a spectral-radius computation: the Perron-root estimate, the
/// final residual ||A x - value x||_inf, and the iteration count.
struct SpectralResult {
    double value = 0;
    double residual = 0;
    long iterations = 0;
};

namespace detail {

inline constexpr long kPowerIterationCap = 1'000'000;

/// Power iteration restricted to one connected component. Iterates on A+I
/// (same eigenvectors; a plain adjacency iteration never converges on
/// bipartite components where -rho is also an eigenvalue) with the all-ones
/// start, which is never orthogonal to the Perron vector. The residual is
/// measured on A itself.
inline SpectralResult power_iteration_component(const Graph& g, std::uint64_t comp, double tol) {
    std::array<double, kMaxOrder> x{};
    std::array<double, kMaxOrder> ax{};
    const auto vertices = VertexSet::from_mask(comp).to_vector();
    const double inv_norm0 = 1.0 / std::sqrt(static_cast<double>(vertices.size()));
    for (int v : vertices) x[static_cast<std::size_t>(v)] = inv_norm0;

    double lambda = 0;
    double residual = std::numeric_limits<double>::infinity();
    for (long iter = 1; iter <= kPowerIterationCap; ++iter) {
        for (int v : vertices) {
            double sum = 0;
            for (std::uint64_t m = g.adjacency(v) & comp; m != 0; m &= m - 1)
                sum += x[static_cast<std::size_t>(std::countr_zero(m))];
            ax[static_cast<std::size_t>(v)] = sum;
        }
        lambda = 0;
        for (int v : vertices)
            lambda += x[static_cast<std::size_t>(v)] * ax[static_cast<std::size_t>(v)];
        residual = 0;
        for (int v : vertices)
            residual = std::max(residual, std::abs(ax[static_cast<std::size_t>(v)] -
                                                   lambda * x[static_cast<std::size_t>(v)]));
        if (residual <= tol) return SpectralResult{lambda, residual, iter};

        double norm_sq = 0;
        for (int v : vertices) {
            double shifted = ax[static_cast<std::size_t>(v)] + x[static_cast<std::size_t>(v)];
            x[static_cast<std::size_t>(v)] = shifted;
            norm_sq += shifted * shifted;
        }
        double inv_norm = 1.0 / std::sqrt(norm_sq);
        for (int v : vertices) x[static_cast<std::size_t>(v)] *= inv_norm;
    }
    throw convergence_error("spectral_radius: residual " + std::to_string(residual) +
                                " did not reach tolerance after " +
                                std::to_string(kPowerIterationCap) + " iterations",
                            lambda, residual, kPowerIterationCap);
}

}  // namespace detail

/// Adjacency spectral radius rho(G). Deterministic: fixed all-ones start per
/// component, maximum over components. Edgeless graphs give 0.
inline SpectralResult spectral_radius(const Graph& g, double tol = 1e-10) {
    if (!(tol > 0)) throw std::invalid_argument("spectral_radius: tol must be > 0");
    SpectralResult best{0.0, 0.0, 0};
    for (const VertexSet& comp : components(g)) {
        if (comp.count() == 1) {
            // isolated vertex: eigenvalue 0 exactly
            continue;
        }
        SpectralResult r = detail::power_iteration_component(g, comp.mask(), tol);
        best.iterations += r.iterations;
        if (r.value > best.value) {
            best.value = r.value;
            best.residual = r.residual;
        }
    }
    return best;
}

/// A vertex partition of a host graph together with its quotient matrix
/// b_ij = (sum of |adj(u) ∩ V_j| over u in V_i) / |V_i| and the equitability
/// flag. Equitability is decided on exact integer counts.
struct QuotientDecomposition {
    std::vector<VertexSet> blocks;
    std::vector<std::vector<double>> matrix;
    bool equitable = false;
};

inline QuotientDecomposition quotient(const Graph& g, const std::vector<VertexSet>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("quotient: empty partition");
    std::uint64_t covered = 0;
    for (const VertexSet& b : blocks) {
        if (b.empty()) throw std::invalid_argument("quotient: empty block");
        if ((b.mask() & ~g.vertex_mask()) != 0)
            throw std::invalid_argument("quotient: block not contained in V(G)");
        if ((b.mask() & covered) != 0)
            throw std::invalid_argument("quotient: blocks overlap");
        covered |= b.mask();
    }
    if (covered != g.vertex_mask())
        throw std::invalid_argument("quotient: blocks do not cover V(G)");

    const std::size_t r = blocks.size();
    QuotientDecomposition out;
    out.blocks = blocks;
    out.matrix.assign(r, std::vector<double>(r, 0.0));
    out.equitable = true;
    for (std::size_t i = 0; i < r; ++i) {
        const auto rows = blocks[i].to_vector();
        for (std::size_t j = 0; j < r; ++j) {
            long long total = 0;
            int first_count = -1;
            bool constant = true;
            for (int u : rows) {
                int c = std::popcount(g.adjacency(u) & blocks[j].mask());
                total += c;
                if (first_count < 0)
                    first_count = c;
                else if (c != first_count)
                    constant = false;
            }
            out.matrix[i][j] = static_cast<double>(total) / static_cast<double>(rows.size());
            if (!constant) out.equitable = false;
        }
    }
    return out;
}

/// Integer view of an equitable quotient matrix (3 blocks). Throws unless the
/// decomposition is equitable with exact integer entries.
inline std::array<std::array<long long, 3>, 3> quotient_matrix_int3(
    const QuotientDecomposition& q) {
    if (q.blocks.size() != 3)
        throw std::invalid_argument("quotient_matrix_int3: expected exactly 3 blocks");
    if (!q.equitable)
        throw std::invalid_argument("quotient_matrix_int3: partition is not equitable");
    std::array<std::array<long long, 3>, 3> m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double e = q.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            long long rounded = std::llround(e);
            if (e != static_cast<double>(rounded))
                throw std::invalid_argument("quotient_matrix_int3: non-integer entry");
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rounded;
        }
    return m;
}

namespace detail {

/// Largest real root of a monic cubic by Newton descent from the Cauchy
/// upper bound. On [r1, inf) the cubic is increasing and convex, so the
/// iteration decreases monotonically to r1.
inline double newton_largest_root(const CubicPoly& p) {
    double x = std::max(1.0, 1.0 + std::abs(p.c2) + std::abs(p.c1) + std::abs(p.c0));
    for (int i = 0; i < 200; ++i) {
        double f = p.eval(x);
        double fp = p.deriv(x);
        if (fp <= 0) break;
        double step = f / fp;
        double next = x - step;
        if (!(next < x)) break;  // no further progress
        x = next;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

}  // namespace detail

/// Largest real root only (always exists for a monic cubic).
inline double largest_cubic_root(const CubicPoly& p) { return detail::newton_largest_root(p); }

/// All three real roots, sorted descending. Detects a complex pair via the
/// cubic discriminant and rejects it with domain_error: the quotient-matrix
/// cubics handled here always have real spectra.
inline std::array<double, 3> cubic_roots(const CubicPoly& p) {
    const double t1 = 18.0 * p.c2 * p.c1 * p.c0;
    const double t2 = -4.0 * p.c2 * p.c2 * p.c2 * p.c0;
    const double t3 = p.c2 * p.c2 * p.c1 * p.c1;
    const double t4 = -4.0 * p.c1 * p.c1 * p.c1;
    const double t5 = -27.0 * p.c0 * p.c0;
    const double disc = t1 + t2 + t3 + t4 + t5;
    const double noise = 1e-12 * std::max({1.0, std::abs(t1), std::abs(t2), std::abs(t3),
                                           std::abs(t4), std::abs(t5)});
    if (disc < -noise)
        throw std::domain_error("cubic_roots: complex root pair (discriminant " +
                                std::to_string(disc) + ")");

    const double r1 = detail::newton_largest_root(p);
    // deflate to x^2 + bx + c, then polish on the original cubic
    const double b = p.c2 + r1;
    const double c = p.c1 + r1 * b;
    double d = b * b - 4 * c;
    if (d < 0) d = 0;  // repeated-root noise
    const double sq = std::sqrt(d);
    double r2 = (-b + sq) / 2;
    double r3 = (-b - sq) / 2;
    for (double* r : {&r2, &r3}) {
        for (int i = 0; i < 3; ++i) {
            double fp = p.deriv(*r);
            if (std::abs(fp) < 1e-12) break;
            *r -= p.eval(*r) / fp;
        }
    }
    std::array<double, 3> roots{r1, r2, r3};
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

inline std::array<double, 3> cubic_roots(const IntCubic& p) { return cubic_roots(p.to_poly()); }
inline double largest_cubic_root(const IntCubic& p) { return largest_cubic_root(p.to_poly()); }

/// Largest real eigenvalue of a small (r <= 8) real matrix whose spectrum is
/// real under a positive diagonal similarity (quotient matrices of equitable
/// partitions qualify). Shifted power iteration: with c above the Gershgorin
/// bound every eigenvalue of M + cI is positive, so the largest dominates.
inline double largest_eigenvalue_small(const std::vector<std::vector<double>>& m) {
    const std::size_t r = m.size();
    if (r == 0) throw std::invalid_argument("largest_eigenvalue_small: empty matrix");
    if (r > 8)
        throw size_limit_error("largest_eigenvalue_small: supported sizes are r <= 8, got r = " +
                               std::to_string(r));
    for (const auto& row : m)
        if (row.size() != r)
            throw std::invalid_argument("largest_eigenvalue_small: matrix not square");

    double bound = 0;
    for (const auto& row : m) {
        double s = 0;
        for (double e : row) s += std::abs(e);
        bound = std::max(bound, s);
    }
    const double shift = bound + 1.0;
    const double tol = 1e-13 * std::max(1.0, bound);

    std::vector<double> x(r, 1.0 / std::sqrt(static_cast<double>(r)));
    std::vector<double> mx(r, 0.0);
    double lambda = 0;
    double residual = std::numeric_limits<double>::infinity();
    for (long iter = 0; iter < detail::kPowerIterationCap; ++iter) {
        for (std::size_t i = 0; i < r; ++i) {
            double s = 0;
            for (std::size_t j = 0; j < r; ++j) s += m[i][j] * x[j];
            mx[i] = s;
        }
        lambda = 0;
        for (std::size_t i = 0; i < r; ++i) lambda += x[i] * mx[i];
        residual = 0;
        for (std::size_t i = 0; i < r; ++i)
            residual = std::max(residual, std::abs(mx[i] - lambda * x[i]));
        if (residual <= tol) return lambda;

        double norm_sq = 0;
        for (std::size_t i = 0; i < r; ++i) {
            x[i] = mx[i] + shift * x[i];
            norm_sq += x[i] * x[i];
        }
        if (norm_sq == 0)
            throw convergence_error("largest_eigenvalue_small: iterate vanished", lambda,
                                    residual, iter);
        double inv = 1.0 / std::sqrt(norm_sq);
        for (double& e : x) e *= inv;
    }
    throw convergence_error("largest_eigenvalue_small: no convergence", lambda, residual,
                            detail::kPowerIterationCap);
}

}  // namespace spf

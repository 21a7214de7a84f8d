#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spf/errors.hpp"

namespace spf {

/// Hard cap on graph order. Adjacency rows are single 64-bit words, so label
/// 62 is the largest usable vertex and every desk-scale workload here
/// (n >= 2*delta^2 with delta in 3..5 gives n <= 57) fits comfortably.
inline constexpr int kMaxOrder = 63;

/// Set of vertices of a host graph, stored as a bitmask over labels 0..62.
/// Plain value type; operations that take a VertexSet validate it against
/// their host graph's order.
class VertexSet {
public:
    constexpr VertexSet() = default;

    static constexpr VertexSet from_mask(std::uint64_t mask) {
        VertexSet s;
        s.bits_ = mask;
        return s;
    }

    static VertexSet of(std::initializer_list<int> vertices) {
        VertexSet s;
        for (int v : vertices) s.add(v);
        return s;
    }

    /// Half-open label range [lo, hi).
    static VertexSet range(int lo, int hi) {
        if (lo < 0 || hi < lo || hi > kMaxOrder + 1)
            throw std::invalid_argument("VertexSet::range: bad bounds");
        VertexSet s;
        for (int v = lo; v < hi; ++v) s.add(v);
        return s;
    }

    void add(int v) {
        if (v < 0 || v >= kMaxOrder + 1)
            throw std::invalid_argument("VertexSet: vertex label out of range");
        bits_ |= std::uint64_t{1} << v;
    }

    void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    bool contains(int v) const {
        return v >= 0 && v <= kMaxOrder && (bits_ >> v & 1u);
    }

    int count() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t mask() const { return bits_; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t m = bits_; m != 0; m &= m - 1)
            out.push_back(std::countr_zero(m));
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on dense labels 0..n-1 with one 64-bit
/// adjacency word per vertex. Invariants (enforced at construction): order in
/// [1, 63], adjacency symmetric, no loops. All "mutating" operations are free
/// functions returning new graphs, so values are safe to share across threads.
class Graph {
public:
    /// Edgeless graph on n vertices.
    explicit Graph(int n) : n_(check_order(n)) { adj_.fill(0); }

    /// Graph on n vertices with the given edges. Edges may be listed in any
    /// order but must be loop-free, in range, and free of duplicates.
    Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge_checked(u, v);
    }

    Graph(int n, std::initializer_list<std::pair<int, int>> edges)
        : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

    int order() const { return n_; }

    /// Neighbor bitset of v.
    std::uint64_t adjacency(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    int degree(int v) const { return std::popcount(adjacency(v)); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[static_cast<std::size_t>(v)]);
        return twice / 2;
    }

    /// Edges in canonical (u,v)-lexicographic order with u < v.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        for (int u = 0; u < n_; ++u) {
            std::uint64_t higher = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
            for (std::uint64_t m = higher; m != 0; m &= m - 1)
                out.emplace_back(u, std::countr_zero(m));
        }
        return out;
    }

    /// Bitmask with one bit per vertex.
    std::uint64_t vertex_mask() const { return (std::uint64_t{1} << n_) - 1; }

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
    }

private:
    static int check_order(int n) {
        if (n < 1) throw std::invalid_argument("Graph: order must be >= 1");
        if (n > kMaxOrder)
            throw std::invalid_argument("Graph: order " + std::to_string(n) +
                                        " exceeds maximum " + std::to_string(kMaxOrder));
        return n;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                        " out of range for order " + std::to_string(n_));
    }

    void add_edge_checked(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: loop edge rejected");
        if (has_edge(u, v)) throw std::invalid_argument("Graph: duplicate edge rejected");
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    int n_;
    std::array<std::uint64_t, kMaxOrder> adj_;
};

/// K_n, the complete graph of order n.
inline Graph complete(int n) {
    Graph g(n);
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, es);
}

/// Disjoint union; labels of h are shifted up by g.order().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > kMaxOrder)
        throw std::invalid_argument("disjoint_union: combined order exceeds " +
                                    std::to_string(kMaxOrder));
    auto es = g.edges();
    for (auto [u, v] : h.edges()) es.emplace_back(u + g.order(), v + g.order());
    return Graph(n, es);
}

/// Disjoint union of t copies of g.
inline Graph copies(int t, const Graph& g) {
    if (t < 1) throw std::invalid_argument("copies: t must be >= 1");
    Graph out = g;
    for (int i = 1; i < t; ++i) out = disjoint_union(out, g);
    return out;
}

/// Join g v h: disjoint union plus every edge between the two vertex sets.
/// The left block keeps its labels, so layouts are reproducible.
inline Graph join(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > kMaxOrder)
        throw std::invalid_argument("join: combined order exceeds " + std::to_string(kMaxOrder));
    auto es = g.edges();
    for (auto [u, v] : h.edges()) es.emplace_back(u + g.order(), v + g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) es.emplace_back(u, v + g.order());
    return Graph(n, es);
}

/// Induced subgraph on V(g) \ s, surviving vertices relabeled densely in
/// increasing order. s must be a proper subset of V(g): the empty graph is
/// not representable.
inline Graph delete_vertices(const Graph& g, VertexSet s) {
    if ((s.mask() & ~g.vertex_mask()) != 0)
        throw std::invalid_argument("delete_vertices: set not contained in V(G)");
    if (s.mask() == g.vertex_mask())
        throw std::invalid_argument("delete_vertices: deleting every vertex is not allowed");
    std::array<int, kMaxOrder> relabel{};
    int kept = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!s.contains(v)) relabel[static_cast<std::size_t>(v)] = kept++;
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        if (!s.contains(u) && !s.contains(v))
            es.emplace_back(relabel[static_cast<std::size_t>(u)],
                            relabel[static_cast<std::size_t>(v)]);
    return Graph(kept, es);
}

/// Number of connected components of g - removed (components of g itself
/// when removed is empty). Returns 0 when every vertex is removed.
inline int component_count(const Graph& g, VertexSet removed) {
    if ((removed.mask() & ~g.vertex_mask()) != 0)
        throw std::invalid_argument("component_count: set not contained in V(G)");
    std::uint64_t rem = g.vertex_mask() & ~removed.mask();
    int count = 0;
    while (rem != 0) {
        std::uint64_t comp = rem & (~rem + 1);
        std::uint64_t frontier = comp;
        while (frontier != 0) {
            std::uint64_t grown = comp;
            for (std::uint64_t m = frontier; m != 0; m &= m - 1)
                grown |= g.adjacency(std::countr_zero(m)) & rem;
            frontier = grown & ~comp;
            comp = grown;
        }
        rem &= ~comp;
        ++count;
    }
    return count;
}

inline int component_count(const Graph& g) { return component_count(g, VertexSet{}); }

/// Vertex sets of the connected components, in order of smallest label.
inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::uint64_t rem = g.vertex_mask();
    while (rem != 0) {
        std::uint64_t comp = rem & (~rem + 1);
        std::uint64_t frontier = comp;
        while (frontier != 0) {
            std::uint64_t grown = comp;
            for (std::uint64_t m = frontier; m != 0; m &= m - 1)
                grown |= g.adjacency(std::countr_zero(m)) & rem;
            frontier = grown & ~comp;
            comp = grown;
        }
        out.push_back(VertexSet::from_mask(comp));
        rem &= ~comp;
    }
    return out;
}

inline std::vector<int> degrees(const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    return d;
}

inline int min_degree(const Graph& g) {
    int best = kMaxOrder + 1;
    for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

/// Image of g under the permutation perm (vertex v of g becomes perm[v]).
inline Graph relabel(const Graph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (int v : perm) {
        if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("relabel: not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        es.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph(g.order(), es);
}

}  // namespace spf

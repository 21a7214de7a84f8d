#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spf/errors.hpp"
#include "spf/graph.hpp"

namespace spf {

enum class SpfMethod { criterion, oracle };

/// Even-size demand set X: the vertices required to get odd degree in a
/// parity factor. Ops validate |X| parity against their host graph.
struct ParityDemand {
    VertexSet vertices;
};

/// Outcome of a strong-parity-factor decision. When has_spf is false the
/// witness certifies it: a violating S for the criterion (with the Lemma 2.1
/// numbers in detail), a failing demand set X for the oracle.
struct SpfVerdict {
    struct CriterionDetail {
        int components = 0;  // c(G - S)
        int degree_sum = 0;  // sum of d_G(v) over v in S
        int set_size = 0;    // |S|
    };

    bool has_spf = false;
    SpfMethod method = SpfMethod::criterion;
    std::optional<VertexSet> witness;
    std::optional<CriterionDetail> detail;
};

/// Spanning subgraph with prescribed degree parities: the edge set plus the
/// degree vector it induces.
struct FactorWitness {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> degrees;
};

inline constexpr int kCriterionOrderBudget = 24;  // full 2^n subset scan
inline constexpr int kOracleOrderBudget = 12;
inline constexpr int kFactorEdgeBudget = 32;

/// Definitional re-check of a factor witness: spans V(G), uses only edges of
/// G, min degree >= 1, degrees odd exactly on X. Independent of the search.
inline bool validate_factor(const Graph& g, ParityDemand demand, const FactorWitness& f) {
    if (static_cast<int>(f.degrees.size()) != g.order()) return false;
    std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
    std::vector<std::pair<int, int>> seen;
    for (auto [u, v] : f.edges) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v) return false;
        if (!g.has_edge(u, v)) return false;
        auto key = std::minmax(u, v);
        for (auto s : seen)
            if (s.first == key.first && s.second == key.second) return false;
        seen.emplace_back(key.first, key.second);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    for (int v = 0; v < g.order(); ++v) {
        int d = deg[static_cast<std::size_t>(v)];
        if (d != f.degrees[static_cast<std::size_t>(v)]) return false;
        if (d < 1) return false;
        bool want_odd = demand.vertices.contains(v);
        if ((d % 2 == 1) != want_odd) return false;
    }
    return true;
}

namespace detail {

struct FactorSearch {
    const Graph* g;
    std::vector<std::pair<int, int>> edge_list;          // canonical lex order
    std::vector<std::array<int, 2>> closers;             // vertices closing at index i
    std::vector<int> target_odd;                         // demand parity per vertex
    std::vector<int> deg;
    std::uint64_t chosen = 0;

    bool dfs(std::size_t idx) {
        if (idx == edge_list.size()) return true;
        auto [u, v] = edge_list[idx];
        // include-first keeps witnesses canonical
        for (int take : {1, 0}) {
            if (take) {
                ++deg[static_cast<std::size_t>(u)];
                ++deg[static_cast<std::size_t>(v)];
                chosen |= std::uint64_t{1} << idx;
            }
            bool ok = true;
            for (int w : closers[idx]) {
                if (w < 0) break;
                int d = deg[static_cast<std::size_t>(w)];
                // a closed vertex must already meet its parity and delta(F) >= 1
                if (d < 1 || (d % 2) != target_odd[static_cast<std::size_t>(w)]) {
                    ok = false;
                    break;
                }
            }
            if (ok && dfs(idx + 1)) return true;
            if (take) {
                --deg[static_cast<std::size_t>(u)];
                --deg[static_cast<std::size_t>(v)];
                chosen &= ~(std::uint64_t{1} << idx);
            }
        }
        return false;
    }
};

}  // namespace detail

/// Search for a spanning subgraph F with delta(F) >= 1 and degrees odd
/// exactly on X. Depth-first over edges in lexicographic order, include-edge
/// branch first, backtracking as soon as a vertex with all incident edges
/// decided misses its parity or is isolated. Exhaustive, so nullopt is a
/// proof of nonexistence.
inline std::optional<FactorWitness> find_parity_factor(const Graph& g, ParityDemand demand) {
    if ((demand.vertices.mask() & ~g.vertex_mask()) != 0)
        throw std::invalid_argument("find_parity_factor: X not contained in V(G)");
    if (demand.vertices.count() % 2 != 0)
        throw std::invalid_argument(
            "find_parity_factor: |X| must be even (odd degree sums are impossible)");
    if (g.edge_count() > kFactorEdgeBudget)
        throw size_limit_error("find_parity_factor: edge count " +
                               std::to_string(g.edge_count()) + " exceeds search budget " +
                               std::to_string(kFactorEdgeBudget));

    // a vertex with no incident edges can never reach degree 1
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return std::nullopt;

    detail::FactorSearch search;
    search.g = &g;
    search.edge_list = g.edges();
    search.deg.assign(static_cast<std::size_t>(g.order()), 0);
    search.target_odd.assign(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v)
        search.target_odd[static_cast<std::size_t>(v)] = demand.vertices.contains(v) ? 1 : 0;

    std::vector<int> last_edge(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < search.edge_list.size(); ++i) {
        last_edge[static_cast<std::size_t>(search.edge_list[i].first)] = static_cast<int>(i);
        last_edge[static_cast<std::size_t>(search.edge_list[i].second)] = static_cast<int>(i);
    }
    search.closers.assign(search.edge_list.size(), {-1, -1});
    for (int v = 0; v < g.order(); ++v) {
        int i = last_edge[static_cast<std::size_t>(v)];
        auto& pair = search.closers[static_cast<std::size_t>(i)];
        (pair[0] < 0 ? pair[0] : pair[1]) = v;
    }

    if (!search.dfs(0)) return std::nullopt;

    FactorWitness out;
    for (std::size_t i = 0; i < search.edge_list.size(); ++i)
        if (search.chosen >> i & 1u) out.edges.push_back(search.edge_list[i]);
    out.degrees = std::move(search.deg);
    return out;
}

/// Lemma-style criterion: G has strong parity factors iff
/// c(G - S) <= sum_{v in S} d_G(v) - 2|S| + 1 for every S (including the
/// empty set, which reduces to connectivity, and S = V(G), where c = 0).
/// Scans all 2^n subsets in ascending bitmask order.
inline SpfVerdict criterion_check(const Graph& g) {
    if (g.order() > kCriterionOrderBudget)
        throw size_limit_error("criterion_check: order " + std::to_string(g.order()) +
                               " exceeds the 2^n scan budget (n <= " +
                               std::to_string(kCriterionOrderBudget) +
                               "); use sampling instead");
    const auto deg = degrees(g);
    const std::uint64_t full = g.vertex_mask();
    for (std::uint64_t s = 0;; ++s) {
        int degree_sum = 0;
        for (std::uint64_t m = s; m != 0; m &= m - 1)
            degree_sum += deg[static_cast<std::size_t>(std::countr_zero(m))];
        const int size = std::popcount(s);
        const int comps = component_count(g, VertexSet::from_mask(s));
        if (comps > degree_sum - 2 * size + 1) {
            SpfVerdict v;
            v.has_spf = false;
            v.method = SpfMethod::criterion;
            v.witness = VertexSet::from_mask(s);
            v.detail = SpfVerdict::CriterionDetail{comps, degree_sum, size};
            return v;
        }
        if (s == full) break;
    }
    SpfVerdict v;
    v.has_spf = true;
    v.method = SpfMethod::criterion;
    return v;
}

/// Full-scan variant for the sharpness probe: never exits early and records
/// the S maximizing the violation margin c(G-S) - (sum d - 2|S| + 1).
struct CriterionScan {
    SpfVerdict verdict;
    VertexSet max_margin_set;
    int max_margin = 0;
    SpfVerdict::CriterionDetail max_margin_detail;
};

inline CriterionScan criterion_scan(const Graph& g) {
    if (g.order() > kCriterionOrderBudget)
        throw size_limit_error("criterion_scan: order " + std::to_string(g.order()) +
                               " exceeds the 2^n scan budget (n <= " +
                               std::to_string(kCriterionOrderBudget) + ")");
    const auto deg = degrees(g);
    const std::uint64_t full = g.vertex_mask();
    CriterionScan scan;
    scan.verdict.has_spf = true;
    scan.verdict.method = SpfMethod::criterion;
    bool first = true;
    for (std::uint64_t s = 0;; ++s) {
        int degree_sum = 0;
        for (std::uint64_t m = s; m != 0; m &= m - 1)
            degree_sum += deg[static_cast<std::size_t>(std::countr_zero(m))];
        const int size = std::popcount(s);
        const int comps = component_count(g, VertexSet::from_mask(s));
        const int margin = comps - (degree_sum - 2 * size + 1);
        if (first || margin > scan.max_margin) {
            first = false;
            scan.max_margin = margin;
            scan.max_margin_set = VertexSet::from_mask(s);
            scan.max_margin_detail = {comps, degree_sum, size};
        }
        if (margin > 0 && scan.verdict.has_spf) {
            scan.verdict.has_spf = false;
            scan.verdict.witness = VertexSet::from_mask(s);
            scan.verdict.detail = SpfVerdict::CriterionDetail{comps, degree_sum, size};
        }
        if (s == full) break;
    }
    return scan;
}

/// Definitional brute force: G has a strong parity factor iff every even-size
/// X admits a parity factor. X ranges over bitmasks in ascending order, so
/// the reported failing X is canonical.
inline SpfVerdict oracle_check(const Graph& g) {
    if (g.order() > kOracleOrderBudget)
        throw size_limit_error("oracle_check: order " + std::to_string(g.order()) +
                               " exceeds budget n <= " + std::to_string(kOracleOrderBudget));
    if (g.edge_count() > kFactorEdgeBudget)
        throw size_limit_error("oracle_check: edge count " + std::to_string(g.edge_count()) +
                               " exceeds budget " + std::to_string(kFactorEdgeBudget));
    const std::uint64_t full = g.vertex_mask();
    for (std::uint64_t x = 0;; ++x) {
        if (std::popcount(x) % 2 == 0) {
            if (!find_parity_factor(g, ParityDemand{VertexSet::from_mask(x)})) {
                SpfVerdict v;
                v.has_spf = false;
                v.method = SpfMethod::oracle;
                v.witness = VertexSet::from_mask(x);
                return v;
            }
        }
        if (x == full) break;
    }
    SpfVerdict v;
    v.has_spf = true;
    v.method = SpfMethod::oracle;
    return v;
}

/// CLI wire format: {"has_spf":bool,"method":str,"witness":[ints]|null,"detail":{...}}
inline std::string to_json(const SpfVerdict& v) {
    std::string out = "{\"has_spf\":";
    out += v.has_spf ? "true" : "false";
    out += ",\"method\":\"";
    out += v.method == SpfMethod::criterion ? "criterion" : "oracle";
    out += "\",\"witness\":";
    if (v.witness) {
        out += "[";
        bool comma = false;
        for (int x : v.witness->to_vector()) {
            if (comma) out += ",";
            out += std::to_string(x);
            comma = true;
        }
        out += "]";
    } else {
        out += "null";
    }
    out += ",\"detail\":";
    if (v.detail) {
        out += "{\"components\":" + std::to_string(v.detail->components) +
               ",\"degree_sum\":" + std::to_string(v.detail->degree_sum) +
               ",\"set_size\":" + std::to_string(v.detail->set_size) + "}";
    } else {
        out += "null";
    }
    out += "}";
    return out;
}

}  // namespace spf

#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spf/errors.hpp"
#include "spf/graph.hpp"

namespace spf {

enum class GraphFormat { edge_list, graph6 };

namespace detail {

struct Token {
    std::string_view text;
    int byte;  // 0-based offset within the line
};

inline std::vector<Token> split_tokens(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i)});
        i = j;
    }
    return out;
}

inline long parse_nonneg(const Token& tok, int line_no) {
    long value = 0;
    if (tok.text.empty()) throw parse_error("empty token", line_no, tok.byte);
    for (char c : tok.text) {
        if (c < '0' || c > '9')
            throw parse_error("expected a nonnegative integer, got '" + std::string(tok.text) +
                                  "'",
                              line_no, tok.byte);
        value = value * 10 + (c - '0');
        if (value > 1'000'000) throw parse_error("integer out of range", line_no, tok.byte);
    }
    return value;
}

}  // namespace detail

/// Parse the edge-list format: optional '#' comment lines, a header line
/// "n m", then exactly m lines "u v" with 0 <= u < v < n, no duplicates.
inline Graph parse_edge_list(std::string_view text) {
    int line_no = 0;
    std::size_t pos = 0;
    bool have_header = false;
    int n = 0;
    long m = 0;
    long seen_edges = 0;
    std::vector<std::pair<int, int>> edges;

    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        auto tokens = detail::split_tokens(line);
        if (tokens.empty()) continue;
        if (tokens[0].text.front() == '#') continue;

        if (!have_header) {
            if (tokens.size() != 2)
                throw parse_error("header must be 'n m'", line_no, tokens[0].byte);
            long n_raw = detail::parse_nonneg(tokens[0], line_no);
            m = detail::parse_nonneg(tokens[1], line_no);
            if (n_raw < 1 || n_raw > kMaxOrder)
                throw parse_error("order must be in [1, " + std::to_string(kMaxOrder) + "]",
                                  line_no, tokens[0].byte);
            n = static_cast<int>(n_raw);
            if (m > static_cast<long>(n) * (n - 1) / 2)
                throw parse_error("edge count exceeds simple-graph maximum", line_no,
                                  tokens[1].byte);
            have_header = true;
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }

        if (seen_edges >= m)
            throw parse_error("more than the declared " + std::to_string(m) + " edge lines",
                              line_no, tokens[0].byte);
        if (tokens.size() != 2)
            throw parse_error("edge line must be 'u v'", line_no, tokens[0].byte);
        long u = detail::parse_nonneg(tokens[0], line_no);
        long v = detail::parse_nonneg(tokens[1], line_no);
        if (u >= n) throw parse_error("vertex index >= n", line_no, tokens[0].byte);
        if (v >= n) throw parse_error("vertex index >= n", line_no, tokens[1].byte);
        if (u == v) throw parse_error("loop edge", line_no, tokens[0].byte);
        if (u > v) throw parse_error("edges must satisfy u < v", line_no, tokens[0].byte);
        for (auto [a, b] : edges)
            if (a == u && b == v) throw parse_error("duplicate edge", line_no, tokens[0].byte);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        ++seen_edges;
    }

    if (!have_header) throw parse_error("missing header line", line_no, 0);
    if (seen_edges < m)
        throw parse_error("expected " + std::to_string(m) + " edges, got " +
                              std::to_string(seen_edges),
                          line_no, 0);
    return Graph(n, edges);
}

/// Canonical edge-list serialization: header then edges in lexicographic
/// order, one per line. parse_edge_list(serialize_edge_list(g)) == g.
inline std::string serialize_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

/// Parse graph6 short form (n <= 62): first byte n+63, then ceil(n(n-1)/2/6)
/// bytes of 63+6-bit groups covering the upper triangle in column order.
/// Longer forms and padding garbage are rejected.
inline Graph parse_graph6(std::string_view text, int line_no = 1) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw parse_error("empty graph6 string", line_no, 0);

    unsigned char first = static_cast<unsigned char>(text[0]);
    if (first == 126)
        throw parse_error("graph6 long form (n >= 63) is not supported", line_no, 0);
    if (first < 63 || first > 126)
        throw parse_error("graph6 byte out of range", line_no, 0);
    int n = first - 63;
    if (n < 1)
        throw parse_error("graph6 order must be >= 1", line_no, 0);

    int bits = n * (n - 1) / 2;
    int groups = (bits + 5) / 6;
    if (static_cast<int>(text.size()) != 1 + groups)
        throw parse_error("graph6 length mismatch: expected " + std::to_string(1 + groups) +
                              " bytes for n=" + std::to_string(n) + ", got " +
                              std::to_string(text.size()),
                          line_no, static_cast<int>(text.size()));

    std::vector<std::pair<int, int>> edges;
    int k = 0;
    for (int gi = 0; gi < groups; ++gi) {
        unsigned char byte = static_cast<unsigned char>(text[static_cast<std::size_t>(1 + gi)]);
        if (byte < 63 || byte > 126)
            throw parse_error("graph6 byte out of range", line_no, 1 + gi);
        int value = byte - 63;
        for (int b = 5; b >= 0; --b, ++k) {
            int bit = (value >> b) & 1;
            if (k >= bits) {
                if (bit != 0)
                    throw parse_error("graph6 padding bits must be zero", line_no, 1 + gi);
                continue;
            }
            if (bit) {
                // invert k -> (i, j): upper triangle in column order
                int j = 1;
                int acc = 0;
                while (acc + j <= k) acc += j, ++j;
                edges.emplace_back(k - acc, j);
            }
        }
    }
    return Graph(n, edges);
}

inline std::string serialize_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62)
        throw std::invalid_argument("serialize_graph6: short form supports n <= 62");
    int bits = n * (n - 1) / 2;
    int groups = (bits + 5) / 6;
    std::string out(static_cast<std::size_t>(1 + groups), '\0');
    out[0] = static_cast<char>(n + 63);
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (g.has_edge(i, j))
                out[static_cast<std::size_t>(1 + k / 6)] |= static_cast<char>(1 << (5 - k % 6));
        }
    }
    for (int gi = 0; gi < groups; ++gi)
        out[static_cast<std::size_t>(1 + gi)] = static_cast<char>(out[static_cast<std::size_t>(1 + gi)] + 63);
    return out;
}

/// Auto-detect: a leading digit or '#' means edge list, anything else graph6
/// (graph6 order bytes land in '@'..'}').
inline GraphFormat detect_format(std::string_view text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '#' || (c >= '0' && c <= '9')) return GraphFormat::edge_list;
        return GraphFormat::graph6;
    }
    return GraphFormat::edge_list;
}

inline Graph parse_graph(std::string_view text) {
    return detect_format(text) == GraphFormat::edge_list ? parse_edge_list(text)
                                                         : parse_graph6(text);
}

inline std::string serialize_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::edge_list ? serialize_edge_list(g) : serialize_graph6(g);
}

}  // namespace spf

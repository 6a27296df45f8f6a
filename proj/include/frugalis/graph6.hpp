#pragma once

// graph6 and edge-list text I/O.
//
// graph6 is the compact one-line-per-graph format used by nauty/geng: a
// vertex-count prefix, then the upper triangle of the adjacency matrix in
// column order, packed big-endian into 6-bit groups stored as printable
// bytes 63..126. We accept the short form (n <= 62) and the '~'-prefixed
// 18-bit long form, and tolerate an optional ">>graph6<<" header.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "frugalis/graph.hpp"

namespace frugalis {

namespace detail {

inline void g6_fail(const std::string& what) {
    throw std::runtime_error("graph6: " + what);
}

}  // namespace detail

inline Graph parse_graph6(std::string_view line) {
    // Strip the optional file header and any trailing CR/LF or spaces.
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' ||
                             line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
    if (line.empty()) detail::g6_fail("empty line");
    for (char ch : line) {
        unsigned char b = static_cast<unsigned char>(ch);
        if (b < 63 || b > 126) detail::g6_fail("byte out of range 63..126");
    }

    std::size_t pos = 0;
    long long n;
    if (line[0] != '~') {
        n = line[pos++] - 63;
    } else {
        if (line.size() >= 2 && line[1] == '~')
            detail::g6_fail("vertex count beyond 18-bit form not supported");
        if (line.size() < 4) detail::g6_fail("truncated vertex count");
        n = 0;
        for (pos = 1; pos < 4; ++pos) n = (n << 6) | (line[pos] - 63);
        if (n < 63) detail::g6_fail("long-form vertex count below 63");
    }

    long long nbits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() - pos < need) detail::g6_fail("truncated bit field");
    if (line.size() - pos > need) detail::g6_fail("trailing bytes after bit field");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int k = 1; k < n; ++k) {
        for (int j = 0; j < k; ++j, ++bit) {
            int group = line[pos + bit / 6] - 63;
            if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(j, k);
        }
    }
    // Padding bits past the triangle must be zero.
    for (long long b = nbits; b < static_cast<long long>(need) * 6; ++b) {
        int group = line[pos + b / 6] - 63;
        if ((group >> (5 - b % 6)) & 1) detail::g6_fail("nonzero padding bits");
    }
    return from_edges(static_cast<int>(n), edges);
}

inline std::string write_graph6(const Graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + 63));
    } else if (g.n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((g.n & 63) + 63));
    } else {
        throw std::invalid_argument("write_graph6: vertex count beyond 18-bit form");
    }
    long long nbits = static_cast<long long>(g.n) * (g.n - 1) / 2;
    std::vector<char> groups(static_cast<std::size_t>((nbits + 5) / 6), 0);
    long long bit = 0;
    for (int k = 1; k < g.n; ++k)
        for (int j = 0; j < k; ++j, ++bit)
            if (g.has_edge(j, k)) groups[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
    for (char grp : groups) out.push_back(static_cast<char>(grp + 63));
    return out;
}

// Plain-text edge list: a "n m" header line, then one "u v" line per edge.
// Blank lines are skipped; anything else is an error.
inline Graph parse_edge_list(const std::string& text) {
    std::vector<long long> nums;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') { ++i; continue; }
        bool neg = false;
        if (ch == '-') { neg = true; ++i; }
        if (i >= text.size() || text[i] < '0' || text[i] > '9')
            throw std::runtime_error("edge list: expected integer");
        long long val = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            val = val * 10 + (text[i] - '0');
            if (val > (1LL << 40)) throw std::runtime_error("edge list: integer too large");
            ++i;
        }
        nums.push_back(neg ? -val : val);
    }
    if (nums.size() < 2) throw std::runtime_error("edge list: missing \"n m\" header");
    long long n = nums[0], m = nums[1];
    if (n < 0 || m < 0 || static_cast<long long>(nums.size()) != 2 + 2 * m)
        throw std::runtime_error("edge list: token count does not match header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long e = 0; e < m; ++e) {
        long long u = nums[2 + 2 * e], v = nums[3 + 2 * e];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::runtime_error("edge list: endpoint out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return from_edges(static_cast<int>(n), edges);
}

inline std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : edge_list(g))
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace frugalis

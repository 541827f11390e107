#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "strongedge/multigraph.hpp"

namespace strongedge {

// Parsed graph plus the original vertex labels, indexed by dense id. Labels
// are the identity for canonical input and the 1-based ids for DIMACS input.
struct LoadedGraph {
    MultiGraph graph;
    std::vector<long long> vertex_labels;
};

namespace detail {

inline bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == tok.size();
}

inline std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

// Canonical edge list: `#` comments, a `n m` header, then m lines `u v`
// with 0-based ids. Duplicate lines create parallel edges.
inline LoadedGraph read_canonical(const std::vector<std::vector<std::string>>& rows) {
    std::size_t at = 0;
    auto next_row = [&]() -> const std::vector<std::string>& {
        if (at >= rows.size()) throw std::invalid_argument("edge list truncated");
        return rows[at++];
    };

    const auto& header = next_row();
    long long n = 0, m = 0;
    if (header.size() != 2 || !parse_int(header[0], n) || !parse_int(header[1], m) || n < 0 || m < 0)
        throw std::invalid_argument("edge list header must be two integers: n m");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        const auto& row = next_row();
        long long u = 0, v = 0;
        if (row.size() != 2 || !parse_int(row[0], u) || !parse_int(row[1], v))
            throw std::invalid_argument("edge line " + std::to_string(i) + " must be two integers: u v");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge line " + std::to_string(i) + " references vertex outside 0..n-1");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (at != rows.size())
        throw std::invalid_argument("edge list has trailing data after " + std::to_string(m) + " edges");

    LoadedGraph out{MultiGraph(static_cast<int>(n), std::move(edges)), {}};
    out.vertex_labels.resize(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) out.vertex_labels[i] = i;
    return out;
}

// DIMACS-like: `c` comments, `p edge n m`, then m lines `e u v` with
// 1-based ids.
inline LoadedGraph read_dimacs(const std::vector<std::vector<std::string>>& rows) {
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    for (const auto& row : rows) {
        if (row[0] == "c") continue;
        if (row[0] == "p") {
            if (n >= 0) throw std::invalid_argument("duplicate DIMACS problem line");
            if (row.size() != 4 || !parse_int(row[2], n) || !parse_int(row[3], m) || n < 0 || m < 0)
                throw std::invalid_argument("DIMACS problem line must be: p edge n m");
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }
        if (row[0] == "e") {
            if (n < 0) throw std::invalid_argument("DIMACS edge before problem line");
            long long u = 0, v = 0;
            if (row.size() != 3 || !parse_int(row[1], u) || !parse_int(row[2], v))
                throw std::invalid_argument("DIMACS edge line must be: e u v");
            if (u < 1 || u > n || v < 1 || v > n)
                throw std::invalid_argument("DIMACS edge references vertex outside 1..n");
            edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
            continue;
        }
        throw std::invalid_argument("unrecognized DIMACS line type: " + row[0]);
    }
    if (n < 0) throw std::invalid_argument("DIMACS input has no problem line");
    if (static_cast<long long>(edges.size()) != m)
        throw std::invalid_argument("DIMACS edge count does not match problem line");

    LoadedGraph out{MultiGraph(static_cast<int>(n), std::move(edges)), {}};
    out.vertex_labels.resize(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) out.vertex_labels[i] = i + 1;
    return out;
}

}  // namespace detail

// Reads either format, auto-detected by the first token: `c`/`p`/`e` selects
// DIMACS, anything else the canonical `n m` edge list.
inline LoadedGraph read_edge_list(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    bool dimacs = false;
    bool first_token_seen = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.front() == '#') continue;
        auto toks = detail::tokenize(line);
        if (toks.empty()) continue;
        if (!first_token_seen) {
            first_token_seen = true;
            dimacs = toks[0] == "c" || toks[0] == "p" || toks[0] == "e";
        }
        rows.push_back(std::move(toks));
    }
    if (rows.empty()) throw std::invalid_argument("empty graph input");
    return dimacs ? detail::read_dimacs(rows) : detail::read_canonical(rows);
}

inline LoadedGraph read_edge_list(const std::string& text) {
    std::istringstream ss(text);
    return read_edge_list(ss);
}

/// Writes the canonical `n m` + `u v` lines form.
inline void write_edge_list(std::ostream& out, const MultiGraph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string write_edge_list(const MultiGraph& g) {
    std::ostringstream ss;
    write_edge_list(ss, g);
    return ss.str();
}

}  // namespace strongedge

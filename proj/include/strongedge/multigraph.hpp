#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace strongedge {

using Vertex = int;
using EdgeId = int;

struct Edge {
    Vertex u;
    Vertex v;
};

struct IncidentEdge {
    EdgeId id;
    Vertex other;
};

/// Set of edge ids over a fixed edge universe 0..m-1.
class EdgeSubset {
public:
    EdgeSubset() = default;
    explicit EdgeSubset(int universe, bool fill = false)
        : member_(static_cast<std::size_t>(universe), fill ? 1 : 0),
          count_(fill ? universe : 0) {
        if (universe < 0) throw std::invalid_argument("edge universe must be non-negative");
    }

    int universe_size() const { return static_cast<int>(member_.size()); }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(EdgeId e) const {
        return e >= 0 && e < universe_size() && member_[e];
    }

    void insert(EdgeId e) {
        check(e);
        if (!member_[e]) { member_[e] = 1; ++count_; }
    }

    void erase(EdgeId e) {
        check(e);
        if (member_[e]) { member_[e] = 0; --count_; }
    }

private:
    void check(EdgeId e) const {
        if (e < 0 || e >= universe_size())
            throw std::out_of_range("edge id " + std::to_string(e) + " outside subset universe");
    }

    std::vector<char> member_;
    int count_ = 0;
};

// Undirected multigraph over dense vertex ids 0..n-1 with dense edge ids
// 0..m-1. Parallel edges are allowed and keep distinct ids; loops are
// rejected. Immutable once constructed, so shared concurrent reads are safe.
class MultiGraph {
public:
    MultiGraph() = default;

    MultiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n_ < 0) throw std::invalid_argument("vertex count must be non-negative");
        adjacency_.resize(static_cast<std::size_t>(n_));
        for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
            const auto [u, v] = edges_[id];
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw std::invalid_argument("edge " + std::to_string(id) +
                                            " has an endpoint outside 0.." + std::to_string(n_ - 1));
            if (u == v)
                throw std::invalid_argument("edge " + std::to_string(id) + " is a loop");
            adjacency_[u].push_back({id, v});
            adjacency_[v].push_back({id, u});
        }
        for (const auto& inc : adjacency_)
            max_degree_ = std::max(max_degree_, static_cast<int>(inc.size()));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { check_edge(e); return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }

    std::span<const IncidentEdge> incident(Vertex v) const {
        check_vertex(v);
        return adjacency_[v];
    }

    /// Endpoint count at v; parallel edges contribute with multiplicity.
    int degree(Vertex v) const {
        check_vertex(v);
        return static_cast<int>(adjacency_[v].size());
    }

    /// Maximum degree over all vertices; 0 for edgeless graphs.
    int max_degree() const { return max_degree_; }

    Vertex other_endpoint(EdgeId e, Vertex v) const {
        const Edge& ed = edge(e);
        if (ed.u == v) return ed.v;
        if (ed.v == v) return ed.u;
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " is not an endpoint of edge " + std::to_string(e));
    }

    /// Number of live edges incident to v.
    int restricted_degree(const EdgeSubset& live, Vertex v) const {
        check_vertex(v);
        int d = 0;
        for (const auto& inc : adjacency_[v])
            if (live.contains(inc.id)) ++d;
        return d;
    }

    // Edges within distance one of e, measured in the full graph: every
    // f != e that shares an endpoint with e or has an endpoint joined to an
    // endpoint of e by some edge. Parallel copies of e are included.
    // Returned sorted ascending.
    std::vector<EdgeId> conflict_set(EdgeId e) const {
        check_edge(e);
        const Edge& ed = edges_[e];
        // f conflicts with e iff f touches an endpoint of e or a neighbor of one.
        std::vector<Vertex> zone;
        std::vector<char> in_zone(static_cast<std::size_t>(n_), 0);
        auto mark = [&](Vertex w) {
            if (!in_zone[w]) { in_zone[w] = 1; zone.push_back(w); }
        };
        mark(ed.u);
        mark(ed.v);
        for (const auto& inc : adjacency_[ed.u]) mark(inc.other);
        for (const auto& inc : adjacency_[ed.v]) mark(inc.other);

        std::vector<char> seen(edges_.size(), 0);
        seen[e] = 1;
        std::vector<EdgeId> out;
        for (Vertex w : zone)
            for (const auto& inc : adjacency_[w])
                if (!seen[inc.id]) {
                    seen[inc.id] = 1;
                    out.push_back(inc.id);
                }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
    }
    void check_edge(EdgeId e) const {
        if (e < 0 || e >= edge_count())
            throw std::out_of_range("edge id " + std::to_string(e) + " out of range");
    }

    int n_ = 0;
    int max_degree_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<IncidentEdge>> adjacency_;
};

inline EdgeSubset all_edges(const MultiGraph& g) { return EdgeSubset(g.edge_count(), true); }
inline EdgeSubset no_edges(const MultiGraph& g) { return EdgeSubset(g.edge_count(), false); }

}  // namespace strongedge

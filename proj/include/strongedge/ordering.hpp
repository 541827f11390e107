#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "strongedge/multigraph.hpp"

namespace strongedge {

// Edge processing order with, per position, the endpoint that was special in
// the prefix subgraph. sequence[i] holds 1-based position i+1; the prefix
// G_i consists of the edges at positions 1..i.
struct OrderingEntry {
    EdgeId edge;
    Vertex special;
};

struct EdgeOrdering {
    std::vector<OrderingEntry> sequence;
};

struct SpecialEdge {
    EdgeId edge;
    Vertex special;
};

class NotKDegenerateError : public std::runtime_error {
public:
    explicit NotKDegenerateError(int k)
        : std::runtime_error("no special edge exists: graph is not " + std::to_string(k) +
                             "-degenerate (try a larger k)"),
          k_(k) {}
    int k() const { return k_; }

private:
    int k_;
};

// v is special in the live subgraph when at most k of its distinct
// live-neighbors have live degree above k. Parallel edges to one neighbor
// count that neighbor once.
inline bool is_special_vertex(const MultiGraph& g, const EdgeSubset& live, Vertex v, int k) {
    std::vector<Vertex> seen;
    int high = 0;
    for (const auto& inc : g.incident(v)) {
        if (!live.contains(inc.id)) continue;
        if (std::find(seen.begin(), seen.end(), inc.other) != seen.end()) continue;
        seen.push_back(inc.other);
        if (g.restricted_degree(live, inc.other) > k) ++high;
    }
    return high <= k;
}

// Deterministic special-edge selection over the live subgraph. A pair
// (edge, s) qualifies when s is special and the other endpoint has live
// degree at most k. Pairs whose special endpoint has live degree above k win
// first; remaining ties break by smallest special endpoint, then edge id.
inline std::optional<SpecialEdge> find_special_edge(const MultiGraph& g, const EdgeSubset& live,
                                                    int k) {
    const int n = g.vertex_count();
    std::vector<int> rdeg(n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!live.contains(e)) continue;
        ++rdeg[g.edge(e).u];
        ++rdeg[g.edge(e).v];
    }

    // -1 unknown, else 0/1 cache of the specialness predicate
    std::vector<signed char> special(n, -1);
    auto is_special = [&](Vertex v) {
        if (special[v] < 0) {
            std::vector<Vertex> seen;
            int high = 0;
            for (const auto& inc : g.incident(v)) {
                if (!live.contains(inc.id)) continue;
                if (std::find(seen.begin(), seen.end(), inc.other) != seen.end()) continue;
                seen.push_back(inc.other);
                if (rdeg[inc.other] > k) ++high;
            }
            special[v] = high <= k ? 1 : 0;
        }
        return special[v] == 1;
    };

    std::optional<SpecialEdge> best;
    bool best_pref = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!live.contains(e)) continue;
        const Edge& ed = g.edge(e);
        for (Vertex s : {ed.u, ed.v}) {
            Vertex o = s == ed.u ? ed.v : ed.u;
            if (rdeg[o] > k) continue;
            if (!is_special(s)) continue;
            bool pref = rdeg[s] > k;
            bool better = !best || (pref && !best_pref) ||
                          (pref == best_pref &&
                           (s < best->special || (s == best->special && e < best->edge)));
            if (better) {
                best = SpecialEdge{e, s};
                best_pref = pref;
            }
        }
    }
    return best;
}

// Repeatedly extracts a special edge from the live graph and prepends it, so
// the edge found first ends up at the last position and every prefix G_i is
// exactly the live graph its entry was selected from. Bookkeeping (live
// degrees, per-pair multiplicities, high-degree-neighbor counts) is
// maintained under deletion instead of rescanned; candidate checks are O(1).
inline EdgeOrdering build_ordering(const MultiGraph& g, int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    EdgeOrdering ord;
    ord.sequence.resize(m);
    if (m == 0) return ord;

    std::vector<char> live(m, 1);
    std::vector<int> rdeg(n, 0);
    std::vector<std::unordered_map<Vertex, int>> mult(n);  // live multiplicity per neighbor
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = g.edge(e);
        ++rdeg[ed.u];
        ++rdeg[ed.v];
        ++mult[ed.u][ed.v];
        ++mult[ed.v][ed.u];
    }
    std::vector<int> high_nbrs(n, 0);  // distinct live-neighbors with rdeg > k
    for (Vertex v = 0; v < n; ++v)
        for (const auto& [w, cnt] : mult[v])
            if (cnt > 0 && rdeg[w] > k) ++high_nbrs[v];

    for (int step = 0; step < m; ++step) {
        std::optional<SpecialEdge> best;
        bool best_pref = false;
        for (EdgeId e = 0; e < m; ++e) {
            if (!live[e]) continue;
            const Edge& ed = g.edge(e);
            for (Vertex s : {ed.u, ed.v}) {
                Vertex o = s == ed.u ? ed.v : ed.u;
                if (rdeg[o] > k || high_nbrs[s] > k) continue;
                bool pref = rdeg[s] > k;
                bool better = !best || (pref && !best_pref) ||
                              (pref == best_pref &&
                               (s < best->special || (s == best->special && e < best->edge)));
                if (better) {
                    best = SpecialEdge{e, s};
                    best_pref = pref;
                }
            }
        }
        if (!best) throw NotKDegenerateError(k);

        ord.sequence[m - step - 1] = {best->edge, best->special};

        // Delete the chosen edge and patch the counters. Degrees drop by
        // exactly one, so a high->low crossing means the old degree was k+1.
        const Edge& ed = g.edge(best->edge);
        Vertex u = ed.u, v = ed.v;
        live[best->edge] = 0;
        const int rdeg_u0 = rdeg[u]--, rdeg_v0 = rdeg[v]--;
        const int muv1 = --mult[u][v];
        --mult[v][u];

        // Pair terms: both the degree crossings and a possibly vanishing
        // u-v adjacency are folded into before/after membership tests.
        high_nbrs[u] += (muv1 > 0 && rdeg[v] > k ? 1 : 0) - (rdeg_v0 > k ? 1 : 0);
        high_nbrs[v] += (muv1 > 0 && rdeg[u] > k ? 1 : 0) - (rdeg_u0 > k ? 1 : 0);
        if (rdeg_u0 > k && rdeg[u] <= k)
            for (const auto& [w, cnt] : mult[u])
                if (w != v && cnt > 0) --high_nbrs[w];
        if (rdeg_v0 > k && rdeg[v] <= k)
            for (const auto& [w, cnt] : mult[v])
                if (w != u && cnt > 0) --high_nbrs[w];
        if (muv1 == 0) {
            mult[u].erase(v);
            mult[v].erase(u);
        }
    }
    return ord;
}

struct OrderingVerdict {
    bool ok = true;
    int position = 0;  // 1-based first violating position when !ok
    std::string reason;
};

// Re-checks the prefix invariant from scratch: for every i the recorded
// endpoint is special in G_i and the other endpoint has degree at most k
// there. Recomputes degrees per prefix via the definitional operations and
// shares none of the builder's incremental state.
inline OrderingVerdict verify_ordering(const MultiGraph& g, int k, const EdgeOrdering& ord) {
    const int m = g.edge_count();
    if (static_cast<int>(ord.sequence.size()) != m)
        throw std::invalid_argument("ordering length does not match edge count");
    std::vector<char> used(m, 0);
    for (const auto& entry : ord.sequence) {
        if (entry.edge < 0 || entry.edge >= m)
            throw std::invalid_argument("ordering references edge id out of range");
        if (used[entry.edge])
            throw std::invalid_argument("ordering repeats edge " + std::to_string(entry.edge));
        used[entry.edge] = 1;
        const Edge& ed = g.edge(entry.edge);
        if (entry.special != ed.u && entry.special != ed.v)
            throw std::invalid_argument("recorded special vertex is not an endpoint of edge " +
                                        std::to_string(entry.edge));
    }

    EdgeSubset prefix = no_edges(g);
    for (int i = 1; i <= m; ++i) {
        const OrderingEntry& entry = ord.sequence[i - 1];
        prefix.insert(entry.edge);
        Vertex u = entry.special;
        Vertex v = g.other_endpoint(entry.edge, u);
        if (!is_special_vertex(g, prefix, u, k))
            return {false, i,
                    "vertex " + std::to_string(u) + " is not special in the prefix graph"};
        if (g.restricted_degree(prefix, v) > k)
            return {false, i,
                    "endpoint " + std::to_string(v) + " has prefix degree above " + std::to_string(k)};
    }
    return {};
}

}  // namespace strongedge

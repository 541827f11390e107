#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "strongedge/multigraph.hpp"
#include "strongedge/ordering.hpp"

namespace strongedge {

struct AuditChecks {
    bool total_conflicts_ok = false;  // total <= (4k-2)*D - k*(2k-1)
    bool u_side_ok = false;           // u-side <= 2k*D - k^2
    bool v_side_ok = false;           // v-side <= (2k-2)*D - k*(k-1)
    bool x1_ok = false;               // |X1| <= k
    bool y1_ok = false;               // |Y1| <= k
    bool x3_future_ok = false;        // high-degree X3 vertices <= max(0, k-|X1|-|X2|)
    bool y2_future_ok = false;        // high-degree Y2 vertices <= k-|Y1|

    bool all() const {
        return total_conflicts_ok && u_side_ok && v_side_ok && x1_ok && y1_ok && x3_future_ok &&
               y2_future_ok;
    }
};

// Snapshot of the counting argument at one position. Taking G_i as the
// prefix through position i (its edges "blue", the rest "yellow"):
//   X1/X2: distinct neighbors of u sharing a blue edge, split by prefix
//          degree above/at-most k (v lands in X2 for a valid ordering);
//   X3:    neighbors of u reached only through yellow edges;
//   Y1/Y2: the same blue/yellow split around v.
// total_conflicts counts earlier-position edges within distance one of the
// edge; u_side_count is those incident to u or a neighbor of u, excluding
// edges incident to v; v_side_count is the rest.
struct AuditRecord {
    int position = 0;  // 1-based
    EdgeId edge = -1;
    Vertex u = -1;
    Vertex v = -1;
    std::vector<Vertex> x1, x2, x3, y1, y2;
    long long total_conflicts = 0;
    long long u_side_count = 0;
    long long v_side_count = 0;
    AuditChecks checks;
};

inline bool audit_all_pass(const std::vector<AuditRecord>& records) {
    return std::all_of(records.begin(), records.end(),
                       [](const AuditRecord& r) { return r.checks.all(); });
}

// Runs the per-edge counting checks for an ordering built with parameter k.
// The thresholds use the supplied k, not the true degeneracy, so slack for
// looser orderings can be studied. Specialness violations show up as failing
// checks rather than errors; only a malformed permutation throws.
inline std::vector<AuditRecord> audit(const MultiGraph& g, int k, const EdgeOrdering& ord) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (static_cast<int>(ord.sequence.size()) != m)
        throw std::invalid_argument("ordering length does not match edge count");

    std::vector<int> position(m, 0);  // 1-based position per edge
    for (int i = 1; i <= m; ++i) {
        const OrderingEntry& entry = ord.sequence[i - 1];
        if (entry.edge < 0 || entry.edge >= m)
            throw std::invalid_argument("ordering references edge id out of range");
        if (position[entry.edge] != 0)
            throw std::invalid_argument("ordering repeats edge " + std::to_string(entry.edge));
        const Edge& ed = g.edge(entry.edge);
        if (entry.special != ed.u && entry.special != ed.v)
            throw std::invalid_argument("recorded special vertex is not an endpoint of edge " +
                                        std::to_string(entry.edge));
        position[entry.edge] = i;
    }

    const int delta = g.max_degree();
    const long long total_cap = (4LL * k - 2) * delta - static_cast<long long>(k) * (2 * k - 1);
    const long long u_cap = 2LL * k * delta - static_cast<long long>(k) * k;
    const long long v_cap = (2LL * k - 2) * delta - static_cast<long long>(k) * (k - 1);

    std::vector<AuditRecord> records;
    records.reserve(m);
    std::vector<int> prefix_deg(n, 0);

    // Distinct neighbors of a vertex with an any-blue-edge flag, in first-seen
    // adjacency order.
    auto neighbor_classes = [&](Vertex a, int upto_position) {
        std::vector<std::pair<Vertex, bool>> out;
        for (const auto& inc : g.incident(a)) {
            bool blue = position[inc.id] <= upto_position;
            auto it = std::find_if(out.begin(), out.end(),
                                   [&](const auto& p) { return p.first == inc.other; });
            if (it == out.end())
                out.emplace_back(inc.other, blue);
            else
                it->second = it->second || blue;
        }
        return out;
    };

    for (int i = 1; i <= m; ++i) {
        const OrderingEntry& entry = ord.sequence[i - 1];
        const Edge& ed = g.edge(entry.edge);
        prefix_deg[ed.u]++;
        prefix_deg[ed.v]++;

        AuditRecord rec;
        rec.position = i;
        rec.edge = entry.edge;
        rec.u = entry.special;
        rec.v = g.other_endpoint(entry.edge, entry.special);

        for (const auto& [w, blue] : neighbor_classes(rec.u, i)) {
            if (!blue)
                rec.x3.push_back(w);
            else if (prefix_deg[w] > k)
                rec.x1.push_back(w);
            else
                rec.x2.push_back(w);
        }
        for (const auto& [w, blue] : neighbor_classes(rec.v, i)) {
            if (blue)
                rec.y1.push_back(w);
            else
                rec.y2.push_back(w);
        }
        for (auto* s : {&rec.x1, &rec.x2, &rec.x3, &rec.y1, &rec.y2})
            std::sort(s->begin(), s->end());

        // Mark u and its neighborhood for the side split.
        std::vector<char> near_u(n, 0);
        near_u[rec.u] = 1;
        for (const auto& inc : g.incident(rec.u)) near_u[inc.other] = 1;

        for (EdgeId f : g.conflict_set(entry.edge)) {
            if (position[f] >= i) continue;  // yellow or the edge itself
            rec.total_conflicts++;
            const Edge& fe = g.edge(f);
            bool touches_v = fe.u == rec.v || fe.v == rec.v;
            if (!touches_v && (near_u[fe.u] || near_u[fe.v]))
                rec.u_side_count++;
        }
        rec.v_side_count = rec.total_conflicts - rec.u_side_count;

        const long long x1n = static_cast<long long>(rec.x1.size());
        const long long x2n = static_cast<long long>(rec.x2.size());
        const long long y1n = static_cast<long long>(rec.y1.size());
        long long x3_high = 0;
        for (Vertex w : rec.x3)
            if (prefix_deg[w] > k) ++x3_high;
        long long y2_high = 0;
        for (Vertex w : rec.y2)
            if (prefix_deg[w] > k) ++y2_high;

        rec.checks.total_conflicts_ok = rec.total_conflicts <= total_cap;
        rec.checks.u_side_ok = rec.u_side_count <= u_cap;
        rec.checks.v_side_ok = rec.v_side_count <= v_cap;
        rec.checks.x1_ok = x1n <= k;
        rec.checks.y1_ok = y1n <= k;
        rec.checks.x3_future_ok = x3_high <= std::max(0LL, k - x1n - x2n);
        rec.checks.y2_future_ok = y2_high <= k - y1n;

        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace strongedge

#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "strongedge/multigraph.hpp"

namespace strongedge {

// Witness for the degeneracy value: peel_order lists the vertices in removal
// order and back_degrees[i] is the degree peel_order[i] had at its removal.
// max(back_degrees) equals k.
struct DegeneracyCertificate {
    int k = 0;
    std::vector<Vertex> peel_order;
    std::vector<int> back_degrees;
};

// Iterated minimum-degree peeling with a bucket queue. Parallel edges count
// with multiplicity, so removing one endpoint of a multi-edge can drop the
// other endpoint by several buckets at once.
inline DegeneracyCertificate degeneracy(const MultiGraph& g) {
    const int n = g.vertex_count();
    DegeneracyCertificate cert;
    if (n == 0) return cert;
    cert.peel_order.reserve(n);
    cert.back_degrees.reserve(n);

    std::vector<int> deg(n);
    int maxdeg = 0;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        maxdeg = std::max(maxdeg, deg[v]);
    }

    // Buckets keep stale entries; an entry is valid while the stored degree
    // still matches. Every degree change pushes a fresh entry, so each live
    // vertex always has a valid entry at bucket[deg[v]].
    std::vector<std::vector<Vertex>> bucket(maxdeg + 1);
    for (Vertex v = n - 1; v >= 0; --v) bucket[deg[v]].push_back(v);
    std::vector<char> removed(n, 0);

    int cursor = 0;
    for (int step = 0; step < n; ++step) {
        Vertex v = -1;
        while (v < 0) {
            while (cursor <= maxdeg && bucket[cursor].empty()) ++cursor;
            if (cursor > maxdeg) throw std::logic_error("degeneracy peel ran out of entries");
            Vertex cand = bucket[cursor].back();
            bucket[cursor].pop_back();
            if (!removed[cand] && deg[cand] == cursor) v = cand;
        }
        removed[v] = 1;
        cert.peel_order.push_back(v);
        cert.back_degrees.push_back(cursor);
        cert.k = std::max(cert.k, cursor);
        int low = cursor;
        for (const auto& inc : g.incident(v)) {
            if (removed[inc.other]) continue;
            bucket[--deg[inc.other]].push_back(inc.other);
            low = std::min(low, deg[inc.other]);
        }
        cursor = std::max(0, low);
    }
    return cert;
}

}  // namespace strongedge

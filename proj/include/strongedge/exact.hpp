#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "strongedge/coloring.hpp"
#include "strongedge/multigraph.hpp"

namespace strongedge {

// Exact strong chromatic index with a witness. When timed_out is set the
// search ran out of budget: chi_s is only the best upper bound found (the
// witness is still a valid coloring) and lower_bound the best proven floor.
struct ExactResult {
    int chi_s = 0;
    StrongColoring witness;
    long long nodes_explored = 0;
    bool timed_out = false;
    int lower_bound = 0;
};

namespace detail {

// Greedy clique on the conflict relation, grown from every seed edge in
// descending conflict-degree order. Any pairwise-conflicting edge set needs
// that many colors.
inline int conflict_clique_floor(const std::vector<std::vector<EdgeId>>& conf) {
    const int m = static_cast<int>(conf.size());
    if (m == 0) return 0;
    std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
    for (EdgeId e = 0; e < m; ++e)
        for (EdgeId f : conf[e]) adj[e][f] = 1;
    std::vector<EdgeId> by_degree(m);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](EdgeId a, EdgeId b) {
        return conf[a].size() > conf[b].size();
    });

    int best = 1;
    std::vector<EdgeId> clique;
    for (EdgeId seed : by_degree) {
        clique.assign(1, seed);
        for (EdgeId cand : by_degree) {
            if (cand == seed) continue;
            bool compatible = std::all_of(clique.begin(), clique.end(),
                                          [&](EdgeId x) { return adj[cand][x]; });
            if (compatible) clique.push_back(cand);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

}  // namespace detail

// Branch and bound over edges in descending conflict-degree order. Color
// permutations are broken by allowing a new color index only as
// (max used so far)+1. The budget counts (edge, color) assignment attempts,
// so identical inputs explore identical trees.
inline ExactResult exact_chi_s(const MultiGraph& g, long long budget = 5'000'000) {
    if (budget <= 0) throw std::invalid_argument("search budget must be positive");
    const int m = g.edge_count();
    ExactResult res;
    if (m == 0) return res;

    std::vector<std::vector<EdgeId>> conf(m);
    for (EdgeId e = 0; e < m; ++e) conf[e] = g.conflict_set(e);

    std::vector<EdgeId> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](EdgeId a, EdgeId b) { return conf[a].size() > conf[b].size(); });
    std::vector<int> rank(m);
    for (int i = 0; i < m; ++i) rank[order[i]] = i;
    std::vector<std::vector<EdgeId>> earlier(m);  // conflicts already colored when e is reached
    for (EdgeId e = 0; e < m; ++e)
        for (EdgeId f : conf[e])
            if (rank[f] < rank[e]) earlier[e].push_back(f);

    // First-fit along the branching order seeds the upper bound and witness.
    std::vector<int> col(m, -1);
    int best = 0;
    for (EdgeId e : order) {
        std::vector<char> taken(best + 1, 0);
        for (EdgeId f : earlier[e]) taken[col[f]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        col[e] = c;
        best = std::max(best, c + 1);
    }
    std::vector<int> best_col = col;
    res.lower_bound = detail::conflict_clique_floor(conf);

    bool out_of_budget = false;
    long long nodes = 0;
    std::fill(col.begin(), col.end(), -1);
    auto dfs = [&](auto&& self, int depth, int used) -> void {
        if (out_of_budget || best <= res.lower_bound) return;
        if (depth == m) {
            if (used < best) {
                best = used;
                best_col = col;
            }
            return;
        }
        EdgeId e = order[depth];
        for (int c = 0; c <= used && c <= best - 2; ++c) {
            if (++nodes > budget) {
                out_of_budget = true;
                return;
            }
            bool free = true;
            for (EdgeId f : earlier[e])
                if (col[f] == c) {
                    free = false;
                    break;
                }
            if (!free) continue;
            col[e] = c;
            self(self, depth + 1, std::max(used, c + 1));
            col[e] = -1;
            if (out_of_budget || best <= res.lower_bound) return;
        }
    };
    if (best > res.lower_bound) dfs(dfs, 0, 0);

    res.chi_s = best;
    res.witness.color = std::move(best_col);
    res.witness.colors_used = best;
    res.nodes_explored = nodes;
    res.timed_out = out_of_budget && best > res.lower_bound;
    if (!res.timed_out) res.lower_bound = best;  // optimality proven
    return res;
}

enum class SandwichStatus { pass, fail, inconclusive };

struct SandwichVerdict {
    SandwichStatus status = SandwichStatus::inconclusive;
    int exact_colors = 0;
    int greedy_colors = 0;
    std::optional<long long> bound;
    bool oracle_timed_out = false;
};

// Consistency harness: exact <= greedy <= degeneracy bound. An oracle
// timeout makes the verdict inconclusive rather than wrong.
inline SandwichVerdict sandwich_check(const MultiGraph& g, long long budget = 5'000'000) {
    ColorRun run = color_graph(g);
    ExactResult exact = exact_chi_s(g, budget);
    SandwichVerdict v;
    v.exact_colors = exact.chi_s;
    v.greedy_colors = run.report.colors_used;
    v.bound = run.report.bound;
    v.oracle_timed_out = exact.timed_out;
    if (exact.timed_out) return v;
    bool ok = exact.chi_s <= run.report.colors_used &&
              (!run.report.bound || run.report.colors_used <= *run.report.bound);
    v.status = ok ? SandwichStatus::pass : SandwichStatus::fail;
    return v;
}

}  // namespace strongedge

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "strongedge/degeneracy.hpp"
#include "strongedge/generate.hpp"
#include "strongedge/ordering.hpp"
#include "support/named_graphs.hpp"

using namespace strongedge;

namespace {

// Small corpus mixing simple and multigraph instances.
std::vector<MultiGraph> corpus(std::uint64_t base_seed, int count, int max_n) {
    std::vector<MultiGraph> graphs;
    for (int i = 0; i < count; ++i) {
        std::uint64_t seed = base_seed + i;
        GenSpec spec{i % 3 == 2 ? Family::multi_k_degenerate : Family::random_k_degenerate,
                     3 + static_cast<int>(seed % max_n), 1 + static_cast<int>(seed % 4), seed,
                     0.25};
        graphs.push_back(generate(spec));
    }
    return graphs;
}

int max_restricted_degree(const MultiGraph& g, const EdgeSubset& live) {
    int best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        best = std::max(best, g.restricted_degree(live, v));
    return best;
}

}  // namespace

TEST_CASE("special vertex predicate") {
    auto star = test_graphs::star(3);
    CHECK(is_special_vertex(star, all_edges(star), 0, 1));  // leaves have degree 1

    auto k5 = test_graphs::complete(5);
    for (Vertex v = 0; v < 5; ++v)
        CHECK_FALSE(is_special_vertex(k5, all_edges(k5), v, 2));  // 4 neighbors of degree 4

    auto c5 = test_graphs::cycle(5);
    for (Vertex v = 0; v < 5; ++v) CHECK(is_special_vertex(c5, all_edges(c5), v, 2));
}

TEST_CASE("distinct neighbors, not incident edges, drive specialness") {
    // u joined to one high-degree hub by two parallel edges: one high neighbor
    MultiGraph g(5, {{0, 1}, {0, 1}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(g.degree(1) == 5);
    CHECK(is_special_vertex(g, all_edges(g), 0, 1));
}

TEST_CASE("find_special_edge follows the deterministic policy") {
    auto p2 = test_graphs::path(2);
    auto found = find_special_edge(p2, all_edges(p2), 1);
    REQUIRE(found);
    CHECK(found->edge == 0);
    CHECK(found->special == 0);  // both endpoints qualify; lowest id wins

    auto k5 = test_graphs::complete(5);
    CHECK_FALSE(find_special_edge(k5, all_edges(k5), 2));

    auto c5 = test_graphs::cycle(5);
    auto first = find_special_edge(c5, all_edges(c5), 2);
    REQUIRE(first);
    CHECK(first->edge == 0);
    CHECK(first->special == 0);
}

TEST_CASE("the moreover preference picks a high-degree special endpoint") {
    // path a-b-c-d with k=1: both endpoints qualify somewhere, but the
    // qualifying special vertices of degree 2 must win over degree-1 ones
    auto p4 = test_graphs::path(4);
    auto found = find_special_edge(p4, all_edges(p4), 1);
    REQUIRE(found);
    CHECK(found->edge == 0);
    CHECK(found->special == 1);
    CHECK(p4.restricted_degree(all_edges(p4), found->special) == 2);
}

TEST_CASE("build_ordering on named graphs") {
    auto p2 = test_graphs::path(2);
    auto ord = build_ordering(p2, 1);
    REQUIRE(ord.sequence.size() == 1);
    CHECK(ord.sequence[0].edge == 0);
    CHECK(ord.sequence[0].special == 0);

    auto empty = test_graphs::edgeless(3);
    CHECK(build_ordering(empty, 0).sequence.empty());

    CHECK_THROWS_AS(build_ordering(test_graphs::complete(5), 2), NotKDegenerateError);
    CHECK_THROWS_AS(build_ordering(test_graphs::path(3), -1), std::invalid_argument);
}

TEST_CASE("trees order completely at k=1") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        MultiGraph g = generate(GenSpec{Family::random_tree, 2 + static_cast<int>(seed), 1, seed, 0.0});
        auto ord = build_ordering(g, 1);
        CHECK(ord.sequence.size() == static_cast<std::size_t>(g.edge_count()));
        CHECK(verify_ordering(g, 1, ord).ok);
    }
}

TEST_CASE("verifier passes builder output across a 200-graph corpus") {
    for (const MultiGraph& g : corpus(500, 200, 28)) {
        int k = degeneracy(g).k;
        auto ord = build_ordering(g, k);
        auto verdict = verify_ordering(g, k, ord);
        INFO(verdict.reason);
        CHECK(verdict.ok);
    }
}

TEST_CASE("every k-degenerate graph orders at any k at or above its degeneracy") {
    for (const MultiGraph& g : corpus(900, 60, 20)) {
        int d = degeneracy(g).k;
        for (int k : {d, d + 1, d + 3}) {
            auto ord = build_ordering(g, k);
            CHECK(verify_ordering(g, k, ord).ok);
        }
    }
}

TEST_CASE("construction replay: pure search agrees with the incremental builder") {
    for (const MultiGraph& g : corpus(1300, 40, 16)) {
        int k = degeneracy(g).k;
        auto ord = build_ordering(g, k);
        EdgeSubset live = all_edges(g);
        // walk discovery order: positions m, m-1, ..., 1
        for (int i = g.edge_count(); i >= 1; --i) {
            auto found = find_special_edge(g, live, k);
            REQUIRE(found);
            CHECK(found->edge == ord.sequence[i - 1].edge);
            CHECK(found->special == ord.sequence[i - 1].special);
            // while any live degree exceeds k, a special endpoint above k exists
            if (max_restricted_degree(g, live) > k)
                CHECK(g.restricted_degree(live, found->special) > k);
            live.erase(found->edge);
        }
    }
}

TEST_CASE("build_ordering is deterministic") {
    for (const MultiGraph& g : corpus(1700, 25, 24)) {
        int k = degeneracy(g).k;
        auto a = build_ordering(g, k);
        auto b = build_ordering(g, k);
        REQUIRE(a.sequence.size() == b.sequence.size());
        for (std::size_t i = 0; i < a.sequence.size(); ++i) {
            CHECK(a.sequence[i].edge == b.sequence[i].edge);
            CHECK(a.sequence[i].special == b.sequence[i].special);
        }
    }
}

TEST_CASE("verifier rejects malformed orderings") {
    auto p3 = test_graphs::path(3);
    EdgeOrdering ord;
    CHECK_THROWS_AS(verify_ordering(p3, 1, ord), std::invalid_argument);  // wrong length

    ord.sequence = {{0, 0}, {0, 0}};
    CHECK_THROWS_AS(verify_ordering(p3, 1, ord), std::invalid_argument);  // repeated edge

    ord.sequence = {{0, 2}, {1, 1}};
    CHECK_THROWS_AS(verify_ordering(p3, 1, ord), std::invalid_argument);  // not an endpoint

    ord.sequence = {{0, 0}, {5, 1}};
    CHECK_THROWS_AS(verify_ordering(p3, 1, ord), std::invalid_argument);  // id out of range

    EdgeOrdering empty_ord;
    CHECK(verify_ordering(test_graphs::edgeless(2), 0, empty_ord).ok);  // vacuous
}

TEST_CASE("verifier localizes a violation created by swapping positions") {
    // Valid k=1 ordering of a-b-c-d, first and last positions swapped: the
    // prefix {ab, bc} then shows b with degree 2 while recorded special is c.
    auto p4 = test_graphs::path(4);
    auto ord = build_ordering(p4, 1);
    REQUIRE(verify_ordering(p4, 1, ord).ok);
    std::swap(ord.sequence.front(), ord.sequence.back());
    auto verdict = verify_ordering(p4, 1, ord);
    REQUIRE_FALSE(verdict.ok);
    CHECK(verdict.position == 2);
}

TEST_CASE("every C5 ordering verifies at k=2") {
    // With max degree equal to k every vertex stays special and every prefix
    // endpoint degree is at most k, so no permutation or endpoint choice can
    // fail; position swaps are harmless on this graph. Checked exhaustively.
    auto c5 = test_graphs::cycle(5);
    std::vector<EdgeId> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    int checked = 0;
    do {
        for (int endpoint_mask = 0; endpoint_mask < 32; ++endpoint_mask) {
            EdgeOrdering ord;
            for (int i = 0; i < 5; ++i) {
                const Edge& ed = c5.edge(perm[i]);
                ord.sequence.push_back({perm[i], (endpoint_mask >> i & 1) ? ed.v : ed.u});
            }
            REQUIRE(verify_ordering(c5, 2, ord).ok);
            ++checked;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(checked == 120 * 32);
}

#include <catch2/catch_amalgamated.hpp>

#include "strongedge/coloring.hpp"
#include "strongedge/exact.hpp"
#include "strongedge/generate.hpp"
#include "support/named_graphs.hpp"
#include "support/oracles.hpp"

using namespace strongedge;

TEST_CASE("anchors match the brute-force enumeration") {
    struct Anchor {
        MultiGraph g;
        int chi;
    };
    const Anchor anchors[] = {
        {test_graphs::path(3), 2},   {test_graphs::path(4), 3}, {test_graphs::cycle(5), 5},
        {test_graphs::complete(4), 6}, {test_graphs::petersen(), 5},
    };
    for (const auto& [g, chi] : anchors) {
        auto res = exact_chi_s(g);
        REQUIRE_FALSE(res.timed_out);
        CHECK(res.chi_s == chi);
        // confirmed by exhaustive search, not assumed
        CHECK_FALSE(oracle::colorable_with(g, chi - 1));
        CHECK(oracle::colorable_with(g, chi));
        CHECK(verify_strong_coloring(g, res.witness).ok);
        CHECK(res.witness.colors_used == chi);
    }
}

TEST_CASE("plain product enumeration agrees on C5 and K4") {
    auto c5 = test_graphs::cycle(5);
    CHECK_FALSE(oracle::colorable_product_enum(c5, 4));
    CHECK(oracle::colorable_product_enum(c5, 5));
    auto k4 = test_graphs::complete(4);
    CHECK_FALSE(oracle::colorable_product_enum(k4, 5));
    CHECK(oracle::colorable_product_enum(k4, 6));
}

TEST_CASE("edge cases") {
    auto res = exact_chi_s(test_graphs::edgeless(3));
    CHECK(res.chi_s == 0);
    CHECK_FALSE(res.timed_out);
    CHECK(exact_chi_s(test_graphs::path(2)).chi_s == 1);
    CHECK_THROWS_AS(exact_chi_s(test_graphs::path(2), 0), std::invalid_argument);
}

TEST_CASE("exact value matches brute force on random small graphs") {
    int tested = 0;
    for (std::uint64_t seed = 0; tested < 40; ++seed) {
        GenSpec spec{seed % 4 == 0 ? Family::multi_k_degenerate : Family::random_k_degenerate,
                     3 + static_cast<int>(seed % 5), 1 + static_cast<int>(seed % 2), seed, 0.3};
        MultiGraph g = generate(spec);
        if (g.edge_count() > 10) continue;
        ++tested;
        auto res = exact_chi_s(g);
        REQUIRE_FALSE(res.timed_out);
        CHECK(res.chi_s == oracle::brute_chi_s(g));
        // minimality: one fewer color admits no valid assignment at all
        CHECK_FALSE(oracle::colorable_with(g, res.chi_s - 1));
        CHECK(verify_strong_coloring(g, res.witness).ok);
        CHECK(res.witness.colors_used == res.chi_s);
    }
}

TEST_CASE("clique floor never exceeds the exact value") {
    for (std::uint64_t seed = 50; seed < 80; ++seed) {
        MultiGraph g = generate(GenSpec{Family::random_k_degenerate,
                                        4 + static_cast<int>(seed % 5), 2, seed, 0.0});
        if (g.edge_count() > 14) continue;
        std::vector<std::vector<EdgeId>> conf(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) conf[e] = g.conflict_set(e);
        auto res = exact_chi_s(g);
        REQUIRE_FALSE(res.timed_out);
        CHECK(detail::conflict_clique_floor(conf) <= res.chi_s);
    }
}

TEST_CASE("budget exhaustion degrades to honest bounds") {
    // C7 needs 4 colors but its clique floor is 3, so proving optimality
    // takes real search; a tiny budget must time out without lying.
    auto c7 = test_graphs::cycle(7);
    auto full = exact_chi_s(c7);
    REQUIRE_FALSE(full.timed_out);
    CHECK(full.chi_s == 4);
    CHECK(full.nodes_explored > 0);

    auto cut = exact_chi_s(c7, 3);
    CHECK(cut.timed_out);
    CHECK(cut.chi_s >= full.chi_s);  // still a valid upper bound
    CHECK(cut.lower_bound <= full.chi_s);
    CHECK(verify_strong_coloring(c7, cut.witness).ok);
}

TEST_CASE("identical runs explore identical trees") {
    auto c7 = test_graphs::cycle(7);
    auto a = exact_chi_s(c7);
    auto b = exact_chi_s(c7);
    CHECK(a.nodes_explored == b.nodes_explored);
    CHECK(a.witness.color == b.witness.color);
}

TEST_CASE("sandwich verdicts on named graphs") {
    auto c5 = sandwich_check(test_graphs::cycle(5));
    CHECK(c5.status == SandwichStatus::pass);
    CHECK(c5.exact_colors == 5);
    CHECK(c5.greedy_colors <= 7);

    auto k4 = sandwich_check(test_graphs::complete(4));
    CHECK(k4.status == SandwichStatus::pass);
    CHECK(k4.exact_colors == 6);
    CHECK(k4.greedy_colors == 6);
    REQUIRE(k4.bound);
    CHECK(*k4.bound == 16);

    auto cut = sandwich_check(test_graphs::cycle(7), 3);
    CHECK(cut.status == SandwichStatus::inconclusive);
    CHECK(cut.oracle_timed_out);
}

TEST_CASE("trees with max degree 3 sandwich inside 2*delta") {
    int tested = 0;
    for (std::uint64_t seed = 0; tested < 12; ++seed) {
        MultiGraph g = generate(GenSpec{Family::random_tree, 8, 1, seed, 0.0});
        if (g.max_degree() != 3 || g.edge_count() > 12) continue;
        ++tested;
        auto v = sandwich_check(g);
        REQUIRE(v.status == SandwichStatus::pass);
        REQUIRE(v.bound);
        CHECK(*v.bound == 6);
        CHECK(v.exact_colors <= v.greedy_colors);
        CHECK(v.greedy_colors <= 6);
    }
}

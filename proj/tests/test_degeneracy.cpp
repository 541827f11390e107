#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "strongedge/degeneracy.hpp"
#include "strongedge/generate.hpp"
#include "support/named_graphs.hpp"
#include "support/oracles.hpp"

using namespace strongedge;

namespace {

void check_certificate(const MultiGraph& g, const DegeneracyCertificate& cert) {
    REQUIRE(cert.peel_order.size() == static_cast<std::size_t>(g.vertex_count()));
    REQUIRE(cert.back_degrees.size() == cert.peel_order.size());
    std::vector<Vertex> sorted = cert.peel_order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Vertex> expect(g.vertex_count());
    std::iota(expect.begin(), expect.end(), 0);
    CHECK(sorted == expect);  // permutation of all vertices
    int max_back = 0;
    for (int d : cert.back_degrees) max_back = std::max(max_back, d);
    CHECK(max_back == cert.k);

    // Replaying the peel must see exactly the recorded degrees.
    std::vector<char> removed(g.vertex_count(), 0);
    for (std::size_t i = 0; i < cert.peel_order.size(); ++i) {
        Vertex v = cert.peel_order[i];
        int deg = 0;
        for (const auto& inc : g.incident(v))
            if (!removed[inc.other]) ++deg;
        CHECK(deg == cert.back_degrees[i]);
        removed[v] = 1;
    }
}

}  // namespace

TEST_CASE("named graph degeneracies") {
    CHECK(degeneracy(test_graphs::path(7)).k == 1);
    CHECK(degeneracy(test_graphs::star(6)).k == 1);
    CHECK(degeneracy(test_graphs::cycle(5)).k == 2);
    CHECK(degeneracy(test_graphs::complete(5)).k == 4);
    CHECK(degeneracy(test_graphs::petersen()).k == 3);
    CHECK(degeneracy(test_graphs::edgeless(4)).k == 0);
    CHECK(degeneracy(MultiGraph(0, {})).k == 0);
}

TEST_CASE("trees are 1-degenerate") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        MultiGraph g = generate(GenSpec{Family::random_tree, 2 + static_cast<int>(seed), 1, seed, 0.0});
        CHECK(degeneracy(g).k == 1);
    }
}

TEST_CASE("parallel edges count toward the peel") {
    CHECK(degeneracy(test_graphs::multi_edge(2)).k == 2);
    CHECK(degeneracy(test_graphs::multi_edge(3)).k == 3);

    // doubled path edge: peeling must not get stuck when a degree drops by 2
    MultiGraph g(3, {{0, 1}, {0, 1}, {1, 2}});
    auto cert = degeneracy(g);
    CHECK(cert.k == 2);
    check_certificate(g, cert);
}

TEST_CASE("certificate invariants on random graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        GenSpec spec{seed % 2 == 0 ? Family::random_k_degenerate : Family::multi_k_degenerate,
                     12 + static_cast<int>(seed % 9), 1 + static_cast<int>(seed % 4), seed, 0.3};
        MultiGraph g = generate(spec);
        check_certificate(g, degeneracy(g));
    }
}

TEST_CASE("peeling agrees with the exhaustive subset oracle on small graphs") {
    // max over induced subgraphs of their min degree, checked both ways
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GenSpec spec{seed % 3 == 0 ? Family::multi_k_degenerate : Family::random_k_degenerate,
                     2 + static_cast<int>(seed % 7), 1 + static_cast<int>(seed % 3), seed, 0.25};
        MultiGraph g = generate(spec);
        REQUIRE(g.vertex_count() <= 8);
        CHECK(degeneracy(g).k == oracle::brute_degeneracy(g));
    }
    CHECK(degeneracy(test_graphs::complete(5)).k == oracle::brute_degeneracy(test_graphs::complete(5)));
    CHECK(degeneracy(test_graphs::cycle(6)).k == oracle::brute_degeneracy(test_graphs::cycle(6)));
}

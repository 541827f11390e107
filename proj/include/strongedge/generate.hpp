#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "strongedge/multigraph.hpp"

namespace strongedge {

enum class Family {
    random_k_degenerate,
    path,
    cycle,
    complete,
    star,
    random_tree,
    multi_k_degenerate,
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::random_k_degenerate: return "random-k-degenerate";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::star: return "star";
        case Family::random_tree: return "random-tree";
        case Family::multi_k_degenerate: return "multi-k-degenerate";
    }
    return "?";
}

inline Family family_from_name(const std::string& name) {
    for (Family f : {Family::random_k_degenerate, Family::path, Family::cycle, Family::complete,
                     Family::star, Family::random_tree, Family::multi_k_degenerate})
        if (name == family_name(f)) return f;
    throw std::invalid_argument("unknown graph family: " + name);
}

// Corpus recipe. Identical specs regenerate byte-identical edge lists; the
// draw protocol is documented in the README so corpora can be reproduced.
struct GenSpec {
    Family family = Family::random_k_degenerate;
    int n = 1;
    int k = 1;
    std::uint64_t seed = 0;
    double parallel_prob = 0.0;  // duplication chance, multi variant only
};

// All randomness comes from raw mt19937_64 output (the engine's sequence is
// fixed by the standard), reduced with plain modulo; no library
// distributions, so draws are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    /// Uniform integer in [lo, hi].
    int uniform(int lo, int hi) {
        if (lo > hi) throw std::invalid_argument("empty draw range");
        return lo + static_cast<int>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// True with probability p, from a 53-bit mantissa draw.
    bool chance(double p) { return static_cast<double>(raw() >> 11) * 0x1.0p-53 < p; }

private:
    std::mt19937_64 engine_;
};

namespace detail {

// t distinct values out of 0..limit-1: partial Fisher-Yates over the
// identity pool, result sorted.
inline std::vector<Vertex> pick_distinct(Rng& rng, int limit, int t) {
    std::vector<Vertex> pool(limit);
    std::iota(pool.begin(), pool.end(), 0);
    for (int j = 0; j < t; ++j) std::swap(pool[j], pool[rng.uniform(j, limit - 1)]);
    pool.resize(t);
    std::sort(pool.begin(), pool.end());
    return pool;
}

// Incremental witness construction: vertex i attaches to `attach_count(i)`
// distinct earlier vertices, which caps the degeneracy by construction.
template <typename AttachCount>
std::vector<Edge> attach_to_earlier(Rng& rng, int n, AttachCount attach_count) {
    std::vector<Edge> edges;
    for (Vertex i = 1; i < n; ++i) {
        int t = attach_count(i);
        for (Vertex w : pick_distinct(rng, i, t)) edges.push_back({w, i});
    }
    return edges;
}

}  // namespace detail

inline MultiGraph generate(const GenSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("generator needs n >= 1");
    if (spec.parallel_prob < 0.0 || spec.parallel_prob > 1.0)
        throw std::invalid_argument("parallel-prob must lie in [0, 1]");
    Rng rng(spec.seed);
    const int n = spec.n;

    switch (spec.family) {
        case Family::path: {
            std::vector<Edge> edges;
            for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            return MultiGraph(n, std::move(edges));
        }
        case Family::cycle: {
            if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
            std::vector<Edge> edges;
            for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
            return MultiGraph(n, std::move(edges));
        }
        case Family::complete: {
            std::vector<Edge> edges;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
            return MultiGraph(n, std::move(edges));
        }
        case Family::star: {
            std::vector<Edge> edges;
            for (Vertex i = 1; i < n; ++i) edges.push_back({0, i});
            return MultiGraph(n, std::move(edges));
        }
        case Family::random_tree: {
            auto edges = detail::attach_to_earlier(rng, n, [](Vertex) { return 1; });
            return MultiGraph(n, std::move(edges));
        }
        case Family::random_k_degenerate: {
            if (spec.k < 1) throw std::invalid_argument("random-k-degenerate needs k >= 1");
            auto edges = detail::attach_to_earlier(rng, n, [&](Vertex i) {
                return rng.uniform(1, std::min(spec.k, static_cast<int>(i)));
            });
            return MultiGraph(n, std::move(edges));
        }
        case Family::multi_k_degenerate: {
            if (spec.k < 1) throw std::invalid_argument("multi-k-degenerate needs k >= 1");
            auto base = detail::attach_to_earlier(rng, n, [&](Vertex i) {
                return rng.uniform(1, std::min(spec.k, static_cast<int>(i)));
            });
            // Duplication pass runs after construction on the same stream.
            std::vector<Edge> edges;
            for (const Edge& e : base) {
                edges.push_back(e);
                if (rng.chance(spec.parallel_prob)) edges.push_back(e);
            }
            return MultiGraph(n, std::move(edges));
        }
    }
    throw std::invalid_argument("unknown graph family");
}

// Every vertex attaches to exactly min(k, i) earlier vertices, so the first
// k+1 vertices form a complete graph and the degeneracy lands on k exactly
// whenever n > k.
inline MultiGraph saturate_k(const GenSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("generator needs n >= 1");
    if (spec.k < 0) throw std::invalid_argument("saturate_k needs k >= 0");
    if (spec.n <= spec.k) throw std::invalid_argument("saturate_k needs n > k");
    Rng rng(spec.seed);
    auto edges = detail::attach_to_earlier(rng, spec.n, [&](Vertex i) {
        return std::min(spec.k, static_cast<int>(i));
    });
    return MultiGraph(spec.n, std::move(edges));
}

}  // namespace strongedge

#pragma once

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "graphcx/canonical.hpp"
#include "graphcx/graph.hpp"

namespace fixtures {

using namespace graphcx;

inline OrientedGraph theta() { return make_graph(2, {{1, 2}, {1, 2}, {1, 2}}); }

inline OrientedGraph k4() {
    return make_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

inline OrientedGraph theta_squared() { return product(theta(), theta()); }

// two vertices joined by k parallel edges
inline OrientedGraph fat_theta(int k) {
    std::vector<std::pair<int, int>> edges(static_cast<size_t>(k), {1, 2});
    return make_graph(2, std::move(edges));
}

inline OrientedGraph doubled_triangle() {
    return make_graph(3, {{1, 2}, {1, 2}, {1, 3}, {1, 3}, {2, 3}, {2, 3}});
}

// the V=3, E=5 class produced by bracketing two thetas
inline OrientedGraph house() {
    return make_graph(3, {{1, 2}, {1, 2}, {1, 3}, {1, 3}, {2, 3}});
}

inline std::uint64_t test_seed() {
    if (const char* env = std::getenv("GRAPHCX_SEED")) return std::strtoull(env, nullptr, 10);
    return 20240611ull;
}

inline std::vector<int> random_permutation(int v, std::mt19937_64& rng) {
    std::vector<int> sigma(static_cast<size_t>(v) + 1);
    for (int i = 0; i <= v; ++i) sigma[static_cast<size_t>(i)] = i;
    std::shuffle(sigma.begin() + 1, sigma.end(), rng);
    return sigma;
}

// random loop-free multigraph with all valencies >= 3
inline OrientedGraph random_graph(std::mt19937_64& rng, int max_v = 5) {
    std::uniform_int_distribution<int> pick_v(2, max_v);
    const int v = pick_v(rng);
    std::uniform_int_distribution<int> pick(1, v);
    std::vector<std::pair<int, int>> edges;
    OrientedGraph g{v, {}};
    auto deficient = [&]() {
        for (int u = 1; u <= v; ++u)
            if (g.valency(u) < 3) return u;
        return 0;
    };
    while (int u = deficient()) {
        int w = pick(rng);
        while (w == u) w = pick(rng);
        g.edges.emplace_back(u, w);
    }
    return g;
}

// Independent zero-class oracle: a class is zero iff the graph has a loop or
// some relabeling preserves the direction-normalized edge multiset with
// total sign -1.
inline bool is_zero_class_oracle(const OrientedGraph& g) {
    if (g.has_loop()) return true;
    // work on the min->max representative so reversal counts are relative to it
    std::vector<std::pair<int, int>> base;
    for (const auto& [s, t] : g.edges) base.emplace_back(std::min(s, t), std::max(s, t));
    std::sort(base.begin(), base.end());
    std::vector<int> sigma(static_cast<size_t>(g.vertex_count) + 1);
    for (int i = 0; i <= g.vertex_count; ++i) sigma[static_cast<size_t>(i)] = i;
    do {
        std::vector<std::pair<int, int>> image;
        int reversals = 0;
        for (const auto& [s, t] : base) {
            int a = sigma[static_cast<size_t>(s)], b = sigma[static_cast<size_t>(t)];
            if (a > b) {
                std::swap(a, b);
                ++reversals;
            }
            image.emplace_back(a, b);
        }
        std::sort(image.begin(), image.end());
        if (image == base &&
            permutation_sign(sigma) * (reversals % 2 == 0 ? 1 : -1) == -1)
            return true;
    } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
    return false;
}

} // namespace fixtures

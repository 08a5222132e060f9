#include <benchmark/benchmark.h>

#include <algorithm>
#include <vector>

#include "graphcx/canonical.hpp"
#include "graphcx/corpus.hpp"
#include "graphcx/flowcharts.hpp"
#include "graphcx/involution.hpp"

using namespace graphcx;

namespace {

OrientedGraph theta() { return make_graph(2, {{1, 2}, {1, 2}, {1, 2}}); }

OrientedGraph k4() {
    return make_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

// ring of doubled edges plus chords; a dense-ish V-vertex stress graph
OrientedGraph ring(int v) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= v; ++i) {
        int j = i % v + 1;
        edges.emplace_back(i, j);
        edges.emplace_back(i, j);
    }
    edges.emplace_back(1, v / 2 + 1);
    edges.emplace_back(2, v / 2 + 2 > v ? 1 : v / 2 + 2);
    return OrientedGraph{v, std::move(edges)};
}

void BM_CanonicalizeBB(benchmark::State& state) {
    // rotate through thousands of relabelings; this measures the production
    // path (branch-and-bound search plus its memo)
    OrientedGraph base = ring(static_cast<int>(state.range(0)));
    std::vector<OrientedGraph> variants;
    std::vector<int> sigma(static_cast<size_t>(base.vertex_count) + 1);
    for (int i = 0; i <= base.vertex_count; ++i) sigma[static_cast<size_t>(i)] = i;
    do {
        variants.push_back(relabel(base, sigma).graph);
    } while (variants.size() < 4000 &&
             std::next_permutation(sigma.begin() + 1, sigma.end()));
    size_t next = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonicalize(variants[next]));
        next = (next + 1) % variants.size();
    }
}
BENCHMARK(BM_CanonicalizeBB)->Arg(5)->Arg(6)->Arg(7)->Arg(8);

void BM_CanonicalizeExhaustive(benchmark::State& state) {
    OrientedGraph g = ring(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonicalize_exhaustive(g));
}
BENCHMARK(BM_CanonicalizeExhaustive)->Arg(5)->Arg(6)->Arg(7);

void BM_Surgery(benchmark::State& state) {
    OrientedGraph g = ring(7);
    for (auto _ : state) benchmark::DoNotOptimize(surgery(g, {1, true}, {5, true}));
}
BENCHMARK(BM_Surgery);

void BM_EnumerateBasis(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            enumerate_graphs(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
}
BENCHMARK(BM_EnumerateBasis)->Args({4, 6})->Args({4, 8})->Args({5, 8});

void BM_Differential(benchmark::State& state) {
    Basis from = enumerate_graphs(4, 8), to = enumerate_graphs(3, 7);
    for (auto _ : state) benchmark::DoNotOptimize(differential_matrix(from, to));
}
BENCHMARK(BM_Differential);

void BM_Residual11K4(benchmark::State& state) {
    AlphaInput input({k4()});
    for (auto _ : state) benchmark::DoNotOptimize(shlb_residual(1, 1, input));
}
BENCHMARK(BM_Residual11K4);

void BM_Residual22ThetaK4(benchmark::State& state) {
    AlphaInput input({theta(), k4()});
    for (auto _ : state) benchmark::DoNotOptimize(shlb_residual(2, 2, input));
}
BENCHMARK(BM_Residual22ThetaK4);

void BM_FamilyBuild(benchmark::State& state) {
    AlphaInput input({theta(), k4()});
    for (auto _ : state) benchmark::DoNotOptimize(FSet(1, 2, input).elements().size());
}
BENCHMARK(BM_FamilyBuild);

} // namespace

BENCHMARK_MAIN();

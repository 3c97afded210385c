#include <benchmark/benchmark.h>

#include "gallai/charfunc.hpp"
#include "gallai/constructions.hpp"
#include "gallai/counting.hpp"
#include "gallai/hypercube_like.hpp"
#include "gallai/rainbow.hpp"
#include "gallai/rng.hpp"
#include "gallai/search.hpp"

using namespace gallai;

static void BM_HypercubeConstruction(benchmark::State& state) {
    unsigned m = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto c = hypercube_colouring(m);
        benchmark::DoNotOptimize(c.raw().data());
    }
}
BENCHMARK(BM_HypercubeConstruction)->DenseRange(6, 12, 2);

static void BM_RainbowEnumeration(benchmark::State& state) {
    unsigned m = static_cast<unsigned>(state.range(0));
    auto c = hypercube_colouring(m);
    for (auto _ : state) {
        auto set = enumerate_rainbow_cliques(c, 3);
        benchmark::DoNotOptimize(set.flat.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(c.edge_count()));
}
BENCHMARK(BM_RainbowEnumeration)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_RainbowEnumerationRandom(benchmark::State& state) {
    Vertex n = static_cast<Vertex>(state.range(0));
    SplitMix64 rng(7);
    CompleteColouring c(n, 3, 0);
    for (Vertex u = 0; u + 1 < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            c.set_colour(u, v, static_cast<Colour>(rng.next_below(3)));
    for (auto _ : state) {
        auto set = enumerate_rainbow_cliques(c, 3);
        benchmark::DoNotOptimize(set.flat.data());
    }
}
BENCHMARK(BM_RainbowEnumerationRandom)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_HarperRecursion(benchmark::State& state) {
    for (auto _ : state)
        for (uint64_t x = 0; x <= (uint64_t(1) << 20); x += 4097)
            benchmark::DoNotOptimize(harper_initial_segment_edges(20, x));
}
BENCHMARK(BM_HarperRecursion);

static void BM_NiceQuadruples(benchmark::State& state) {
    Vertex n = static_cast<Vertex>(state.range(0));
    SplitMix64 rng(11);
    CompleteColouring c(n, 3, 0);
    for (Vertex u = 0; u + 1 < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            c.set_colour(u, v, static_cast<Colour>(rng.next_below(3)));
    for (auto _ : state) {
        auto report = nice_quadruples(c);
        benchmark::DoNotOptimize(report.total);
    }
}
BENCHMARK(BM_NiceQuadruples)->Arg(12)->Arg(24)->Arg(48);

static void BM_ExactTauBnB(benchmark::State& state) {
    Vertex n = static_cast<Vertex>(state.range(0));
    for (auto _ : state) {
        auto result = exact_tau(n, 3, 3, SearchMethod::branch_and_bound);
        benchmark::DoNotOptimize(result.value);
    }
}
BENCHMARK(BM_ExactTauBnB)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_SampleCliqueCount(benchmark::State& state) {
    Vertex n = static_cast<Vertex>(state.range(0));
    uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(sample_clique_count(n, 0.5, 3, seed++));
}
BENCHMARK(BM_SampleCliqueCount)->Arg(16)->Arg(32)->Arg(64);

BENCHMARK_MAIN();

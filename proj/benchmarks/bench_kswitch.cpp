#include <benchmark/benchmark.h>

#include "kswitch/chain.hpp"
#include "kswitch/enumerate.hpp"
#include "kswitch/generators.hpp"
#include "kswitch/reconfig.hpp"
#include "kswitch/rng.hpp"
#include "kswitch/switch_graph.hpp"

using namespace kswitch;

static void BM_EnumeratePerfect(benchmark::State& state) {
    const Graph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_perfect_matchings(g).size());
}
BENCHMARK(BM_EnumeratePerfect)->DenseRange(8, 12, 2);

static void BM_CountPerfectGeneral(benchmark::State& state) {
    const Graph g = gen_random_min_degree(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) / 2, false, 7);
    for (auto _ : state) benchmark::DoNotOptimize(count_perfect(g));
}
BENCHMARK(BM_CountPerfectGeneral)->Arg(16)->Arg(20)->Arg(24);

static void BM_Permanent(benchmark::State& state) {
    const int h = static_cast<int>(state.range(0));
    const Graph g = complete_bipartite(h);
    for (auto _ : state) benchmark::DoNotOptimize(count_perfect(g));
}
BENCHMARK(BM_Permanent)->DenseRange(8, 16, 4);

static void BM_SwitchGraphBuild(benchmark::State& state) {
    const Graph g = complete_graph(static_cast<int>(state.range(0)));
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state) {
        const SwitchGraph h = SwitchGraph::build(g, g.order() / 2, k);
        benchmark::DoNotOptimize(h.num_components());
    }
}
BENCHMARK(BM_SwitchGraphBuild)->Args({8, 2})->Args({10, 2})->Args({10, 3})->Unit(benchmark::kMillisecond);

static void BM_KSwitchPath(benchmark::State& state) {
    const Graph g = complete_bipartite(static_cast<int>(state.range(0)));
    Rng rng(11);
    std::vector<Matching> ms = enumerate_perfect_matchings(g, 100'000);
    for (auto _ : state) {
        const Matching& a = ms[rng.uniform(ms.size())];
        const Matching& b = ms[rng.uniform(ms.size())];
        benchmark::DoNotOptimize(k_switch_path(g, a, b, 2).steps.size());
    }
}
BENCHMARK(BM_KSwitchPath)->Arg(6)->Arg(8);

static void BM_ChainStep(benchmark::State& state) {
    const Graph g = complete_graph(static_cast<int>(state.range(0)));
    const auto kind = static_cast<ChainKind>(state.range(1));
    std::vector<Vertex> mate(g.order());
    for (Vertex v = 0; v < g.order(); ++v) mate[v] = v ^ 1;
    Rng rng(3);
    for (auto _ : state) {
        chain_step(g, kind, mate, rng);
        benchmark::DoNotOptimize(mate.data());
    }
}
BENCHMARK(BM_ChainStep)
    ->Args({16, static_cast<int>(ChainKind::Gamma4)})
    ->Args({16, static_cast<int>(ChainKind::Switch2)})
    ->Args({16, static_cast<int>(ChainKind::Switch3)})
    ->Args({64, static_cast<int>(ChainKind::Gamma4)});

static void BM_ExactDiagnostics(benchmark::State& state) {
    const Graph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exact_diagnostics(g, ChainKind::Switch2).spectral_gap);
}
BENCHMARK(BM_ExactDiagnostics)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

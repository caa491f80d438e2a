#include "rml/constructors.hpp"
#include "rml/counting.hpp"
#include "rml/graph6.hpp"
#include "rml/known_instances.hpp"
#include "rml/optimize.hpp"
#include "rml/ramsey_tools.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_CountMonoCliquePendants(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto h = rml::clique_plus_pendants(4, {1, 0, 0, 0}).flatten();
    const auto chi = rml::random_coloring(n, 2, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(rml::count_mono(h, chi, false, 1));
}
BENCHMARK(BM_CountMonoCliquePendants)->Arg(12)->Arg(18)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_CountMonoPerVertex(benchmark::State& state)
{
    const auto h = rml::clique(4);
    const auto chi = rml::turan_coloring(static_cast<int>(state.range(0)), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(rml::count_mono(h, chi, true, 1));
}
BENCHMARK(BM_CountMonoPerVertex)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

void BM_MaxClique42(benchmark::State& state)
{
    const auto g = rml::graph6_decode(rml::kR55Graph42A);
    const auto gc = g.complement();
    for (auto _ : state) {
        benchmark::DoNotOptimize(rml::max_clique(g));
        benchmark::DoNotOptimize(rml::max_clique(gc));
    }
}
BENCHMARK(BM_MaxClique42)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveTriangle(benchmark::State& state)
{
    const auto h = rml::clique(3);
    rml::ExhaustiveOptions o;
    o.threads = 1;
    o.collect_minimizers = false;
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(rml::exhaustive_min(h, n, 2, o));
    state.counters["colorings"] = static_cast<double>(rml::exhaustive_work(n, 2, false));
}
BENCHMARK(BM_ExhaustiveTriangle)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_EdgeMoveScan(benchmark::State& state)
{
    const auto h = rml::clique_plus_pendants(4, {1, 0, 0, 0}).flatten();
    rml::RecolorEngine engine(h, rml::turan_coloring(static_cast<int>(state.range(0)), 4), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(rml::find_edge_move(engine, rml::Policy::steepest));
}
BENCHMARK(BM_EdgeMoveScan)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

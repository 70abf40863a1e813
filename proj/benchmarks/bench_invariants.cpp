#include <benchmark/benchmark.h>

#include "knotpos/generators.hpp"
#include "knotpos/obstruction.hpp"
#include "knotpos/skein.hpp"
#include "knotpos/statesum.hpp"

using namespace knotpos;

static void BM_BracketTorus(benchmark::State& state) {
    Diagram d = torus_braid(static_cast<int>(state.range(0)));
    StateSumOptions opt;
    opt.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d, opt));
}
BENCHMARK(BM_BracketTorus)->DenseRange(8, 16, 2)->Unit(benchmark::kMillisecond);

static void BM_JonesNamed(benchmark::State& state) {
    Diagram d = named_knot("ap16");
    for (auto _ : state) benchmark::DoNotOptimize(jones(d));
}
BENCHMARK(BM_JonesNamed)->Unit(benchmark::kMillisecond);

static void BM_HomflyPretzel(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    Diagram d = pretzel(-p, -p, -p);
    for (auto _ : state) benchmark::DoNotOptimize(homfly(d));
}
BENCHMARK(BM_HomflyPretzel)->DenseRange(1, 5, 2)->Unit(benchmark::kMillisecond);

static void BM_HomflyNamed(benchmark::State& state) {
    Diagram d = named_knot("ap15a");
    for (auto _ : state) benchmark::DoNotOptimize(homfly(d));
}
BENCHMARK(BM_HomflyNamed)->Unit(benchmark::kMillisecond);

static void BM_ConwayAlexander(benchmark::State& state) {
    Diagram base = named_knot("ap16");
    Diagram d = insert_positive_loops(base, family_arc(base), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(conway_alexander(d));
}
BENCHMARK(BM_ConwayAlexander)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_Analyze(benchmark::State& state) {
    Diagram d = named_knot("ap15b");
    for (auto _ : state) benchmark::DoNotOptimize(analyze(d));
}
BENCHMARK(BM_Analyze)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

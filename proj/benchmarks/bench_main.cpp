#include <benchmark/benchmark.h>

#include "eqtri/assembly.hpp"
#include "eqtri/block.hpp"
#include "eqtri/homology.hpp"
#include "eqtri/torus.hpp"

using namespace eqtri;

static void BM_Torus(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(torus_complex(n));
}
BENCHMARK(BM_Torus)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

static void BM_Block(benchmark::State& state) {
    const char* specs[] = {"cs", "zc", "ccc", "zcc"};
    auto spec = parse_factor_spec(specs[state.range(0)]);
    state.SetLabel(specs[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(build_block(spec));
}
BENCHMARK(BM_Block)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_AssembleCpn(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(assemble_cpn(n));
}
BENCHMARK(BM_AssembleCpn)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_Homology(benchmark::State& state) {
    auto K = assemble_cpn(static_cast<int>(state.range(0))).complex;
    for (auto _ : state) benchmark::DoNotOptimize(homology(K));
}
BENCHMARK(BM_Homology)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

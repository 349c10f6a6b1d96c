#include <benchmark/benchmark.h>

#include "tightcat/corpus.hpp"
#include "tightcat/cuts.hpp"
#include "tightcat/groups.hpp"
#include "tightcat/poset.hpp"

using namespace tightcat;

namespace {

// Z4 acting freely on `orbits` orbits: 4^(4 orbits) endomorphisms.
Action free_z4(int orbits) { return to_action(free_action(cyclic_group(4), orbits, Variance::Left)); }

void BM_EquivariantMaps(benchmark::State& state) {
    Action a = free_z4(static_cast<int>(state.range(0)));
    Options opt;
    opt.cap = 1u << 30;
    for (auto _ : state) benchmark::DoNotOptimize(equivariant_maps(a, a, opt));
}

void BM_EquivariantMapsSerial(benchmark::State& state) {
    Action a = free_z4(static_cast<int>(state.range(0)));
    Options opt;
    opt.cap = 1u << 30;
    for (auto _ : state) benchmark::DoNotOptimize(equivariant_maps_serial(a, a, opt));
}

FinPoset bench_poset(int n) {
    std::mt19937 rng(7);
    return random_poset(n, 0.3, rng);
}

void BM_OracleDM(benchmark::State& state) {
    FinPoset p = bench_poset(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(oracle_dm(p));
}

void BM_OracleDMSerial(benchmark::State& state) {
    FinPoset p = bench_poset(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(oracle_dm_serial(p));
}

void BM_ClosureDM(benchmark::State& state) {
    FinPoset p = bench_poset(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dm_completion(p));
}

void BM_EnumerateCuts(benchmark::State& state) {
    CatPtr c = thin_category(powerset_lattice(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_cuts(c, 1));
}

}  // namespace

BENCHMARK(BM_EquivariantMaps)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EquivariantMapsSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleDM)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleDMSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureDM)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateCuts)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

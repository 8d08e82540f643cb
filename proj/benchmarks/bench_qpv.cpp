#include <benchmark/benchmark.h>

#include "qpv/grouppois.hpp"
#include "qpv/multivec.hpp"
#include "qpv/orbits.hpp"
#include "qpv/pbw.hpp"
#include "qpv/polyfield.hpp"
#include "qpv/quantize.hpp"

using namespace qpv;

static void BM_AlgebraicSchouten(benchmark::State& state) {
  const auto L = make_algebra(state.range(0) == 0 ? "A2" : "B3");
  const auto r = canonical_tensors(L).r_sd;
  for (auto _ : state) benchmark::DoNotOptimize(algebraic_schouten(r, r));
}
BENCHMARK(BM_AlgebraicSchouten)->Arg(0)->Arg(1);

static void BM_SchoutenNijenhuisRM(benchmark::State& state) {
  const auto L = make_algebra("A2");
  const auto rM = rmatrix_bracket(canonical_tensors(L).r_sd);
  for (auto _ : state) benchmark::DoNotOptimize(schouten_nijenhuis(rM, rM));
}
BENCHMARK(BM_SchoutenNijenhuisRM);

static void BM_SolveEquivariant(benchmark::State& state) {
  const auto L = make_algebra(state.range(0) == 0 ? "A2" : "B2");
  for (auto _ : state) benchmark::DoNotOptimize(solve_equivariant(L, 2, 2));
}
BENCHMARK(BM_SolveEquivariant)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_PbwFlatness(benchmark::State& state) {
  const auto L = make_algebra("A2");
  for (auto _ : state) benchmark::DoNotOptimize(pbw_flatness(*L, static_cast<int>(state.range(0)), 0));
}
BENCHMARK(BM_PbwFlatness)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Pentagon(benchmark::State& state) {
  const auto L = make_algebra(state.range(0) == 0 ? "A1" : "A2");
  for (auto _ : state) benchmark::DoNotOptimize(pentagon_order2_check(L));
}
BENCHMARK(BM_Pentagon)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_SklyaninJacobiator(benchmark::State& state) {
  const auto L = make_algebra(state.range(0) == 2 ? "A1" : "A2");
  const auto b = build_sklyanin_bracket(canonical_tensors(L).r_sd);
  for (auto _ : state) benchmark::DoNotOptimize(jacobiator_on_generators(b));
}
BENCHMARK(BM_SklyaninJacobiator)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_GoodOrbitsE8(benchmark::State& state) {
  const auto rs = build_root_system(Series::E, 8);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_good_orbits(rs));
}
BENCHMARK(BM_GoodOrbitsE8);
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "amalgenus/catalog.hpp"
#include "amalgenus/morphisms.hpp"

using namespace amalgenus;

static void BM_ComputeAut(benchmark::State& state, const char* name) {
  auto g = builtin_group(name)->group;
  for (auto _ : state) {
    auto aut = compute_aut(g);
    benchmark::DoNotOptimize(aut->order());
  }
}
BENCHMARK_CAPTURE(BM_ComputeAut, D8, "D8");
BENCHMARK_CAPTURE(BM_ComputeAut, C2_cubed, "C2^3");
BENCHMARK_CAPTURE(BM_ComputeAut, D16, "D16");
BENCHMARK_CAPTURE(BM_ComputeAut, SL2F3, "SL2F3");
BENCHMARK_CAPTURE(BM_ComputeAut, S4, "S4");

static void BM_OutQuotient(benchmark::State& state) {
  auto aut = compute_aut(builtin_group("C2^3")->group);
  for (auto _ : state) benchmark::DoNotOptimize(out_quotient(aut)->order());
}
BENCHMARK(BM_OutQuotient);

static void BM_EnumerateSubgroups(benchmark::State& state, const char* name) {
  auto g = builtin_group(name)->group;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subgroups(g).size());
}
BENCHMARK_CAPTURE(BM_EnumerateSubgroups, D12, "D12");
BENCHMARK_CAPTURE(BM_EnumerateSubgroups, S4, "S4");
BENCHMARK_CAPTURE(BM_EnumerateSubgroups, C2_fourth, "C2^4");

static void BM_GL32(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(general_linear_group(3, 2)->order());
}
BENCHMARK(BM_GL32)->Unit(benchmark::kMillisecond);

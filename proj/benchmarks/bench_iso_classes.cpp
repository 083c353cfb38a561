#include <benchmark/benchmark.h>

#include "amalgenus/amalgam.hpp"
#include "amalgenus/catalog.hpp"

using namespace amalgenus;

namespace {

struct Triple {
  const char* g1;
  const char* h;
  const char* g2;
};

}  // namespace

static void BM_FormulaCount(benchmark::State& state, Triple t) {
  auto g1 = builtin_group(t.g1)->group, g2 = builtin_group(t.g2)->group, h = builtin_group(t.h)->group;
  for (auto _ : state) benchmark::DoNotOptimize(count_classes_pushout_formula(h, g1, g2).count);
}
static void BM_OracleCount(benchmark::State& state, Triple t) {
  auto g1 = builtin_group(t.g1)->group, g2 = builtin_group(t.g2)->group, h = builtin_group(t.h)->group;
  for (auto _ : state) benchmark::DoNotOptimize(count_classes_pushout_family(h, g1, g2).count);
}
BENCHMARK_CAPTURE(BM_FormulaCount, D8_klein_D8, Triple{"D8", "C2xC2", "D8"});
BENCHMARK_CAPTURE(BM_OracleCount, D8_klein_D8, Triple{"D8", "C2xC2", "D8"});
BENCHMARK_CAPTURE(BM_FormulaCount, S4_klein_D16, Triple{"S4", "C2xC2", "D16"});
BENCHMARK_CAPTURE(BM_OracleCount, S4_klein_D16, Triple{"S4", "C2xC2", "D16"});
BENCHMARK_CAPTURE(BM_FormulaCount, D8xC2_klein_S4, Triple{"D8xC2", "C2xC2", "S4"});
BENCHMARK_CAPTURE(BM_OracleCount, D8xC2_klein_S4, Triple{"D8xC2", "C2xC2", "S4"});

static void BM_SmallSweep(benchmark::State& state) {
  std::vector<GroupPtr> groups;
  for (const auto& e : small_catalog()) groups.push_back(e.group);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_sweep(groups, 6).agreed);
}
BENCHMARK(BM_SmallSweep)->Unit(benchmark::kMillisecond);

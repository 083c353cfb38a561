#include <benchmark/benchmark.h>

#include "amalgenus/catalog.hpp"
#include "amalgenus/genus.hpp"

using namespace amalgenus;

static void BM_DeriveAndCount(benchmark::State& state, const char* name, const char* sub) {
  auto e = *builtin_group(name);
  const auto& h = e.subgroups.at(sub);
  for (auto _ : state) {
    auto in = derive_genus_input(e.group, h, e.group, h);
    benchmark::DoNotOptimize(genus_fixed(in).value);
  }
}
BENCHMARK_CAPTURE(BM_DeriveAndCount, D8_klein, "D8", "klein");
BENCHMARK_CAPTURE(BM_DeriveAndCount, D8_c4, "D8", "c4");

// Trivial images in a large Out: every element is its own class.
static void BM_GenusFixedLargeOut(benchmark::State& state) {
  auto h = builtin_group("C2^3")->group;
  auto out = out_quotient(compute_aut(h));
  const auto& og = out->group;
  auto triv = trivial_subgroup(og);
  auto whole = whole_group(og);
  GenusInput in{out, triv, triv, whole, whole, {og->identity()}, triv, triv, og->identity(),
                GenusMode::kSymmetric, NplusPolicy::kExact, false, true, {}};
  for (auto _ : state) benchmark::DoNotOptimize(genus_fixed(in).value);
}
BENCHMARK(BM_GenusFixedLargeOut)->Unit(benchmark::kMillisecond);

static void BM_Conditions(benchmark::State& state) {
  auto g = builtin_group("S4")->group;
  auto subs = enumerate_subgroups(g).subgroups;
  const auto& h = subs[subs.size() / 2];
  for (auto _ : state) benchmark::DoNotOptimize(check_simplifications(g, h, g, h).any());
}
BENCHMARK(BM_Conditions);

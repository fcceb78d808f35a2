#include <benchmark/benchmark.h>

#include "sylab/blocks.hpp"
#include "sylab/chartab.hpp"
#include "sylab/groups.hpp"
#include "sylab/sylow.hpp"

using namespace sylab;

namespace {

PermGroup fresh(const PermGroup& g) { return PermGroup(g.degree(), g.generators(), g.name()); }

void BM_ChainM24(benchmark::State& state) {
  auto m24 = builtin_group("m24");
  for (auto _ : state) {
    auto g = fresh(m24);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_ChainM24)->Unit(benchmark::kMillisecond);

void BM_LocalDataM24(benchmark::State& state) {
  auto m24 = builtin_group("m24");
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto g = fresh(m24);
    benchmark::DoNotOptimize(local_data(g, p).automizer_order);
  }
}
BENCHMARK(BM_LocalDataM24)->Arg(3)->Arg(7)->Arg(23)->Unit(benchmark::kMillisecond);

void BM_ClassesA9(benchmark::State& state) {
  auto a9 = alternating(9);
  for (auto _ : state) {
    auto g = fresh(a9);
    benchmark::DoNotOptimize(g.classes().count());
  }
}
BENCHMARK(BM_ClassesA9)->Unit(benchmark::kMillisecond);

void BM_CharacterTable(benchmark::State& state, const char* name) {
  auto base = builtin_group(name);
  for (auto _ : state) {
    auto g = fresh(base);
    forget_tables();
    benchmark::DoNotOptimize(character_table(g).size());
  }
}
BENCHMARK_CAPTURE(BM_CharacterTable, psl2_11, "psl2_11")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CharacterTable, m11, "m11")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CharacterTable, s8, "s8")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CharacterTable, m24, "m24")->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_RadicalsA9(benchmark::State& state) {
  auto a9 = alternating(9);
  for (auto _ : state) benchmark::DoNotOptimize(p_radical_subgroups(a9, 3).size());
}
BENCHMARK(BM_RadicalsA9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

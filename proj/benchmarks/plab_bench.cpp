#include <benchmark/benchmark.h>

#include "plab/theorems.hpp"

using namespace plab;

static void BM_RingBuild(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    auto r = build_ring(RingSpec::zn(n));
    benchmark::DoNotOptimize(r->ideals().size());
  }
}
BENCHMARK(BM_RingBuild)->Arg(36)->Arg(128)->Arg(256);

static void BM_Lattice(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    auto m = build_module(ModuleSpec::free(RingSpec::zn(2), k, ScalarMode::integer_image));
    benchmark::DoNotOptimize(m->lattice().size());
  }
}
BENCHMARK(BM_Lattice)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Wc1aZ36Squared(benchmark::State& state) {
  ModuleOptions o;
  o.module_cap = 2048;
  const auto m = build_module(ModuleSpec::free(RingSpec::zn(36), 2, ScalarMode::integer_image), o);
  const auto ctx = std::make_shared<const ModuleContext>(m);
  const Elem g[] = {m->compose(std::vector<Elem>{2, 0}), m->compose(std::vector<Elem>{0, 3})};
  const auto n = submodule_generated(*m, g);
  for (auto _ : state) benchmark::DoNotOptimize(SubmoduleAnalyzer(ctx, n).check(PredicateId::wc1a).holds);
}
BENCHMARK(BM_Wc1aZ36Squared)->Unit(benchmark::kMillisecond);

static void BM_ClassifyLattice(benchmark::State& state) {
  const auto m = build_module(ModuleSpec::free(RingSpec::zn(4), 3, ScalarMode::ring));
  const auto ctx = std::make_shared<const ModuleContext>(m);
  for (auto _ : state)
    for (const auto& n : m->lattice())
      if (n.is_proper()) benchmark::DoNotOptimize(SubmoduleAnalyzer(ctx, n).classify().verdicts[4].holds);
}
BENCHMARK(BM_ClassifyLattice)->Unit(benchmark::kMillisecond);

static void BM_Check(benchmark::State& state, const char* id) {
  const Workspace ws(default_catalog());
  for (auto _ : state) benchmark::DoNotOptimize(run_check(id, ws).instances_checked);
}
BENCHMARK_CAPTURE(BM_Check, tmain1, "T14")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Check, theo7, "T15")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Check, tmain2, "T18")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

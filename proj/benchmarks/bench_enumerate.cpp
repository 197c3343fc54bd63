#include <benchmark/benchmark.h>

#include "qposet/enumerate.hpp"
#include "qposet/harness.hpp"

using namespace qposet;

static void BM_EnumerateOrtho(benchmark::State& state) {
  EnumerationSpec spec;
  spec.max_n = static_cast<std::size_t>(state.range(0));
  std::size_t n = 0;
  for (auto _ : state) {
    n = 0;
    enumerate(spec, [&](const Instance&) {
      ++n;
      return true;
    });
  }
  state.counters["structures"] = static_cast<double>(n);
}
BENCHMARK(BM_EnumerateOrtho)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_EnumerateLabeled(benchmark::State& state) {
  EnumerationSpec spec;
  spec.max_n = static_cast<std::size_t>(state.range(0));
  spec.cls = StructureClass::BoundedPoset;
  spec.up_to_iso = false;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(spec).size());
}
BENCHMARK(BM_EnumerateLabeled)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_Harness(benchmark::State& state) {
  HarnessSpec spec;
  spec.max_n = static_cast<std::size_t>(state.range(0));
  spec.jobs = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_harness(spec, theorem_ids()).size());
}
BENCHMARK(BM_Harness)->Args({6, 1})->Args({7, 1})->Args({7, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

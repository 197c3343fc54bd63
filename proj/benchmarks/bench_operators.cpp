#include <benchmark/benchmark.h>

#include "qposet/adjoint.hpp"
#include "qposet/amalgam.hpp"
#include "qposet/catalog.hpp"
#include "qposet/implication.hpp"
#include "qposet/io.hpp"

using namespace qposet;

namespace {
OrthoPoset fixture(const char* name) {
  return to_ortho(load_structure(std::string(QPOSET_FIXTURES) + "/" + name + ".poset"));
}
}  // namespace

static void BM_ImplI(benchmark::State& state) {
  const auto o = boolean_algebra(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(impl_I(o));
  state.counters["elements"] = static_cast<double>(o.size());
}
BENCHMARK(BM_ImplI)->DenseRange(2, 5);

static void BM_SasakiTables(benchmark::State& state) {
  const auto o = fixture("fig2b");
  for (auto _ : state) {
    benchmark::DoNotOptimize(sasaki_proj(o));
    benchmark::DoNotOptimize(sasaki_impl(o));
  }
}
BENCHMARK(BM_SasakiTables);

static void BM_Residuate(benchmark::State& state) {
  const auto o = boolean_algebra(static_cast<std::size_t>(state.range(0)));
  const auto imp = impl_I(o);
  for (auto _ : state) benchmark::DoNotOptimize(try_residuate(o, imp).adjoint());
}
BENCHMARK(BM_Residuate)->DenseRange(2, 4);

static void BM_ParaorthomodularCheck(benchmark::State& state) {
  const auto o = boolean_algebra(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_paraorthomodular(o).holds);
}
BENCHMARK(BM_ParaorthomodularCheck)->DenseRange(3, 6);

static void BM_ClassifyCycle(benchmark::State& state) {
  const auto f = greechie_cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_amalgam(f).agree());
}
BENCHMARK(BM_ClassifyCycle)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

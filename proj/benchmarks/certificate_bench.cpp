#include <benchmark/benchmark.h>

#include "chirality/dga/minimal_model.hpp"
#include "chirality/groups/metacyclic.hpp"
#include "chirality/products/planner.hpp"

using namespace chirality;

static void BM_VerifyDim9(benchmark::State& state) {
  const auto m = dga::minimal_model();
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dga::verify_dim9(m, bound));
}
BENCHMARK(BM_VerifyDim9)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_Dim13(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dga::dim13_check(bound));
}
BENCHMARK(BM_Dim13)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_PlanAll(benchmark::State& state) {
  const bool sc = state.range(0) != 0;
  for (auto _ : state)
    for (std::size_t n = 1; n <= 64; ++n) benchmark::DoNotOptimize(products::plan_dimension(n, sc));
}
BENCHMARK(BM_PlanAll)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_H4Search(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(groups::search_tuples(10, bound));
}
BENCHMARK(BM_H4Search)->Arg(200)->Arg(2000);

static void BM_DeterminismHash(benchmark::State& state) {
  const auto cert = products::to_certificate(products::plan_dimension(13, true));
  for (auto _ : state) benchmark::DoNotOptimize(determinism_hash(cert));
}
BENCHMARK(BM_DeterminismHash);

#include <benchmark/benchmark.h>

#include "asms/assembly.hpp"
#include "asms/verify.hpp"

namespace {

void BM_SearchSequence(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(asms::search_sequence(4, m));
}
BENCHMARK(BM_SearchSequence)->Arg(5)->Arg(17)->Arg(25)->Arg(45)->Unit(benchmark::kMillisecond);

void BM_Assemble(benchmark::State& state) {
  const auto params = asms::derive_parameters(static_cast<int>(state.range(0)));
  const auto seq = asms::search_sequence(4, params.m);
  for (auto _ : state) benchmark::DoNotOptimize(asms::assemble(params, seq));
}
BENCHMARK(BM_Assemble)->Arg(21)->Arg(33)->Arg(39)->Arg(51)->Unit(benchmark::kMicrosecond);

void BM_Verify(benchmark::State& state) {
  const auto params = asms::derive_parameters(static_cast<int>(state.range(0)));
  const auto sq = asms::assemble(params, asms::search_sequence(4, params.m));
  for (auto _ : state) benchmark::DoNotOptimize(asms::verify_asms(sq.entries));
}
BENCHMARK(BM_Verify)->Arg(21)->Arg(51)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

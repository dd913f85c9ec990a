#include <benchmark/benchmark.h>

#include "combid/verify.hpp"

namespace {

void sweep_benchmark(benchmark::State& state, const char* id, combid::Mode mode) {
  const auto* spec = combid::find_identity(id);
  if (spec == nullptr) {
    state.SkipWithError("unknown identity");
    return;
  }
  combid::SweepOptions options;
  options.samples = static_cast<std::uint64_t>(state.range(0));
  options.seed = 42;
  options.mode = mode;
  options.keep_records = false;
  for (auto _ : state) benchmark::DoNotOptimize(combid::sweep(*spec, options));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepNumeric(benchmark::State& state) { sweep_benchmark(state, "eq08", combid::Mode::kNumeric); }
BENCHMARK(BM_SweepNumeric)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SweepHarmonicNumeric(benchmark::State& state) {
  sweep_benchmark(state, "eq24", combid::Mode::kNumeric);
}
BENCHMARK(BM_SweepHarmonicNumeric)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SweepExact(benchmark::State& state) { sweep_benchmark(state, "eq08", combid::Mode::kExact); }
BENCHMARK(BM_SweepExact)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

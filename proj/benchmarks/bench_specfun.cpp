#include <benchmark/benchmark.h>

#include "combid/exact.hpp"
#include "combid/specfun.hpp"
#include "combid/telescope.hpp"

namespace {

using combid::Complex;

void BM_Gamma(benchmark::State& state) {
  Complex s(0.37, 1.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(combid::gamma(s));
    s += Complex(1e-9, 0.0);
  }
}
BENCHMARK(BM_Gamma);

void BM_BinomialGammaRoute(benchmark::State& state) {
  const Complex x(7.25, -0.5);
  const Complex y(2.5, 0.75);
  for (auto _ : state) benchmark::DoNotOptimize(combid::binomial(x, y));
}
BENCHMARK(BM_BinomialGammaRoute);

void BM_BinomialProductRoute(benchmark::State& state) {
  const Complex x(40.5, 0.25);
  const Complex y(static_cast<double>(state.range(0)), 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(combid::binomial(x, y));
}
BENCHMARK(BM_BinomialProductRoute)->Arg(4)->Arg(32)->Arg(64);

void BM_GenHarmonic(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(combid::gen_harmonic(Complex(0.5, 0.25), n, Complex(1.5, -0.3)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GenHarmonic)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_ProductDifference(benchmark::State& state) {
  combid::FactorSystem f{Complex(1.5, 0.5), Complex(-0.75, 2.0), {}, {}};
  for (std::int64_t k = 0; k < state.range(0); ++k) {
    f.z.emplace_back(0.1 * static_cast<double>(k), -0.2);
    f.w.emplace_back(1.0 + 0.05 * static_cast<double>(k), 0.3);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(combid::product_difference_lhs(f));
    benchmark::DoNotOptimize(combid::product_difference_rhs(f));
  }
}
BENCHMARK(BM_ProductDifference)->Arg(4)->Arg(12)->Arg(64);

void BM_BinomialExact(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(combid::binomial_exact(n, n / 2));
}
BENCHMARK(BM_BinomialExact)->Arg(20)->Arg(120)->Arg(500);

void BM_GenHarmonicExact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(combid::gen_harmonic_exact(3, state.range(0), 2));
}
BENCHMARK(BM_GenHarmonicExact)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();

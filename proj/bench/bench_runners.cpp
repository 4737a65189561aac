#include <benchmark/benchmark.h>

#include "krall/hermite.hpp"
#include "krall/krall.hpp"
#include "krall/numeric.hpp"
#include "krall/suites.hpp"

using namespace krall;

namespace {

SuiteConfig suite_config(int n_max) {
  SuiteConfig c;
  c.b_samples = {Scalar(3, 2), Scalar(-5, 2), Scalar(13, 7), Scalar(-3, 7)};
  c.n_max = n_max;
  return c;
}

template <Runner R>
void BM_suite(benchmark::State& state) {
  const SuiteConfig c = suite_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(Suite::all, c, R));
}

template <bool Parallel>
void BM_contour(benchmark::State& state) {
  const KrallContext k(Scalar(3, 2));
  const int n = static_cast<int>(state.range(0));
  ContourSpec spec = ContourSpec::defaults(1.5);
  spec.panels = 32;
  for (auto _ : state) {
    for (int m = 0; m <= n; ++m)
      benchmark::DoNotOptimize(Parallel ? contour_eta(k.hhat(m), k.hhat(n), spec)
                                        : contour_eta_serial(k.hhat(m), k.hhat(n), spec));
  }
}

}  // namespace

BENCHMARK(BM_suite<Runner::serial>)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_suite<Runner::parallel>)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_contour<false>)->Arg(6)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_contour<true>)->Arg(6)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();

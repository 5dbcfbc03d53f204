#include <benchmark/benchmark.h>

#include "stickylab/catalog.hpp"
#include "stickylab/convergence.hpp"
#include "stickylab/humps.hpp"
#include "stickylab/seqspace.hpp"

using namespace stickylab;

static void BM_ConvolveSpikeHaar(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  const auto z = humps::spike(k, 0.375);
  const auto h = humps::haar_kernel(4 * k, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(humps::convolve_circle(z, h));
}
BENCHMARK(BM_ConvolveSpikeHaar)->RangeMultiplier(4)->Range(4, 256);

static void BM_StickyDetector(benchmark::State& state) {
  const auto fam = catalog::builtin("scaled-bump-exp");
  const auto sched = ResolutionSchedule::defaults();
  for (auto _ : state) benchmark::DoNotOptimize(convergence::detect_sticky(fam, *fam.label.pointwise_limit, sched));
}
BENCHMARK(BM_StickyDetector)->Unit(benchmark::kMillisecond);

static void BM_LsNormPeriodic(benchmark::State& state) {
  const auto u = seqspace::TailedSequence::periodic({1.0, -3.0, 2.0, 0.5}, std::vector<double>(64, 0.25));
  for (auto _ : state) benchmark::DoNotOptimize(seqspace::ls_norm(u));
}
BENCHMARK(BM_LsNormPeriodic);

static void BM_PoissonSum(benchmark::State& state) {
  const auto in = humps::PoissonInput::builtin();
  const double s = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(humps::poisson_sum(in, s));
}
BENCHMARK(BM_PoissonSum)->Arg(1)->Arg(20)->Arg(100);
BENCHMARK_MAIN();

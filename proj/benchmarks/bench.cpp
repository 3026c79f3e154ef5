#include <benchmark/benchmark.h>

#include "dtdd/analytic.hpp"
#include "dtdd/jet.hpp"
#include "dtdd/simulator.hpp"
#include "dtdd/special.hpp"

using namespace dtdd;

namespace {

void BM_JetExpLog(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const Jet x = Jet::variable(order, 1.7, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(exp(log(x + 1.0)));
}
BENCHMARK(BM_JetExpLog)->Arg(1)->Arg(7)->Arg(15);

void BM_Theta(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(theta(4.0, 1.0, 0.37, 2.5));
}
BENCHMARK(BM_Theta);

void BM_Laplace(benchmark::State& state) {
  const NetworkConfig cfg;
  const TierPmf pmf = tier_pmf(cfg);
  LaplaceParams p;
  p.direction = state.range(1) ? Direction::uplink : Direction::downlink;
  p.r0 = 12.0;
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(laplace_relative(cfg, pmf, p, 2e4, order));
}
BENCHMARK(BM_Laplace)->Args({0, 0})->Args({7, 0})->Args({0, 1})->Args({7, 1})->Unit(benchmark::kMillisecond);

void BM_SuccessOverall(benchmark::State& state) {
  const NetworkConfig cfg;
  const TierPmf pmf = tier_pmf(cfg);
  const Method m = state.range(0) ? Method::alzer_bound : Method::exact;
  for (auto _ : state) benchmark::DoNotOptimize(success_overall(cfg, pmf, Direction::downlink, m));
}
BENCHMARK(BM_SuccessOverall)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_Drop(benchmark::State& state) {
  const NetworkConfig cfg;
  const Direction d = state.range(0) ? Direction::uplink : Direction::downlink;
  std::uint64_t i = 0;
  for (auto _ : state) {
    Rng rng = drop_rng(1, i++);
    benchmark::DoNotOptimize(run_drop(cfg, d, rng));
  }
}
BENCHMARK(BM_Drop)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

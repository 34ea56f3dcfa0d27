#include <benchmark/benchmark.h>

#include "celent/criteria.hpp"
#include "celent/dynamics.hpp"
#include "celent/oracle.hpp"
#include "celent/scenario.hpp"

using namespace celent;

namespace {

void BM_MomentsVerbatim(benchmark::State& state) {
  const MomentEvaluator eval({0.5, 0.75, 0.0, 0.25, 10.0});
  double t = 0.0;
  for (auto _ : state) {
    t = t > 50.0 ? 0.1 : t + 0.37;
    benchmark::DoNotOptimize(eval.at(t, MomentRoute::kVerbatim));
  }
}
BENCHMARK(BM_MomentsVerbatim);

void BM_MomentsDegenerateSeries(benchmark::State& state) {
  const MomentEvaluator eval({0.5, 1.0, 0.0, 0.0, 10.0});
  double t = 0.0;
  for (auto _ : state) {
    t = t > 50.0 ? 0.1 : t + 0.37;
    benchmark::DoNotOptimize(eval.at(t));
  }
}
BENCHMARK(BM_MomentsDegenerateSeries);

void BM_Report(benchmark::State& state) {
  const MomentEvaluator eval({0.5, 1.0, 10.0, 0.0, 10.0}, Stability::kAllowGrowth);
  double t = 0.0;
  for (auto _ : state) {
    t = t > 50.0 ? 0.1 : t + 0.37;
    benchmark::DoNotOptimize(report(eval.at(t)));
  }
}
BENCHMARK(BM_Report);

void BM_RunPreset(benchmark::State& state) {
  ScenarioConfig cfg = preset("fig1");
  cfg.t_grid.n_points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 4);
}
BENCHMARK(BM_RunPreset)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_OracleCompare(benchmark::State& state) {
  const auto grid = random_stable_grid(10, 10, 1);
  for (auto _ : state) benchmark::DoNotOptimize(compare(grid, 1e-6));
}
BENCHMARK(BM_OracleCompare)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "impois/dist.hpp"
#include "impois/experiments.hpp"
#include "impois/ordering.hpp"
#include "impois/two_sided.hpp"

namespace {

void BM_BuildRanking(benchmark::State& state) {
  const double theta0 = static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto r = impois::build_ranking(theta0, 1e-10);
    benchmark::DoNotOptimize(r.support.data());
  }
}
BENCHMARK(BM_BuildRanking)->Arg(5)->Arg(20)->Arg(100);

void BM_PointPlausibilityCached(benchmark::State& state) {
  impois::point_plausibility(7, 7.0, 1e-10);  // warm the cache
  for (auto _ : state) {
    double pl = impois::point_plausibility(7, 7.0, 1e-10);
    benchmark::DoNotOptimize(pl);
  }
}
BENCHMARK(BM_PointPlausibilityCached);

void BM_PlausibilityInterval(benchmark::State& state) {
  const int x = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto iv = impois::plausibility_interval(x, 0.1, 1e-10);
    benchmark::DoNotOptimize(iv.upper);
  }
}
BENCHMARK(BM_PlausibilityInterval)->Arg(0)->Arg(7)->Arg(50);

void BM_PoissonSample(benchmark::State& state) {
  impois::UniformStream stream(42, 0);
  for (auto _ : state) {
    int x = impois::poisson_sample(7.0, stream);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_PoissonSample);

void BM_PlCdfSimulation(benchmark::State& state) {
  impois::SimConfig cfg;
  cfg.theta0 = 7.0;
  cfg.theta_true_list = {7.0};
  cfg.n_samples = state.range(0);
  cfg.seed = 42;
  cfg.alpha_grid = impois::SimConfig::default_alpha_grid();
  for (auto _ : state) {
    auto rep = impois::pl_cdf_simulation(cfg, 1);
    benchmark::DoNotOptimize(rep.rows.size());
  }
}
BENCHMARK(BM_PlCdfSimulation)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

// Parallel kernels against their serial references: optimizer restarts and
// sweep grid points. Speedup depends on the core count (OMP_NUM_THREADS).

#include <benchmark/benchmark.h>

#include "discord/measures.hpp"
#include "discord/state_zoo.hpp"
#include "discord/sweep.hpp"

namespace {

using namespace discord;

template <GdSearchResult (*Search)(const DensityMatrix&, const OptimizerConfig&)>
void bm_gd(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const DensityMatrix rho = random_mixed(m, 3, 3 * m, 1);
  const OptimizerConfig cfg{.restarts = 16, .seed = 2};
  for (auto _ : state) benchmark::DoNotOptimize(Search(rho, cfg).value);
}

template <std::vector<SweepRow> (*Run)(const SweepSpec&)>
void bm_sweep(benchmark::State& state) {
  SweepSpec spec;
  spec.family = Family::werner;
  spec.m = static_cast<int>(state.range(0));
  spec.start = -1;
  spec.stop = 1;
  spec.steps = 21;
  spec.optimizer.restarts = 4;
  for (auto _ : state) benchmark::DoNotOptimize(Run(spec).size());
}

}  // namespace

BENCHMARK(bm_gd<gd_numeric_serial>)->Name("gd_numeric/serial")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_gd<gd_numeric>)->Name("gd_numeric/parallel")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_sweep<run_sweep_serial>)->Name("sweep/serial")->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_sweep<run_sweep>)->Name("sweep/parallel")->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include "nrenergy/cost_model.hpp"
#include "nrenergy/data_paths.hpp"
#include "nrenergy/opcount.hpp"
#include "nrenergy/scenario.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace nrenergy;

void BM_Derive(benchmark::State& state)
{
  scenario sc;
  sc.n_prb = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(derive(sc));
  }
}
BENCHMARK(BM_Derive)->Arg(6)->Arg(52)->Arg(273);

void BM_TallyPipeline(benchmark::State& state)
{
  scenario sc;
  sc.n_prb                = static_cast<unsigned>(state.range(0));
  const derived_params d  = derive(sc);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tally_pipeline(sc, d));
  }
}
BENCHMARK(BM_TallyPipeline)->Arg(6)->Arg(52)->Arg(273);

void BM_BuildReport(benchmark::State& state)
{
  const auto table   = load_cost_table(default_cost_table_path());
  const auto tallies = tally_pipeline(scenario{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_report(tallies, table, {}));
  }
}
BENCHMARK(BM_BuildReport);

void BM_LoadCostTable(benchmark::State& state)
{
  const auto path = default_cost_table_path();
  for (auto _ : state) {
    benchmark::DoNotOptimize(load_cost_table(path));
  }
}
BENCHMARK(BM_LoadCostTable);

} // namespace

BENCHMARK_MAIN();

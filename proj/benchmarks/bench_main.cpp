#include <benchmark/benchmark.h>

#include <cmath>

#include "hermite/farima.hpp"
#include "hermite/meyer.hpp"
#include "hermite/simulator.hpp"
#include "hermite/variations.hpp"

namespace {

using namespace hermite;

void BM_FarimaGenerate(benchmark::State& state) {
  FarimaParams params;
  params.delta = 0.35;
  params.length = static_cast<std::size_t>(state.range(0));
  params.seed = 42;
  for (auto _ : state) {
    auto seq = generate(params);
    benchmark::DoNotOptimize(seq.values.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FarimaGenerate)->Range(1 << 12, 1 << 18)->Complexity();

void BM_WeightTable(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  MeyerProfile profile = build_profile(0.35);
  for (auto _ : state) {
    auto table = build_weight_table(profile, q, 1);
    benchmark::DoNotOptimize(table.entries.size());
  }
}
BENCHMARK(BM_WeightTable)->Arg(1)->Arg(2)->Arg(3);

void BM_PartialSums(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  HermiteParams params{q, 0.7};
  SimGrid grid;
  grid.J = 12;
  MeyerProfile profile = build_profile(params.delta());
  WeightTable weights = build_weight_table(profile, q, grid.max_diff());
  FarimaParams fp;
  fp.delta = params.delta();
  fp.length = static_cast<std::size_t>(grid.m_max() - (grid.m0() - grid.max_diff()) + 1);
  fp.seed = 7;
  FarimaSequence seq = generate(fp);
  seq.start_index = grid.m0() - grid.max_diff();
  for (auto _ : state) {
    auto sums = partial_sums(params, grid, weights, seq);
    benchmark::DoNotOptimize(sums.data());
  }
}
BENCHMARK(BM_PartialSums)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_VariationStat(benchmark::State& state) {
  VariationConfig vc;
  vc.N = static_cast<int>(state.range(0));
  auto fake_path = [](double t) { return std::sin(12.0 * t) + t; };
  for (auto _ : state) {
    auto incs = special_increments(fake_path, vc);
    const double S = modified_power_variation(incs, vc, 0.7);
    benchmark::DoNotOptimize(S);
  }
}
BENCHMARK(BM_VariationStat)->Arg(13)->Arg(15)->Arg(17);

}  // namespace

BENCHMARK_MAIN();

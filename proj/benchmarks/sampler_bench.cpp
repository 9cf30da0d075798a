#include <benchmark/benchmark.h>

#include <cmath>

#include "lcrg/density.hpp"
#include "lcrg/samplers.hpp"

namespace {

using namespace lcrg;

void BM_SampleSimplex(benchmark::State& state) {
  const auto model = SimplexModel::uniform(EdgeSpace::undirected(state.range(0)));
  SeededRng rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_simplex(model, rng));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(model.dimension()));
}
BENCHMARK(BM_SampleSimplex)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SampleOrthantBall(benchmark::State& state) {
  const auto space = EdgeSpace::undirected(state.range(0));
  const double radius = std::sqrt(static_cast<double>(space.size()) + 2.0);
  SeededRng rng(2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_orthant_ball(radius, space, rng));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(space.size()));
}
BENCHMARK(BM_SampleOrthantBall)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Philox(benchmark::State& state) {
  SeededRng rng(3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(rng());
}
BENCHMARK(BM_Philox);

}  // namespace

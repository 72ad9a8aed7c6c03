#include <benchmark/benchmark.h>

#include "entropart/models.hpp"
#include "entropart/renyi.hpp"
#include "entropart/shannon.hpp"
#include "entropart/summation.hpp"

namespace ep = entropart;

namespace {

ep::AtomicGridSpec spec_for(const benchmark::State& state) {
  return {static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
}

void BM_BuildGrid(benchmark::State& state) {
  const auto mol = ep::homonuclear_diatomic("H", 1.4);
  const auto spec = spec_for(state);
  std::size_t points = 0;
  for (auto _ : state) {
    auto grid = ep::build_molecular_grid(mol, spec);
    points = grid.size();
    benchmark::DoNotOptimize(grid.weights.data());
  }
  state.counters["points"] = static_cast<double>(points);
}
BENCHMARK(BM_BuildGrid)->Args({400, 194})->Args({1000, 434})->Unit(benchmark::kMillisecond);

void BM_ShannonDecompose(benchmark::State& state) {
  const auto model = ep::build_h2_model(ep::Method::FullCI, 1.4);
  const auto field = model.field();
  const auto grid = ep::build_molecular_grid(model.molecule, spec_for(state));
  for (auto _ : state) benchmark::DoNotOptimize(ep::shannon_decompose(field, grid).density.total);
  state.counters["points/s"] =
      benchmark::Counter(static_cast<double>(grid.size()), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_ShannonDecompose)->Args({400, 194})->Args({1000, 434})->Unit(benchmark::kMillisecond);

void BM_Renyi2Decompose(benchmark::State& state) {
  const auto model = ep::build_h2_model(ep::Method::FullCI, 1.4);
  const auto field = model.field();
  const auto grid = ep::build_molecular_grid(model.molecule, spec_for(state));
  for (auto _ : state) benchmark::DoNotOptimize(ep::renyi_decompose(field, grid, 2.0).total.density);
}
BENCHMARK(BM_Renyi2Decompose)->Args({400, 194})->Unit(benchmark::kMillisecond);

void BM_PairDensities(benchmark::State& state) {
  const auto model = ep::build_h2_model(ep::Method::FullCI, 1.4);
  const auto field = model.field();
  std::vector<double> out(4);
  ep::Vec3 p(0.1, 0.2, 0.3);
  for (auto _ : state) {
    field.pair_densities(p, out);
    benchmark::DoNotOptimize(out.data());
    p.x() += 1e-9;
  }
}
BENCHMARK(BM_PairDensities);

void BM_H2Model(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ep::build_h2_model(ep::Method::FullCI, 1.4).energy);
}
BENCHMARK(BM_H2Model);

}  // namespace
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <vector>

#include "genii/metaball.hpp"
#include "genii/path_generators.hpp"
#include "genii/polygon_ops.hpp"
#include "genii/seed.hpp"

namespace {

void BM_Hilbert(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const std::uint64_t n = std::uint64_t{1} << (2 * order);
  for (auto _ : state)
    for (std::uint64_t i = 0; i < n; ++i) benchmark::DoNotOptimize(genii::hilbert_d2xy(order, i));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_Hilbert)->Arg(4)->Arg(8);

void BM_Metaball(benchmark::State& state) {
  std::vector<genii::Ball> balls;
  for (int i = 0; i < 8; ++i) balls.push_back({{0.1 + 0.1 * i, 0.5}, 0.06});
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(genii::metaball_merge(balls, 1.0, res));
}
BENCHMARK(BM_Metaball)->Arg(64)->Arg(128)->Arg(256);

void BM_UniteRects(benchmark::State& state) {
  genii::Rng rng(genii::Seed{7});
  std::vector<genii::Region> parts;
  for (int i = 0; i < state.range(0); ++i) {
    const double x = rng.uniform(0, 0.9), y = rng.uniform(0, 0.9);
    parts.push_back(genii::polygon::from_ring({{x, y}, {x + 0.1, y}, {x + 0.1, y + 0.1}, {x, y + 0.1}}));
  }
  for (auto _ : state) benchmark::DoNotOptimize(genii::polygon::unite_all(parts));
}
BENCHMARK(BM_UniteRects)->Arg(16)->Arg(128);

}  // namespace

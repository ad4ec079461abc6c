#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "idemfract/engine.hpp"
#include "idemfract/fuzzy.hpp"
#include "idemfract/higuchi.hpp"

using namespace idemfract;

namespace {

std::vector<double> noise(std::size_t n, std::uint64_t seed) {
  std::vector<double> x(n);
  for (auto& v : x) {
    seed = 6364136223846793005ULL * seed + 1442695040888963407ULL;
    v = static_cast<double>(seed >> 11) / 9007199254740992.0;
  }
  return x;
}

void BM_MarkovStep2D(benchmark::State& state) {
  const UniformGrid g(2, static_cast<std::size_t>(state.range(0)));
  const DiscreteSystem ds(build_partial(builtin_family("checker-2d", "neg-square"), 15), g);
  const auto d = initial_density(g, {});
  for (auto _ : state) benchmark::DoNotOptimize(markov_step(d, ds, static_cast<unsigned>(state.range(1))));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size() * ds.order()));
}
BENCHMARK(BM_MarkovStep2D)->Args({128, 1})->Args({256, 1})->Args({256, 4})->Unit(benchmark::kMillisecond);

void BM_Iterate1D(benchmark::State& state) {
  const UniformGrid g(1, 1000);
  const auto s = build_partial(builtin_family("dyadic-shift-1d", "neg-square"), static_cast<std::size_t>(state.range(0)));
  IterationConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(iterate(s, g, cfg));
}
BENCHMARK(BM_Iterate1D)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_WordOracle(benchmark::State& state) {
  const UniformGrid g(1, 16);
  const auto s = build_partial(builtin_family("dyadic-shift-1d", "neg-geometric"), 3);
  for (auto _ : state) benchmark::DoNotOptimize(word_oracle(s, g, static_cast<std::size_t>(state.range(0)), {}));
}
BENCHMARK(BM_WordOracle)->Arg(4)->Arg(8);

void BM_Hfd1D(benchmark::State& state) {
  const auto x = noise(1001, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hfd_1d(x, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Hfd1D)->Arg(50)->Arg(200)->Arg(500);

void BM_Hfd2D(benchmark::State& state) {
  const Series2D s{257, noise(257 * 257, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(hfd_2d(s, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Hfd2D)->Arg(65)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Dtheta(benchmark::State& state) {
  const UniformGrid g(1, 512);
  const auto sys = builtin_family("dyadic-shift-1d", "neg-geometric");
  IterationConfig cfg;
  const auto a = iterate(build_partial(sys, 10), g, cfg).first;
  const auto b = iterate(build_partial(sys, 20), g, cfg).first;
  for (auto _ : state) benchmark::DoNotOptimize(discrete_dtheta(a, b, g));
}
BENCHMARK(BM_Dtheta)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

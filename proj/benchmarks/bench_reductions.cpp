#include "rsched/embeddings.hpp"
#include "rsched/evaluate.hpp"
#include "rsched/generators.hpp"
#include "rsched/matching_reductions.hpp"
#include "rsched/sat_reductions.hpp"

#include <benchmark/benchmark.h>

using namespace rsched;

namespace {

void BM_ReduceRai(benchmark::State& state) {
  Rng rng(7);
  const auto f = random_star(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_rai(f));
}
BENCHMARK(BM_ReduceRai)->Arg(3)->Arg(12)->Arg(48);

void BM_ReduceRar2(benchmark::State& state) {
  Rng rng(8);
  const auto d = random_3dm_star(rng, static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_rar2(d));
}
BENCHMARK(BM_ReduceRar2)->Arg(1)->Arg(4)->Arg(16);

void BM_NormalizeAndLrs(benchmark::State& state) {
  Rng rng(9);
  const auto rar = random_rar(rng, 4, static_cast<int>(state.range(0)), static_cast<int>(2 * state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rar_to_lrs(normalize(rar), Rational(1, 2), Rational(100)));
}
BENCHMARK(BM_NormalizeAndLrs)->Arg(8)->Arg(32);

}  // namespace

#include "rsched/generators.hpp"
#include "rsched/matching_reductions.hpp"
#include "rsched/sat_reductions.hpp"
#include "rsched/solver.hpp"

#include <benchmark/benchmark.h>

using namespace rsched;

namespace {

void BM_SimpleAppendix(benchmark::State& state) {
  const auto out = reduce_simple(appendix_formula());
  const auto& ra = std::get<RAInstance>(out.instance);
  for (auto _ : state) benchmark::DoNotOptimize(decide_exact_load(ra, Rational(kSimpleTarget)));
}
BENCHMARK(BM_SimpleAppendix)->Unit(benchmark::kMillisecond);

void BM_RaiAppendix(benchmark::State& state) {
  const auto out = reduce_rai(appendix_formula());
  const auto& ra = std::get<RAIInstance>(out.instance).base();
  for (auto _ : state) benchmark::DoNotOptimize(decide_exact_load(ra, Rational(kRaiTarget)));
}
BENCHMARK(BM_RaiAppendix)->Unit(benchmark::kMillisecond);

void BM_Rar3Counterexample(benchmark::State& state) {
  const auto out = reduce_rar3(counterexample_3dm());
  const auto ra = restricted_view(out.instance);
  for (auto _ : state) benchmark::DoNotOptimize(decide_exact_load(ra, *out.target));
}
BENCHMARK(BM_Rar3Counterexample)->Unit(benchmark::kMillisecond);

// Makespan decisions on random instances at the trivial lower bound.
void BM_RandomMakespan(benchmark::State& state) {
  Rng rng(static_cast<std::uint64_t>(state.range(0)));
  RandomRAParams params;
  params.max_machines = static_cast<int>(state.range(0));
  params.max_jobs = static_cast<int>(2 * state.range(0));
  std::vector<std::pair<RAInstance, Rational>> cases;
  for (int k = 0; k < 20; ++k) {
    auto ra = random_ra(rng, params);
    Rational total;
    Rational lower;
    for (const auto& job : ra.jobs()) {
      total += job.size;
      lower = max(lower, job.size);
    }
    lower = max(lower, total / Rational(static_cast<std::int64_t>(ra.machine_count())));
    cases.emplace_back(std::move(ra), lower);
  }
  for (auto _ : state)
    for (const auto& [ra, T] : cases) benchmark::DoNotOptimize(decide_makespan(ra, T));
}
BENCHMARK(BM_RandomMakespan)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

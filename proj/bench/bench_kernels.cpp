#include <benchmark/benchmark.h>

#include "powerspace/kernels.hpp"
#include "powerspace/powerspaces.hpp"
#include "powerspace/suites.hpp"

using namespace powerspace;

namespace {

constexpr std::size_t kCap = std::size_t{1} << 22;

// Points of K(A(X)) for the n-antichain: 20 for n = 3, 168 for n = 4.
const FiniteSpace& ka_antichain(std::size_t n) {
  static std::vector<SpaceRef> cache(8);
  if (!cache[n]) cache[n] = upper_powerspace(lower_powerspace(make_ref(discrete(n))))->space;
  return *cache[n];
}

void BM_UpperSetsSerial(benchmark::State& state) {
  const FiniteSpace& X = state.range(0) < 8 ? ka_antichain(state.range(0)) : discrete(state.range(0));
  std::size_t n = 0;
  for (auto _ : state) n = upper_sets_serial(X, kCap).size();
  state.counters["sets"] = static_cast<double>(n);
}

void BM_UpperSetsParallel(benchmark::State& state) {
  const FiniteSpace& X = state.range(0) < 8 ? ka_antichain(state.range(0)) : discrete(state.range(0));
  std::size_t n = 0;
  for (auto _ : state) n = upper_sets_parallel(X, kCap, 0).size();
  state.counters["sets"] = static_cast<double>(n);
}

std::vector<PtSet> subbasis_for(std::size_t n) {
  std::vector<PtSet> sub;
  for (std::size_t i = 0; i < n; ++i) {
    PtSet s(n);
    for (std::size_t j = i; j < n; j += 1 + i % 5) s.set(j);
    sub.push_back(s);
  }
  return sub;
}

void BM_GeneratedSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto sub = subbasis_for(n);
  for (auto _ : state) benchmark::DoNotOptimize(generated_up_sets_serial(n, sub));
}

void BM_GeneratedParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto sub = subbasis_for(n);
  for (auto _ : state) benchmark::DoNotOptimize(generated_up_sets_parallel(n, sub, 0));
}

void BM_ConsonanceSuite(benchmark::State& state) {
  SuiteOptions o;
  o.max_points = 4;
  o.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(Suite::Consonance, o).failed());
}

}  // namespace

// Argument 3 or 4: K(A(antichain)); 16 and above: a discrete space of that size.
BENCHMARK(BM_UpperSetsSerial)->Arg(3)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UpperSetsParallel)->Arg(3)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeneratedSerial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeneratedParallel)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConsonanceSuite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

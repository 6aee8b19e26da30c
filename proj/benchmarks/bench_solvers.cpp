// Sweeps n = 1..range over one algorithm and one requested statistic.

#include <benchmark/benchmark.h>

#include "sturdy/census.hpp"
#include "sturdy/solvers.hpp"

namespace {

using namespace sturdy;

SolveOptions raw() {
  SolveOptions o;
  o.use_shortcuts = false;
  o.quick_witness = false;
  return o;
}

template <Algorithm A>
void BM_is_sturdy(benchmark::State& state) {
  const auto to = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    for (std::uint64_t n = 1; n <= to; ++n) benchmark::DoNotOptimize(solve(n, A, FieldSet::char_only(), raw()));
  }
}

template <Algorithm A>
void BM_swm(benchmark::State& state) {
  const auto to = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    for (std::uint64_t n = 1; n <= to; ++n) benchmark::DoNotOptimize(solve(n, A, FieldSet::char_swm(), raw()));
  }
}

template <Algorithm A>
void BM_msw(benchmark::State& state) {
  const auto to = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    for (std::uint64_t n = 1; n <= to; ++n) benchmark::DoNotOptimize(solve(n, A, FieldSet::without_mfw(), raw()));
  }
}

template <Algorithm A>
void BM_mfw(benchmark::State& state) {
  const auto to = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    for (std::uint64_t n = 1; n <= to; ++n) {
      benchmark::DoNotOptimize(solve(n, A, FieldSet{true, false, false, true}, raw()));
    }
  }
}

void BM_census_counts(benchmark::State& state) {
  const auto pipe = census::build_census(3, census::PdaMode::Flimsy);
  for (auto _ : state) benchmark::DoNotOptimize(census::census_counts(pipe, static_cast<std::size_t>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_is_sturdy<Algorithm::Bfs01>)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_is_sturdy<Algorithm::Aut>)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_is_sturdy<Algorithm::OrderDegBfs>)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_is_sturdy<Algorithm::Dp>)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_swm<Algorithm::Bfs01>)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_swm<Algorithm::Aut>)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_swm<Algorithm::OrderDegBfs>)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_msw<Algorithm::Bfs01>)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_msw<Algorithm::Aut>)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_msw<Algorithm::OrderDegBfs>)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mfw<Algorithm::Bfs01>)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mfw<Algorithm::Aut>)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_census_counts)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <numeric>
#include <tuple>

#include <benchmark/benchmark.h>

#include "foliate/bounds.hpp"
#include "foliate/hjstring.hpp"
#include "foliate/resolution.hpp"
#include "foliate/zariski.hpp"

using namespace foliate;

static void BM_ResolveDiagonal(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    std::size_t total = 0;
    for (std::int64_t p = 1; p <= n; ++p) {
      for (std::int64_t q = 1; q <= n; ++q) {
        if (std::gcd(p, q) == 1) total += resolve_diagonal(p, q).size();
      }
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ResolveDiagonal)->Arg(50)->Arg(200);

static void BM_ResolveFibonacci(benchmark::State& state) {
  // Consecutive Fibonacci numbers give the longest Euclid runs.
  std::int64_t a = 1, b = 1;
  for (int i = 0; i < state.range(0); ++i) std::tie(a, b) = std::pair{b, a + b};
  for (auto _ : state) benchmark::DoNotOptimize(resolve_diagonal(b, a));
}
BENCHMARK(BM_ResolveFibonacci)->Arg(20)->Arg(60);

static void BM_ZariskiChain(benchmark::State& state) {
  std::vector<std::int64_t> entries(state.range(0), -3);
  const HJString chain(entries);
  const auto lattice = IntersectionLattice::from_chain(chain);
  DivisorData d;
  d.pairings.assign(entries.size(), Rational(0));
  d.pairings[0] = Rational(-1);
  for (auto _ : state) benchmark::DoNotOptimize(zariski_decompose(lattice, d));
}
BENCHMARK(BM_ZariskiChain)->Arg(4)->Arg(12)->Arg(32);

static void BM_HJData(benchmark::State& state) {
  std::vector<std::int64_t> entries(state.range(0), -2);
  const HJString chain(entries);
  for (auto _ : state) benchmark::DoNotOptimize(hj_data(chain));
}
BENCHMARK(BM_HJData)->Arg(12)->Arg(64);

static void BM_TailClassify(benchmark::State& state) {
  for (auto _ : state) {
    int zeros = 0;
    for (std::int64_t a = 2; a <= 30; ++a) {
      for (std::int64_t b = a; b <= 30; ++b) {
        for (std::int64_t c = b; c <= 30; ++c) {
          zeros += tail_classify({2, 0, {a, b, c}}).kind == TailClassification::Kind::Zero;
        }
      }
    }
    benchmark::DoNotOptimize(zeros);
  }
}
BENCHMARK(BM_TailClassify);

static void BM_IndexBound(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(index_bound(state.range(0)));
}
BENCHMARK(BM_IndexBound)->Arg(2)->Arg(10)->Arg(50);

static void BM_PoincareSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(poincare_section_search(5, state.range(0)));
}
BENCHMARK(BM_PoincareSearch)->Arg(2)->Arg(50);

BENCHMARK_MAIN();

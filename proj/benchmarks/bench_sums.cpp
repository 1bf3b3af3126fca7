#include <benchmark/benchmark.h>

#include "dedekind/sums.hpp"

static void BM_DedekindSumReciprocity(benchmark::State& state) {
  // Fibonacci neighbours maximise the remainder chain for a given size.
  dedekind::Integer a = 1, b = 1;
  while (mpz_sizeinbase(b.get_mpz_t(), 2) < static_cast<std::size_t>(state.range(0))) {
    dedekind::Integer next = a + b;
    a = b;
    b = next;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(dedekind::dedekind_sum(a, b));
  }
}
BENCHMARK(BM_DedekindSumReciprocity)->RangeMultiplier(4)->Range(16, 4096);

static void BM_DedekindSumDirect(benchmark::State& state) {
  const dedekind::Integer b = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dedekind::dedekind_sum_direct(7, b));
  }
}
BENCHMARK(BM_DedekindSumDirect)->Arg(1009)->Arg(100003);

static void BM_EvalViaDecomposition(benchmark::State& state) {
  // q = 60, t = 1009 * 1013 (both 1 mod 4), a with t | a^2 + 1 found once.
  const dedekind::Integer q = 60;
  const dedekind::Integer t = 1009UL * 1013UL;
  const auto roots = dedekind::sqrt_minus_one(1009UL * 1013UL);
  dedekind::Integer a = static_cast<unsigned long>(roots.front()) + 7 * t;
  while (dedekind::gcd(a, q) != 1) a += t;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dedekind::dedekind_sum_decomposed(q, t, a));
  }
}
BENCHMARK(BM_EvalViaDecomposition);

static void BM_SqrtMinusOne(benchmark::State& state) {
  std::uint64_t t = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dedekind::sqrt_minus_one(t));
    t = t % 1'000'000 + 1;
  }
}
BENCHMARK(BM_SqrtMinusOne);

#include <benchmark/benchmark.h>

#include "hextwist/rat.hpp"
#include "hextwist/surd.hpp"

using namespace hextwist;

static void BM_RatArithmetic(benchmark::State& state) {
  Rat a(29, 70), b(41, 99);
  for (auto _ : state) {
    Rat c = a * b + a - b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_RatArithmetic);

static void BM_SurdSign(benchmark::State& state) {
  Surd x(Rat(-140, 99), Rat(1), 2);  // close to zero, forces the exact path
  for (auto _ : state) {
    int s = x.sign();
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SurdSign);

static void BM_SurdFloor(benchmark::State& state) {
  Surd x(Rat(123, 97), Rat(55, 34), 2);
  for (auto _ : state) {
    mpz_class f = surd_floor(x);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_SurdFloor);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "lagcorr/snf.hpp"
#include "lagcorr/verify.hpp"

namespace {

lag::Mat random_matrix(lag::BaseRing ring, int n, long bound, std::uint64_t seed) {
  lag::RandomAlgebra ra(ring, seed);
  lag::Mat m(ring, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = ra.small_integral(bound);
  return m;
}

void BM_SnfIntegers(benchmark::State& state) {
  lag::Mat m = random_matrix(lag::BaseRing::integers(), static_cast<int>(state.range(0)), 30, 7);
  for (auto _ : state) benchmark::DoNotOptimize(lag::smith_normal_form(m));
}
BENCHMARK(BM_SnfIntegers)->Arg(4)->Arg(6)->Arg(8);

void BM_SnfGaussian(benchmark::State& state) {
  lag::Mat m = random_matrix(lag::BaseRing::quadratic(-1), static_cast<int>(state.range(0)), 10, 7);
  for (auto _ : state) benchmark::DoNotOptimize(lag::smith_normal_form(m));
}
BENCHMARK(BM_SnfGaussian)->Arg(3)->Arg(5);

void BM_SnfEisenstein(benchmark::State& state) {
  lag::Mat m = random_matrix(lag::BaseRing::quadratic(-3), static_cast<int>(state.range(0)), 10, 7);
  for (auto _ : state) benchmark::DoNotOptimize(lag::smith_normal_form(m));
}
BENCHMARK(BM_SnfEisenstein)->Arg(3)->Arg(5);

}  // namespace

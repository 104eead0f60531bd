#include <benchmark/benchmark.h>

#include "lagcorr/cocycle.hpp"
#include "lagcorr/verify.hpp"

namespace {

void BM_ComposeGraphs(benchmark::State& state) {
  lag::BaseRing ring = state.range(0) == 0 ? lag::BaseRing::integers() : lag::BaseRing::quadratic(-1);
  lag::RandomAlgebra ra(ring, 11);
  lag::SymplecticAuto g1 = ra.symplectic_word(4);
  lag::SymplecticAuto g2 = ra.symplectic_word(4);
  lag::ParamCorrespondence l = lag::connected_image(lag::graph(g1)).image;
  lag::ParamCorrespondence m = lag::connected_image(lag::graph(g2)).image;
  for (auto _ : state) benchmark::DoNotOptimize(lag::compose(l, m));
}
BENCHMARK(BM_ComposeGraphs)->Arg(0)->Arg(1);

void BM_LambdaClosed(benchmark::State& state) {
  lag::RandomAlgebra ra(lag::BaseRing::integers(), 5);
  lag::SymplecticAuto g1 = ra.symplectic_word(4);
  lag::SymplecticAuto g2 = ra.symplectic_word(4);
  for (auto _ : state) benchmark::DoNotOptimize(lag::lambda(g1, g2));
}
BENCHMARK(BM_LambdaClosed);

void BM_LambdaExtension(benchmark::State& state) {
  lag::SymplecticSpace sp{1, lag::BaseRing::integers()};
  lag::SymplecticAuto s = lag::fourier_s(sp);
  for (auto _ : state) benchmark::DoNotOptimize(lag::lambda(s, s));
}
BENCHMARK(BM_LambdaExtension);

void BM_NCoeff(benchmark::State& state) {
  lag::BaseRing gauss = lag::BaseRing::quadratic(-1);
  lag::SymplecticAuto ga = lag::cm_diag_auto(gauss, lag::QuadElem(gauss, 1, 1));
  for (auto _ : state) benchmark::DoNotOptimize(lag::n_coeff(ga, ga));
}
BENCHMARK(BM_NCoeff);

}  // namespace

BENCHMARK_MAIN();

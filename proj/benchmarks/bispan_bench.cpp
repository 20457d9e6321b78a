#include <benchmark/benchmark.h>

#include "tambara/bispan.hpp"
#include "tambara/burnside.hpp"
#include "tambara/evaluate.hpp"
#include "tambara/gset.hpp"

namespace {

using namespace tambara;

// The fold of m free orbits onto one, as a map into C2.
GMap fold(std::size_t m) {
  std::vector<Point> images;
  for (std::size_t j = 0; j < m; ++j) {
    images.push_back(0);
    images.push_back(1);
  }
  return GMap(GSet(0, m), GSet::free_orbit(), images);
}

void BM_ComposeNormAfterTransfer(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Bispan norm = make_N(GMap::quotient(), IndexingSystem::complete);
  const Bispan transfer = make_T(fold(m));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(norm, transfer));
  }
}
BENCHMARK(BM_ComposeNormAfterTransfer)->DenseRange(1, 4);

void BM_DependentProduct(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const GMap h = fold(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dependent_product(h, GMap::quotient()));
  }
}
BENCHMARK(BM_DependentProduct)->DenseRange(1, 6);

void BM_EvaluateOnBurnside(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Burnside b;
  const Bispan p = compose(make_N(GMap::quotient(), IndexingSystem::complete), make_T(fold(m)));
  ElementTuple<Burnside> x;
  for (std::size_t j = 0; j < m; ++j) {
    x.free.push_back(Integer(static_cast<long>(j) + 2));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(p, b, x));
  }
}
BENCHMARK(BM_EvaluateOnBurnside)->DenseRange(1, 4);

void BM_CanonicalEquality(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Bispan p = compose(make_N(GMap::quotient(), IndexingSystem::complete), make_T(fold(m)));
  const Bispan q = p;
  for (auto _ : state) {
    benchmark::DoNotOptimize(p == q);
  }
}
BENCHMARK(BM_CanonicalEquality)->DenseRange(1, 3);

}  // namespace

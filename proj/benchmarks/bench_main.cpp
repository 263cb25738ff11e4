#include <benchmark/benchmark.h>

#include "dgres/mc.hpp"
#include "dgres/pushout.hpp"

using namespace dgres;

namespace {

// k^d in degrees 0..len-1, d_q = id for odd q (acyclic when len is even).
ChainComplex staircase(const Field& f, int len, std::size_t d) {
  std::map<int, std::size_t> dims;
  std::map<int, Matrix> diffs;
  for (int q = 0; q < len; ++q) dims[q] = d;
  for (int q = 1; q < len; q += 2) {
    Matrix m(f, d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = f.one();
    diffs.emplace(q, m);
  }
  return ChainComplex::make(f, dims, diffs);
}

void BM_Homology(benchmark::State& state) {
  const Field f = Field::prime(101);
  ChainComplex c = staircase(f, 8, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(homology_ranks(c));
}
BENCHMARK(BM_Homology)->Arg(4)->Arg(16)->Arg(64);

void BM_HomComplexIota(benchmark::State& state) {
  const Field q = Field::rationals();
  auto cat = fixtures::sphere(q, 1);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto h = hom_complex_mc(iota(cat, 0, n), iota(cat, 1, n));
    benchmark::DoNotOptimize(homology_ranks(h.complex));
  }
}
BENCHMARK(BM_HomComplexIota)->DenseRange(1, 5);

void BM_FreeAdjoin(benchmark::State& state) {
  const Field q = Field::rationals();
  AdjunctionData data;
  data.base = fixtures::unit_k(q);
  data.n = 1;
  data.g_img = data.base->zero(0, 0);
  data.truncation = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(free_adjoin(data).category->hom(0, 0).total_dim());
}
BENCHMARK(BM_FreeAdjoin)->DenseRange(1, 6);

}  // namespace
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "hhb/exactla/elimination.hpp"

namespace {

using namespace hhb::la;

Mat random_dense(const FieldPtr& f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> elt(0, f->order() - 1);
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Elt>(elt(rng));
  }
  return m;
}

template <Exec E>
void BM_rref(benchmark::State& state) {
  const auto f = ff_make(static_cast<std::uint32_t>(state.range(1)), static_cast<unsigned>(state.range(2)));
  const Mat m = random_dense(f, static_cast<std::size_t>(state.range(0)), 0x5eed);
  for (auto _ : state) {
    Mat work = m;
    benchmark::DoNotOptimize(rref_inplace(work, E));
  }
  state.SetComplexityN(state.range(0));
}

// Arguments: size, p, field degree.
void args(benchmark::internal::Benchmark* b) {
  for (int n : {128, 256, 512, 1024}) {
    b->Args({n, 2, 1});
    b->Args({n, 3, 2});
  }
  b->Unit(benchmark::kMillisecond);
}

BENCHMARK(BM_rref<Exec::serial>)->Apply(args);
BENCHMARK(BM_rref<Exec::parallel>)->Apply(args)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();

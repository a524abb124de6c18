#include <benchmark/benchmark.h>

#include "subdepth/builtin.hpp"
#include "subdepth/kernels.hpp"

using namespace subdepth;

namespace {

IntMatrix sample_matrix(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>((i * 7 + j * 13) % 5);
  }
  // large entries, as in high S-powers
  for (int k = 0; k < 3; ++k) m = kernels::multiply_serial(m, m);
  return m;
}

void BM_MultiplySerial(benchmark::State& state) {
  const auto m = sample_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply_serial(m, m));
}

void BM_MultiplyParallel(benchmark::State& state) {
  const auto m = sample_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply_parallel(m, m));
}

void BM_ClassMatrixSerial(benchmark::State& state) {
  const auto g = builtin::symmetric(static_cast<std::size_t>(state.range(0)));
  const auto r = g.classes().size();
  for (auto _ : state) {
    for (std::size_t j = 0; j < r; ++j) benchmark::DoNotOptimize(kernels::class_matrix_serial(g, j));
  }
}

void BM_ClassMatrixParallel(benchmark::State& state) {
  const auto g = builtin::symmetric(static_cast<std::size_t>(state.range(0)));
  const auto r = g.classes().size();
  for (auto _ : state) {
    for (std::size_t j = 0; j < r; ++j) benchmark::DoNotOptimize(kernels::class_matrix_parallel(g, j));
  }
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->Arg(15)->Arg(40);
BENCHMARK(BM_MultiplyParallel)->Arg(15)->Arg(40);
BENCHMARK(BM_ClassMatrixSerial)->Arg(5)->Arg(6);
BENCHMARK(BM_ClassMatrixParallel)->Arg(5)->Arg(6);

BENCHMARK_MAIN();

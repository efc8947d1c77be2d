#include <benchmark/benchmark.h>

#include "cl3/cft.hpp"
#include "cl3/synthesis.hpp"

namespace {

void BM_CftFast(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  cl3::Rng rng(7);
  const cl3::MultivectorField f = cl3::randomField(cl3::Grid3::cube(n, 0.25), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cl3::cftFast(f));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(f.size()));
}
BENCHMARK(BM_CftFast)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_CftRoundTrip(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  cl3::Rng rng(7);
  const cl3::MultivectorField f = cl3::randomField(cl3::Grid3::cube(n, 0.25), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cl3::cftInverse(cl3::cftFast(f)));
  }
}
BENCHMARK(BM_CftRoundTrip)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_CftDirect(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  cl3::Rng rng(7);
  const cl3::MultivectorField f = cl3::randomField(cl3::Grid3::cube(n, 0.25), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cl3::cftDirect(f));
  }
}
BENCHMARK(BM_CftDirect)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_GeometricProduct(benchmark::State& state) {
  cl3::Rng rng(3);
  const cl3::Multivector a = cl3::randomMultivector(rng);
  cl3::Multivector b = cl3::randomMultivector(rng);
  for (auto _ : state) {
    b = a * b;
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_GeometricProduct);

void BM_Laplacian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  cl3::Rng rng(5);
  const cl3::MultivectorField f = cl3::randomField(cl3::Grid3::cube(n, 0.25), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cl3::laplacian(f));
  }
}
BENCHMARK(BM_Laplacian)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

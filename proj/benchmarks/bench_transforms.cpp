#include <complex>
#include <random>

#include <benchmark/benchmark.h>

#include "radix2/radix2.hpp"

namespace {

using namespace radix2;

const PrimeField kNtt = PrimeField::ntt_default();

Polynomial<Zp> random_poly(std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, kNtt.modulus() - 1);
  std::vector<Zp> c(size);
  for (auto& x : c) x = Zp{dist(rng)};
  return Polynomial<Zp>(std::move(c));
}

unsigned log2_of(std::size_t n) {
  unsigned k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

template <Engine E>
void BM_Transform(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const auto plan = primitive_root_of_order(kNtt, log2_of(len));
  const auto p = random_poly(len, 1);
  for (auto _ : state) benchmark::DoNotOptimize(forward(kNtt, E, plan, p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Transform<Engine::kRecursive>)->RangeMultiplier(4)->Range(1 << 6, 1 << 18)->Complexity(benchmark::oNLogN);
BENCHMARK(BM_Transform<Engine::kButterfly>)->RangeMultiplier(4)->Range(1 << 6, 1 << 18)->Complexity(benchmark::oNLogN);
BENCHMARK(BM_Transform<Engine::kIterative>)->RangeMultiplier(4)->Range(1 << 6, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_InverseIterative(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const auto plan = primitive_root_of_order(kNtt, log2_of(len));
  const auto p = random_poly(len, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ifft(kNtt, plan, p));
}
BENCHMARK(BM_InverseIterative)->RangeMultiplier(4)->Range(1 << 6, 1 << 18);

void BM_ComplexIterative(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const ComplexField c;
  const auto plan = primitive_root_of_order(c, log2_of(len));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-1, 1);
  std::vector<std::complex<double>> coeffs(len);
  for (auto& x : coeffs) x = {dist(rng), dist(rng)};
  const Polynomial<std::complex<double>> p(std::move(coeffs));
  for (auto _ : state) benchmark::DoNotOptimize(istep(c, plan, p));
}
BENCHMARK(BM_ComplexIterative)->RangeMultiplier(4)->Range(1 << 6, 1 << 16);

void BM_NaiveMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = random_poly(n, 4);
  const auto q = random_poly(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(naive_mul(kNtt, p, q));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NaiveMul)->RangeMultiplier(2)->Range(1 << 6, 1 << 12)->Complexity(benchmark::oNSquared);

void BM_FftMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = random_poly(n, 4);
  const auto q = random_poly(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(fft_mul(kNtt, p, q));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FftMul)->RangeMultiplier(2)->Range(1 << 6, 1 << 16)->Complexity(benchmark::oNLogN);

}  // namespace

BENCHMARK_MAIN();

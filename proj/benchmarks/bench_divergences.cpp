#include <random>

#include <benchmark/benchmark.h>

#include "bregman/bregman.hpp"

using namespace bregman;

namespace {

Vector positive(int m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.1, 4.0);
  Vector v(m);
  for (auto& x : v) x = u(rng);
  return v;
}

void BM_BregmanExtendedKl(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const auto g = make_extended_kl(m);
  const Vector a = positive(m, rng), b = positive(m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(bregman::bregman(g, a, b));
}
BENCHMARK(BM_BregmanExtendedKl)->RangeMultiplier(4)->Range(2, 512);

void BM_SymmetrizedBurg(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const auto g = make_burg(m);
  const Vector a = positive(m, rng), b = positive(m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(symmetrized(g, a, b));
}
BENCHMARK(BM_SymmetrizedBurg)->RangeMultiplier(4)->Range(2, 512);

void BM_AlphaDivergence(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const Vector a = positive(64, rng), b = positive(64, rng);
  const double alpha = static_cast<double>(state.range(0)) / 4.0;
  for (auto _ : state) benchmark::DoNotOptimize(alpha_divergence(alpha, a, b));
}
BENCHMARK(BM_AlphaDivergence)->Arg(-4)->Arg(0)->Arg(2)->Arg(4);

void BM_RepresentationalBregman(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const Vector a = positive(64, rng), b = positive(64, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rep_bregman(0.5, a, b));
}
BENCHMARK(BM_RepresentationalBregman);

void BM_GaussianKld(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(5);
  std::normal_distribution<double> n(0.0, 1.0);
  auto spd = [&] {
    Matrix a(d, d);
    for (auto& x : a.reshaped()) x = n(rng);
    return SpdMatrix(a * a.transpose() + Matrix::Identity(d, d));
  };
  const SpdMatrix s1 = spd(), s2 = spd();
  const Vector m1 = Vector::Zero(d), m2 = Vector::Ones(d);
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_kld(m1, s1, m2, s2));
}
BENCHMARK(BM_GaussianKld)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();

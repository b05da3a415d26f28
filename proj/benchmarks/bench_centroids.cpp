#include <random>

#include <benchmark/benchmark.h>

#include "bregman/bregman.hpp"

using namespace bregman;

namespace {

std::vector<Vector> simplex_points(int n, int m, std::mt19937_64& rng) {
  std::gamma_distribution<double> g(1.0, 1.0);
  std::vector<Vector> pts;
  for (int i = 0; i < n; ++i) {
    Vector p(m);
    for (auto& x : p) x = g(rng) + 1e-3;
    pts.push_back(p / p.sum());
  }
  return pts;
}

void BM_Jeffreys1d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::lognormal_distribution<double> ln(0.0, 1.0);
  std::vector<double> xs;
  for (int i = 0; i < n; ++i) xs.push_back(ln(rng));
  const auto set = WeightedParamSet::scalars(xs, Vector::Ones(n));
  for (auto _ : state) benchmark::DoNotOptimize(jeffreys_centroid_1d(set));
}
BENCHMARK(BM_Jeffreys1d)->Arg(2)->Arg(16)->Arg(256);

void BM_JeffreysCategorical(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const auto set = WeightedParamSet::uniform(simplex_points(8, m, rng));
  for (auto _ : state) benchmark::DoNotOptimize(jeffreys_centroid_categorical(set));
}
BENCHMARK(BM_JeffreysCategorical)->Arg(3)->Arg(10)->Arg(100);

void BM_LogdetCosh(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<SpdMatrix> mats;
  for (int i = 0; i < 8; ++i) {
    Matrix a(d, d);
    for (auto& x : a.reshaped()) x = n(rng);
    mats.emplace_back(a * a.transpose() + Matrix::Identity(d, d));
  }
  const Vector w = Vector::Constant(8, 1.0 / 8);
  for (auto _ : state) benchmark::DoNotOptimize(logdet_cosh_centroid(mats, w));
}
BENCHMARK(BM_LogdetCosh)->Arg(2)->Arg(4)->Arg(16);

void BM_CccpCategorical(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const bool accelerate = state.range(1) != 0;
  std::mt19937_64 rng(4);
  std::vector<Vector> reduced;
  for (const Vector& p : simplex_points(4, m, rng)) reduced.emplace_back(p.head(m - 1));
  const auto set = WeightedParamSet::uniform(reduced);
  const auto g = make_shannon_simplex(m);
  CccpConfig cfg;
  cfg.epsilon = 1e-2;
  cfg.accelerate = accelerate;
  cfg.max_rounds = 100000;
  for (auto _ : state) benchmark::DoNotOptimize(cccp_symmetrized_centroid(g, set, cfg));
}
BENCHMARK(BM_CccpCategorical)->Args({3, 1})->Args({3, 0})->Args({5, 1})->Args({5, 0})->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

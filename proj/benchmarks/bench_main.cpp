#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "wtc/recursion.hpp"
#include "wtc/verify.hpp"

using namespace wtc;

namespace {

Jet random_jet(std::mt19937_64& rng, int order) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<complex> c(static_cast<std::size_t>(order) + 1);
  for (auto& x : c) x = {d(rng), d(rng)};
  return Jet(0.0, std::move(c));
}

struct Input {
  PotentialSpec spec;
  FreeData free;
};

Input make_input(int N, int k) {
  const int order = plan_order_budget(N, k);
  const std::vector<double> p0{0.3, -0.5, 0.2}, p1{0.7, 0.1}, q{-0.4, 0.6, 0.3, -0.1},
      psi{0.2, 0.8, -0.3, 0.05};
  return {PotentialSpec::from_polynomials(0.0, order, p0, p1, q, psi),
          FreeData::from_polynomials(0.9, 0.0, order, std::vector<double>{0.1, 0.4},
                                     std::vector<double>{-0.2})};
}

}  // namespace

static void BM_JetMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int order = static_cast<int>(state.range(0));
  const Jet f = random_jet(rng, order), g = random_jet(rng, order);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_JetMul)->Arg(4)->Arg(16)->Arg(32);

static void BM_ConvolutionB(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int j = static_cast<int>(state.range(0));
  std::vector<Jet> u, v;
  for (int k = 0; k < j; ++k) {
    u.push_back(random_jet(rng, 8));
    v.push_back(random_jet(rng, 8));
  }
  for (auto _ : state) benchmark::DoNotOptimize(convolution_B(j, u, v));
}
BENCHMARK(BM_ConvolutionB)->Arg(10)->Arg(20)->Arg(40);

static void BM_Generate(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto in = make_input(N, 4);
  for (auto _ : state) benchmark::DoNotOptimize(generate(in.spec, in.free, N, 4));
}
BENCHMARK(BM_Generate)->Arg(10)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_PointwiseResidual(benchmark::State& state) {
  const auto in = make_input(30, 2);
  const auto series = generate(in.spec, in.free, 30, 2);
  const auto grid = default_window(series, in.spec);
  for (auto _ : state) benchmark::DoNotOptimize(pointwise_residual(series, in.spec, grid, 30));
}
BENCHMARK(BM_PointwiseResidual)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

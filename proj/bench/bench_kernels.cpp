#include <algorithm>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "krein/kernels.hpp"
#include "krein/models.hpp"

namespace {

using namespace krein;

std::vector<cplx> random_spectrum(std::size_t n) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<cplx> out;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx l(normal(rng), normal(rng));
    out.push_back(l);
    out.push_back(std::conj(l));
  }
  return out;
}

template <bool Parallel>
void BM_PairingResidual(benchmark::State& state) {
  const auto s = random_spectrum(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? kernels::omp::pairing_residual(s)
                                      : kernels::serial::pairing_residual(s));
  }
}

template <bool Parallel>
void BM_MatchedDistance(benchmark::State& state) {
  const auto a = random_spectrum(static_cast<std::size_t>(state.range(0)));
  auto b = a;
  std::reverse(b.begin(), b.end());
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? kernels::omp::matched_distance(a, b)
                                      : kernels::serial::matched_distance(a, b));
  }
}

template <bool Parallel>
void BM_SampleParticular(benchmark::State& state) {
  const ShiftSource src = gaussian_source(Vec2(1.0, 0.5), 0.3, 0.8);
  const kernels::ParticularProblem p{cplx(0.4, 1.1), src.g, src.support};
  std::vector<double> xs(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = 40.0 * i / (xs.size() - 1);
  std::vector<Vec2> out(xs.size());
  for (auto _ : state) {
    if (Parallel) {
      kernels::omp::sample_particular(p, xs, kernels::Side::Right, out);
    } else {
      kernels::serial::sample_particular(p, xs, kernels::Side::Right, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
}

BENCHMARK(BM_PairingResidual<false>)->Arg(200)->Arg(1000);
BENCHMARK(BM_PairingResidual<true>)->Arg(200)->Arg(1000);
BENCHMARK(BM_MatchedDistance<false>)->Arg(200)->Arg(1000);
BENCHMARK(BM_MatchedDistance<true>)->Arg(200)->Arg(1000);
BENCHMARK(BM_SampleParticular<false>)->Arg(401)->Arg(2001);
BENCHMARK(BM_SampleParticular<true>)->Arg(401)->Arg(2001);

}  // namespace

BENCHMARK_MAIN();

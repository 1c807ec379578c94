#include "kummerlab/kernels.hpp"
#include "kummerlab/local_dimension.hpp"
#include "kummerlab/periodic.hpp"
#include "kummerlab/wehler_newton.hpp"

#include <benchmark/benchmark.h>

#include <numeric>

using namespace kummerlab;

namespace {

struct WeylInput {
  kernels::Numerators num;
  std::int64_t den = 1;
  std::vector<Frequency> ks;
};

const WeylInput& weyl_input() {
  static const WeylInput in = [] {
    WeylInput w;
    const PeriodicEnsemble e = fix_enumerate(TorusAutomorphism(IntMatrix{{2, 1}, {1, 1}}), 6);
    for (const auto& p : e.points) w.den = std::lcm(w.den, p.den);
    for (const auto& p : e.points) {
      std::array<std::int64_t, 4> v{};
      for (int k = 0; k < 4; ++k) v[k] = p.num[k] * (w.den / p.den);
      w.num.push_back(v);
    }
    w.ks = frequencies(2);
    return w;
  }();
  return in;
}

void BM_WeylSerial(benchmark::State& st) {
  const auto& w = weyl_input();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::weyl_sums_serial(w.num, w.den, w.ks));
}
void BM_WeylParallel(benchmark::State& st) {
  const auto& w = weyl_input();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::weyl_sums_parallel(w.num, w.den, w.ks));
}

void BM_HaarSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::haar_samples_serial(1, 100000));
}
void BM_HaarParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::haar_samples_parallel(1, 100000));
}

template <bool Parallel>
void BM_BallCounts(benchmark::State& st) {
  const auto pts = kernels::haar_samples_serial(1, 50000);
  const auto centers = choose_probes(pts.size(), 50, 1);
  const auto radii = log_spaced_radii(0.5, 0.05, 10);
  auto d = [](const TorusPoint& a, const TorusPoint& b) { return torus_distance(a, b, TorusLattice{}); };
  for (auto _ : st) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::ball_counts_parallel(pts, centers, radii, d));
    else
      benchmark::DoNotOptimize(kernels::ball_counts_serial(pts, centers, radii, d));
  }
}

template <bool Parallel>
void BM_NewtonPeriod3(benchmark::State& st) {
  const WehlerSurface s = random_surface(7);
  NewtonOptions o;
  o.parallel = Parallel;
  for (auto _ : st) benchmark::DoNotOptimize(newton_periodic(s, 3, 100, 1, o));
}

}  // namespace

BENCHMARK(BM_WeylSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeylParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HaarSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HaarParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BallCounts<false>)->Name("BM_BallCountsSerial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BallCounts<true>)->Name("BM_BallCountsParallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NewtonPeriod3<false>)->Name("BM_NewtonSerial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NewtonPeriod3<true>)->Name("BM_NewtonParallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

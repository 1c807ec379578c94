#pragma once

// Data-parallel kernels, each with a serial reference. The parallel
// versions write into per-index slots only, so they agree bit for bit
// with the serial ones whatever the number of threads.

#include "kummerlab/torus.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace kummerlab::kernels {

using Numerators = std::vector<std::array<std::int64_t, 4>>;

/// W(k) = (1/N) sum_p exp(2 pi i <k, p>) for points num/den.
std::vector<std::complex<double>> weyl_sums_serial(const Numerators& num, std::int64_t den,
                                                   const std::vector<std::array<int, 4>>& ks);
std::vector<std::complex<double>> weyl_sums_parallel(const Numerators& num, std::int64_t den,
                                                     const std::vector<std::array<int, 4>>& ks);

/// Uniform samples on [0,1)^4; sample i comes from stream (seed, i).
std::vector<TorusPoint> haar_samples_serial(std::uint64_t seed, std::size_t n);
std::vector<TorusPoint> haar_samples_parallel(std::uint64_t seed, std::size_t n);

/// counts[j][r] = #{i != centers[j] : dist(samples[i], samples[centers[j]]) <= radii[r]}.
template <class P, class Dist>
std::vector<std::vector<std::size_t>> ball_counts_serial(const std::vector<P>& samples,
                                                         const std::vector<std::size_t>& centers,
                                                         const std::vector<double>& radii, Dist dist) {
  std::vector<std::vector<std::size_t>> out(centers.size(), std::vector<std::size_t>(radii.size(), 0));
  for (std::size_t j = 0; j < centers.size(); ++j) {
    const P& x = samples[centers[j]];
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (i == centers[j]) continue;
      const double d = dist(x, samples[i]);
      for (std::size_t r = 0; r < radii.size(); ++r)
        if (d <= radii[r]) ++out[j][r];
    }
  }
  return out;
}

template <class P, class Dist>
std::vector<std::vector<std::size_t>> ball_counts_parallel(const std::vector<P>& samples,
                                                           const std::vector<std::size_t>& centers,
                                                           const std::vector<double>& radii, Dist dist) {
  std::vector<std::vector<std::size_t>> out(centers.size(), std::vector<std::size_t>(radii.size(), 0));
  const long long nc = static_cast<long long>(centers.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long j = 0; j < nc; ++j) {
    const P& x = samples[centers[j]];
    auto& row = out[j];
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (i == centers[j]) continue;
      const double d = dist(x, samples[i]);
      for (std::size_t r = 0; r < radii.size(); ++r)
        if (d <= radii[r]) ++row[r];
    }
  }
  return out;
}

/// Number of OpenMP threads in use (1 when built without OpenMP).
int thread_count();
void set_thread_count(int n);

}  // namespace kummerlab::kernels

#pragma once

#include "kummerlab/kernels.hpp"
#include "kummerlab/rng.hpp"

#include <cstdint>
#include <vector>

namespace kummerlab {

struct DimensionEstimate {
  double dimension = 0;
  double std_error = 0;
  std::size_t probes_used = 0;
  /// Probes whose ball at the smallest radius was empty.
  std::size_t empty_probes = 0;
};

inline constexpr std::size_t kMinDimensionSamples = 1000;

/// `count` radii from r_max down to r_min, equally spaced in log r.
std::vector<double> log_spaced_radii(double r_max, double r_min, int count);

/// InsufficientSamples / DegenerateRadii / Precondition checks.
void validate_dimension_inputs(std::size_t n_samples, const std::vector<double>& radii, std::size_t probes);

/// Count-weighted least-squares slope of log count against log r per probe,
/// then mean and standard error over probes.
DimensionEstimate fit_dimension(const std::vector<std::vector<std::size_t>>& counts, const std::vector<double>& radii);

/// Probe j is sample number Stream(seed, j).below(n).
std::vector<std::size_t> choose_probes(std::size_t n, std::size_t probes, std::uint64_t seed);

template <class P, class Dist>
DimensionEstimate local_dimension_estimate(const std::vector<P>& samples, Dist dist, const std::vector<double>& radii,
                                           std::size_t probes, std::uint64_t seed = 0, bool parallel = true) {
  validate_dimension_inputs(samples.size(), radii, probes);
  const auto centers = choose_probes(samples.size(), probes, seed);
  const auto counts = parallel ? kernels::ball_counts_parallel(samples, centers, radii, dist)
                               : kernels::ball_counts_serial(samples, centers, radii, dist);
  return fit_dimension(counts, radii);
}

}  // namespace kummerlab

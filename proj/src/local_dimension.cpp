#include "kummerlab/local_dimension.hpp"

#include "kummerlab/error.hpp"

#include <cmath>

namespace kummerlab {

std::vector<double> log_spaced_radii(double r_max, double r_min, int count) {
  if (count < 2 || !(r_max > r_min) || !(r_min > 0)) throw Error(ErrorCode::InvalidInput, "bad radius range");
  std::vector<double> r(static_cast<std::size_t>(count));
  const double a = std::log(r_max), b = std::log(r_min);
  for (int i = 0; i < count; ++i) r[i] = std::exp(a + (b - a) * i / (count - 1));
  r.back() = r_min;
  return r;
}

void validate_dimension_inputs(std::size_t n_samples, const std::vector<double>& radii, std::size_t probes) {
  if (n_samples < kMinDimensionSamples)
    throw Error(ErrorCode::InsufficientSamples, "need at least 1000 samples, got " + std::to_string(n_samples));
  if (radii.size() < 2) throw Error(ErrorCode::DegenerateRadii, "need at least two radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0)) throw Error(ErrorCode::DegenerateRadii, "radii must be positive");
    if (i && !(radii[i] < radii[i - 1])) throw Error(ErrorCode::DegenerateRadii, "radii must be decreasing");
  }
  if (radii.front() / radii.back() < 10.0 * (1 - 1e-12))
    throw Error(ErrorCode::DegenerateRadii, "radii must span at least one decade");
  if (probes == 0 || probes > n_samples) throw Error(ErrorCode::Precondition, "probes must be in [1, samples]");
}

DimensionEstimate fit_dimension(const std::vector<std::vector<std::size_t>>& counts, const std::vector<double>& radii) {
  DimensionEstimate est;
  std::vector<double> slopes;
  for (const auto& row : counts) {
    if (row.back() == 0) ++est.empty_probes;
    double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    int used = 0;
    for (std::size_t r = 0; r < radii.size(); ++r) {
      if (row[r] == 0) continue;
      // Var(log count) ~ 1/count for Poisson counts.
      const double w = static_cast<double>(row[r]);
      const double x = std::log(radii[r]), y = std::log(static_cast<double>(row[r]));
      sw += w;
      sx += w * x;
      sy += w * y;
      sxx += w * x * x;
      sxy += w * x * y;
      ++used;
    }
    if (used < 2) continue;
    const double den = sw * sxx - sx * sx;
    if (den <= 0) continue;
    slopes.push_back((sw * sxy - sx * sy) / den);
  }
  if (2 * est.empty_probes > counts.size())
    throw Error(ErrorCode::DegenerateRadii, "more than half of the probes have empty balls at the smallest radius");
  if (slopes.empty()) throw Error(ErrorCode::DegenerateRadii, "no probe has two nonempty radii");
  double mean = 0;
  for (double s : slopes) mean += s;
  mean /= static_cast<double>(slopes.size());
  double var = 0;
  for (double s : slopes) var += (s - mean) * (s - mean);
  est.dimension = mean;
  est.probes_used = slopes.size();
  est.std_error = slopes.size() > 1 ? std::sqrt(var / static_cast<double>(slopes.size() - 1) / static_cast<double>(slopes.size())) : 0.0;
  return est;
}

std::vector<std::size_t> choose_probes(std::size_t n, std::size_t probes, std::uint64_t seed) {
  std::vector<std::size_t> c(probes);
  for (std::size_t j = 0; j < probes; ++j) c[j] = static_cast<std::size_t>(Stream(seed ^ 0x5EEDBA11ULL, j).below(n));
  return c;
}

}  // namespace kummerlab

#pragma once

#include <algorithm>

namespace kummerlab {

template <class P, class Dist>
std::vector<double> automatic_radii(const std::vector<P>& pts, Dist dist, const std::vector<std::size_t>& probes,
                                    int count) {
  if (pts.size() < kMinDimensionSamples || probes.empty()) return {};
  const std::size_t near = 10, far = pts.size() / 10;
  std::vector<double> lo, hi;
  std::vector<double> d(pts.size());
  for (std::size_t c : probes) {
    for (std::size_t i = 0; i < pts.size(); ++i) d[i] = i == c ? -1.0 : dist(pts[c], pts[i]);
    std::nth_element(d.begin(), d.begin() + static_cast<long>(near), d.end());
    lo.push_back(d[near]);
    std::nth_element(d.begin(), d.begin() + static_cast<long>(far), d.end());
    hi.push_back(d[far]);
  }
  auto median = [](std::vector<double>& v) {
    std::nth_element(v.begin(), v.begin() + static_cast<long>(v.size() / 2), v.end());
    return v[v.size() / 2];
  };
  double r_min = median(lo), r_max = median(hi);
  if (!(r_min > 0)) return {};
  r_max = std::max(r_max, 10.0 * r_min);
  return log_spaced_radii(r_max, r_min, count);
}

}  // namespace kummerlab

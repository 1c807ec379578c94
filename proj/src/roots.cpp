#include "kummerlab/roots.hpp"

#include "kummerlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace kummerlab {

std::vector<ComplexLD> polynomial_roots(const IntPolynomial& p) {
  const int n = p.degree();
  if (n < 1) return {};
  std::vector<long double> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = to_long_double(p[i]) / to_long_double(p.leading());
  if (n == 1) return {ComplexLD(-c[0], 0)};

  // Cauchy-type radius for the initial circle.
  long double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::pow(std::fabs(c[i]), 1.0L / (n - i)));
  radius = std::max(radius, 1e-3L);

  std::vector<ComplexLD> z(n);
  for (int k = 0; k < n; ++k) {
    long double angle = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[k] = std::polar(radius, angle);
  }
  auto eval = [&](ComplexLD x, ComplexLD& dp) {
    ComplexLD v = 1, d = 0;
    for (int i = n - 1; i >= 0; --i) {
      d = d * x + v;
      v = v * x + c[i];
    }
    dp = d;
    return v;
  };
  const long double eps = std::numeric_limits<long double>::epsilon();
  for (int iter = 0; iter < 2000; ++iter) {
    long double max_step = 0;
    for (int k = 0; k < n; ++k) {
      ComplexLD dp;
      ComplexLD v = eval(z[k], dp);
      if (v == ComplexLD(0)) continue;
      ComplexLD ratio = v / dp;
      ComplexLD sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      ComplexLD step = ratio / (1.0L - ratio * sum);
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0L, std::abs(z[k])));
    }
    if (max_step < 8 * eps) break;
  }
  // A few plain Newton steps per root tighten the last digits.
  for (auto& x : z) {
    for (int i = 0; i < 3; ++i) {
      ComplexLD dp;
      ComplexLD v = eval(x, dp);
      if (std::abs(dp) == 0) break;
      x -= v / dp;
    }
  }
  std::sort(z.begin(), z.end(), [](const ComplexLD& a, const ComplexLD& b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
    return a.imag() > b.imag();
  });
  return z;
}

std::optional<long double> dominant_root_power_iteration(const IntPolynomial& p, int max_iter) {
  const int n = p.degree();
  if (n < 1) return std::nullopt;
  std::vector<long double> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = to_long_double(p[i]) / to_long_double(p.leading());
  if (n == 1) return -c[0];
  // Companion matrix acting on (x_{k}, ..., x_{k+n-1}) as the linear recurrence.
  std::vector<long double> v(n, 1.0L), w(n);
  for (int i = 0; i < n; ++i) v[i] = 1.0L + 0.1L * i;
  long double estimate = 0, previous = 0;
  int stable = 0;
  for (int iter = 0; iter < max_iter; ++iter) {
    long double next = 0;
    for (int i = 0; i < n; ++i) next -= c[i] * v[i];
    for (int i = 0; i + 1 < n; ++i) w[i] = v[i + 1];
    w[n - 1] = next;
    long double norm = 0;
    for (long double x : w) norm = std::max(norm, std::fabs(x));
    if (norm == 0) return std::nullopt;
    // ratio of last components estimates the dominant eigenvalue
    estimate = (std::fabs(v[n - 1]) > 0) ? w[n - 1] / v[n - 1] : 0;
    for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
    if (iter > 10 && std::fabs(estimate - previous) <= 1e-15L * std::max(1.0L, std::fabs(estimate))) {
      if (++stable >= 5) return estimate;
    } else {
      stable = 0;
    }
    previous = estimate;
  }
  return std::nullopt;
}

long double newton_polish(const IntPolynomial& p, long double x, int iterations) {
  IntPolynomial dp = p.derivative();
  for (int i = 0; i < iterations; ++i) {
    long double f = p.eval(x);
    long double d = dp.eval(x);
    if (d == 0) break;
    long double step = f / d;
    x -= step;
    if (std::fabs(step) <= std::numeric_limits<long double>::epsilon() * std::fabs(x)) break;
  }
  return x;
}

long double relative_residual(const IntPolynomial& p, long double x) {
  long double scale = p.abs_eval(x);
  if (scale == 0) return 0;
  return std::fabs(p.eval(x)) / scale;
}

}  // namespace kummerlab

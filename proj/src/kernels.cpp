#include "kummerlab/kernels.hpp"

#include "kummerlab/rng.hpp"

#include <cmath>
#include <numbers>
#include <omp.h>

namespace kummerlab::kernels {

namespace {

constexpr std::int64_t kTableLimit = std::int64_t(1) << 22;

struct Phases {
  std::int64_t den;
  std::vector<double> c, s;

  explicit Phases(std::int64_t d) : den(d) {
    if (den > kTableLimit) return;
    c.resize(static_cast<std::size_t>(den));
    s.resize(static_cast<std::size_t>(den));
    for (std::int64_t r = 0; r < den; ++r) {
      long double a = 2 * std::numbers::pi_v<long double> * r / den;
      c[r] = static_cast<double>(std::cos(a));
      s[r] = static_cast<double>(std::sin(a));
    }
  }

  void at(std::int64_t r, double* cr, double* sr) const {
    if (!c.empty()) {
      *cr = c[r];
      *sr = s[r];
      return;
    }
    long double a = 2 * std::numbers::pi_v<long double> * r / den;
    *cr = static_cast<double>(std::cos(a));
    *sr = static_cast<double>(std::sin(a));
  }
};

// Neumaier compensated sum.
struct Compensated {
  double sum = 0, carry = 0;
  void add(double x) {
    double t = sum + x;
    carry += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

std::complex<double> weyl_one(const Numerators& num, std::int64_t den, const std::array<int, 4>& k,
                              const Phases& ph) {
  Compensated re, im;
  for (const auto& p : num) {
    __int128 acc = 0;
    for (int i = 0; i < 4; ++i) acc += static_cast<__int128>(k[i]) * p[i];
    std::int64_t r = static_cast<std::int64_t>(acc % den);
    if (r < 0) r += den;
    double c, s;
    ph.at(r, &c, &s);
    re.add(c);
    im.add(s);
  }
  const double n = static_cast<double>(num.size());
  return {re.value() / n, im.value() / n};
}

TorusPoint haar_point(std::uint64_t seed, std::size_t i) {
  Stream st(seed, i);
  return {st.uniform(), st.uniform(), st.uniform(), st.uniform()};
}

}  // namespace

std::vector<std::complex<double>> weyl_sums_serial(const Numerators& num, std::int64_t den,
                                                   const std::vector<std::array<int, 4>>& ks) {
  Phases ph(den);
  std::vector<std::complex<double>> out(ks.size());
  for (std::size_t j = 0; j < ks.size(); ++j) out[j] = weyl_one(num, den, ks[j], ph);
  return out;
}

std::vector<std::complex<double>> weyl_sums_parallel(const Numerators& num, std::int64_t den,
                                                     const std::vector<std::array<int, 4>>& ks) {
  Phases ph(den);
  std::vector<std::complex<double>> out(ks.size());
  const long long n = static_cast<long long>(ks.size());
#pragma omp parallel for schedule(static)
  for (long long j = 0; j < n; ++j) out[j] = weyl_one(num, den, ks[j], ph);
  return out;
}

std::vector<TorusPoint> haar_samples_serial(std::uint64_t seed, std::size_t n) {
  std::vector<TorusPoint> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = haar_point(seed, i);
  return out;
}

std::vector<TorusPoint> haar_samples_parallel(std::uint64_t seed, std::size_t n) {
  std::vector<TorusPoint> out(n);
  const long long m = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < m; ++i) out[i] = haar_point(seed, static_cast<std::size_t>(i));
  return out;
}

int thread_count() { return omp_get_max_threads(); }

void set_thread_count(int n) {
  if (n > 0) omp_set_num_threads(n);
}

}  // namespace kummerlab::kernels

#include "kummerlab/periodic.hpp"

#include "kummerlab/error.hpp"
#include "kummerlab/kernels.hpp"

#include <algorithm>

namespace kummerlab {

namespace {

IntMatrix period_matrix(const TorusAutomorphism& f, unsigned n) {
  return f.matrix().pow(n) - IntMatrix::identity(2);
}

}  // namespace

BigInt fix_count(const TorusAutomorphism& f, unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "period must be positive");
  BigInt d = period_matrix(f, n).determinant();
  if (d == 0) throw Error(ErrorCode::DegeneratePeriod, "det(M^n - I) = 0");
  return d * d;
}

PeriodicEnsemble fix_enumerate(const TorusAutomorphism& f, unsigned n, long long cap) {
  PeriodicEnsemble e;
  e.period = n;
  e.count = fix_count(f, n);
  if (e.count > cap) throw Error(ErrorCode::CapExceeded, "fix count " + e.count.str() + " exceeds cap");
  // U A V = D, so A v in Z^4 iff v = V y with y_i in (1/d_i) Z.
  SmithForm s = smith_normal_form(kron_identity(period_matrix(f, n), 2));
  std::array<std::int64_t, 4> d{};
  for (int i = 0; i < 4; ++i) d[i] = s.d(i, i).convert_to<std::int64_t>();
  const std::int64_t den = d[3];
  std::array<std::array<std::int64_t, 4>, 4> v{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v[i][j] = floor_mod(s.v(i, j), BigInt(den)).convert_to<std::int64_t>();
  const std::size_t total = static_cast<std::size_t>(e.count.convert_to<long long>());
  e.points.resize(total);
  std::array<std::int64_t, 4> k{};
  for (std::size_t idx = 0; idx < total; ++idx) {
    RationalTorusPoint p;
    p.den = den;
    for (int r = 0; r < 4; ++r) {
      __int128 acc = 0;
      for (int c = 0; c < 4; ++c) acc += static_cast<__int128>(v[r][c]) * (k[c] * (den / d[c]) % den);
      p.num[r] = static_cast<std::int64_t>(acc % den);
    }
    e.points[idx] = p;
    for (int c = 3; c >= 0; --c) {
      if (++k[c] < d[c]) break;
      k[c] = 0;
    }
  }
  std::sort(e.points.begin(), e.points.end(), [](const auto& a, const auto& b) { return a.num < b.num; });
  return e;
}

std::vector<Frequency> frequencies(int k_max) {
  std::vector<Frequency> out;
  for (int a = -k_max; a <= k_max; ++a)
    for (int b = -k_max; b <= k_max; ++b)
      for (int c = -k_max; c <= k_max; ++c)
        for (int d = -k_max; d <= k_max; ++d)
          if (a || b || c || d) out.push_back({a, b, c, d});
  return out;
}

WeylReport equidistribution_test(const PeriodicEnsemble& e, int k_max, bool parallel) {
  if (e.points.empty()) throw Error(ErrorCode::EmptyEnsemble, "no points");
  const std::vector<Frequency> ks = frequencies(k_max);
  std::vector<std::array<std::int64_t, 4>> num(e.points.size());
  const std::int64_t den = e.points.front().den;
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (e.points[i].den != den) throw Error(ErrorCode::InvalidInput, "ensemble points need a common denominator");
    num[i] = e.points[i].num;
  }
  const auto w = parallel ? kernels::weyl_sums_parallel(num, den, ks) : kernels::weyl_sums_serial(num, den, ks);
  WeylReport r;
  r.k_max = k_max;
  r.frequency_count = ks.size();
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const double a = std::abs(w[i]);
    r.max_abs = std::max(r.max_abs, a);
    r.max_deviation = std::max(r.max_deviation, std::min(a, std::fabs(1.0 - a)));
    if (a > kWeylThreshold)
      r.trivial.push_back(ks[i]);
    else
      r.max_abs_nontrivial_free = std::max(r.max_abs_nontrivial_free, a);
  }
  r.trivial_fraction = ks.empty() ? 0.0 : static_cast<double>(r.trivial.size()) / static_cast<double>(ks.size());
  return r;
}

bool character_trivial(const TorusAutomorphism& f, unsigned n, const Frequency& k) {
  (void)fix_count(f, n);
  SmithForm s = smith_normal_form(kron_identity(period_matrix(f, n), 2));
  for (int i = 0; i < 4; ++i) {
    BigInt acc = 0;
    for (int j = 0; j < 4; ++j) acc += k[j] * s.v(j, i);
    if (acc % s.d(i, i) != 0) return false;
  }
  return true;
}

double trivial_fraction(const TorusAutomorphism& f, unsigned n, int k_max) {
  (void)fix_count(f, n);
  SmithForm s = smith_normal_form(kron_identity(period_matrix(f, n), 2));
  const auto ks = frequencies(k_max);
  std::size_t hits = 0;
  for (const auto& k : ks) {
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i) {
      BigInt acc = 0;
      for (int j = 0; j < 4; ++j) acc += k[j] * s.v(j, i);
      ok = acc % s.d(i, i) == 0;
    }
    hits += ok;
  }
  return static_cast<double>(hits) / static_cast<double>(ks.size());
}

}  // namespace kummerlab

#include "kummerlab/torus.hpp"

#include "kummerlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kummerlab {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  __int128 r = static_cast<__int128>(a) * b % m;
  return static_cast<std::int64_t>(r < 0 ? r + m : r);
}

double wrap(double x) {
  x -= std::floor(x);
  return x >= 1.0 ? 0.0 : x;
}

double neg_wrap(double x) { return x == 0.0 ? 0.0 : wrap(1.0 - x); }

const std::complex<double> kZeta3{-0.5, 0.86602540378443864676};

}  // namespace

TorusLattice::TorusLattice(std::complex<double> tau) : tau_(tau) {
  if (!(tau.imag() > 0)) throw Error(ErrorCode::InvalidInput, "tau must have positive imaginary part");
}

const char* to_string(Quotient q) {
  switch (q) {
    case Quotient::None: return "none";
    case Quotient::Kummer: return "kummer";
    case Quotient::EtaTau: return "eta_tau";
  }
  return "?";
}

Quotient parse_quotient(const std::string& s) {
  if (s == "none") return Quotient::None;
  if (s == "kummer") return Quotient::Kummer;
  if (s == "eta_tau") return Quotient::EtaTau;
  throw Error(ErrorCode::InvalidInput, "unknown quotient '" + s + "'");
}

RationalTorusPoint RationalTorusPoint::reduced() const {
  RationalTorusPoint r = *this;
  std::int64_t g = den;
  for (auto& n : r.num) {
    n = mod(n, den);
    g = std::gcd(g, n);
  }
  if (g > 1) {
    for (auto& n : r.num) n /= g;
    r.den /= g;
  }
  return r;
}

TorusPoint RationalTorusPoint::to_point() const {
  TorusPoint p;
  for (int i = 0; i < 4; ++i) p[i] = static_cast<double>(mod(num[i], den)) / static_cast<double>(den);
  return p;
}

std::string RationalTorusPoint::coord_string(int i) const {
  std::int64_t n = mod(num[i], den), d = den;
  std::int64_t g = std::gcd(n, d);
  if (g == 0) g = 1;
  return std::to_string(n / g) + "/" + std::to_string(d / g);
}

bool operator==(const RationalTorusPoint& a, const RationalTorusPoint& b) {
  RationalTorusPoint x = a.reduced(), y = b.reduced();
  return x.den == y.den && x.num == y.num;
}

bool operator<(const RationalTorusPoint& a, const RationalTorusPoint& b) {
  // Compare as rationals coordinate by coordinate.
  for (int i = 0; i < 4; ++i) {
    __int128 l = static_cast<__int128>(mod(a.num[i], a.den)) * b.den;
    __int128 r = static_cast<__int128>(mod(b.num[i], b.den)) * a.den;
    if (l != r) return l < r;
  }
  return false;
}

RationalTorusPoint operator+(const RationalTorusPoint& a, const RationalTorusPoint& b) {
  RationalTorusPoint r;
  std::int64_t g = std::gcd(a.den, b.den);
  r.den = a.den / g * b.den;
  for (int i = 0; i < 4; ++i)
    r.num[i] = mod(mulmod(a.num[i], r.den / a.den, r.den) + mulmod(b.num[i], r.den / b.den, r.den), r.den);
  return r;
}

RationalTorusPoint operator-(const RationalTorusPoint& a) {
  RationalTorusPoint r = a;
  for (auto& n : r.num) n = mod(-n, r.den);
  return r;
}

TorusAutomorphism::TorusAutomorphism(IntMatrix m, TorusLattice lattice, Quotient quotient)
    : m_(std::move(m)), lattice_(lattice), quotient_(quotient) {
  if (m_.dim() != 2) throw Error(ErrorCode::InvalidInput, "torus automorphism needs a 2x2 matrix");
  BigInt d = m_.determinant();
  if (d != 1 && d != -1) throw Error(ErrorCode::InvalidInput, "|det M| must be 1");
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (!fits_int64(m_(i, j)) || abs(m_(i, j)) > BigInt(1) << 40)
        throw Error(ErrorCode::InvalidInput, "matrix entries too large for orbit arithmetic");
      e_[2 * i + j] = m_(i, j).convert_to<long long>();
    }
  if (quotient_ == Quotient::EtaTau) (void)eta_tau_order(lattice_);
}

TorusAutomorphism TorusAutomorphism::inverse() const {
  return TorusAutomorphism(m_.unimodular_inverse(), lattice_, quotient_);
}

IntMatrix TorusAutomorphism::lattice_action() const { return kron_identity(m_, 2); }

IntMatrix TorusAutomorphism::h2_action() const { return exterior_square(lattice_action()); }

TorusPoint reduce_mod1(TorusPoint p) {
  for (auto& c : p) c = wrap(c);
  return p;
}

TorusPoint apply(const TorusAutomorphism& f, const TorusPoint& p) {
  const double m00 = f.entry(0, 0), m01 = f.entry(0, 1), m10 = f.entry(1, 0), m11 = f.entry(1, 1);
  return {wrap(m00 * p[0] + m01 * p[2]), wrap(m00 * p[1] + m01 * p[3]), wrap(m10 * p[0] + m11 * p[2]),
          wrap(m10 * p[1] + m11 * p[3])};
}

RationalTorusPoint apply(const TorusAutomorphism& f, const RationalTorusPoint& p) {
  const std::int64_t d = p.den;
  auto lin = [&](long long x, std::int64_t u, long long y, std::int64_t v) {
    return mod(mulmod(mod(x, d), u, d) + mulmod(mod(y, d), v, d), d);
  };
  RationalTorusPoint r;
  r.den = d;
  r.num[0] = lin(f.entry(0, 0), p.num[0], f.entry(0, 1), p.num[2]);
  r.num[1] = lin(f.entry(0, 0), p.num[1], f.entry(0, 1), p.num[3]);
  r.num[2] = lin(f.entry(1, 0), p.num[0], f.entry(1, 1), p.num[2]);
  r.num[3] = lin(f.entry(1, 0), p.num[1], f.entry(1, 1), p.num[3]);
  return r;
}

TorusPoint apply_on_quotient(const TorusAutomorphism& f, const TorusPoint& p) {
  TorusPoint q = kummerlab::apply(f, p);
  switch (f.quotient()) {
    case Quotient::None: return q;
    case Quotient::Kummer: return kummer_project(q);
    case Quotient::EtaTau: return eta_tau_project(q, f.lattice());
  }
  return q;
}

const char* to_string(LyapunovMethod m) {
  switch (m) {
    case LyapunovMethod::ExactEigen: return "EXACT_EIGEN";
    case LyapunovMethod::QrOrbit: return "QR_ORBIT";
    case LyapunovMethod::SaddleMultipliers: return "SADDLE_MULTIPLIERS";
  }
  return "?";
}

LyapunovReport lyapunov_exact(const TorusAutomorphism& f) {
  const long double tr = static_cast<long double>(f.entry(0, 0) + f.entry(1, 1));
  const long double det = static_cast<long double>(f.entry(0, 0) * f.entry(1, 1) - f.entry(0, 1) * f.entry(1, 0));
  const long double disc = tr * tr - 4 * det;
  if (disc <= 0 || std::fabs(tr) + std::sqrt(disc) <= 2.0L)
    throw Error(ErrorCode::NotHyperbolic, "both eigenvalues have modulus 1");
  const long double rho = (std::fabs(tr) + std::sqrt(disc)) / 2;
  LyapunovReport r;
  r.lambda_u = static_cast<double>(std::log(rho));
  r.lambda_s = -r.lambda_u;  // |det M| = 1
  r.method = LyapunovMethod::ExactEigen;
  return r;
}

LyapunovReport lyapunov_qr_orbit(const TorusAutomorphism& f, const TorusPoint& p0, long long n_steps) {
  if (n_steps < 100) throw Error(ErrorCode::Precondition, "n_steps must be at least 100");
  const double m00 = f.entry(0, 0), m01 = f.entry(0, 1), m10 = f.entry(1, 0), m11 = f.entry(1, 1);
  // The O(1/n) transient of the first steps is discarded.
  const long long warm = std::min<long long>(100, n_steps / 10);
  const long long body = n_steps - warm;
  const int batches = 10;
  std::array<double, 2> q0{1.0, 0.0}, q1{0.0, 1.0};
  TorusPoint p = reduce_mod1(p0);
  std::array<double, batches> bu{}, bs{};
  std::array<long long, batches> bn{};
  for (long long k = 0; k < n_steps; ++k) {
    p = kummerlab::apply(f, p);
    std::array<double, 2> a0{m00 * q0[0] + m01 * q0[1], m10 * q0[0] + m11 * q0[1]};
    std::array<double, 2> a1{m00 * q1[0] + m01 * q1[1], m10 * q1[0] + m11 * q1[1]};
    double r00 = std::hypot(a0[0], a0[1]);
    q0 = {a0[0] / r00, a0[1] / r00};
    double r01 = q0[0] * a1[0] + q0[1] * a1[1];
    a1 = {a1[0] - r01 * q0[0], a1[1] - r01 * q0[1]};
    double r11 = std::hypot(a1[0], a1[1]);
    q1 = {a1[0] / r11, a1[1] / r11};
    if (k < warm) continue;
    int b = static_cast<int>(std::min<long long>(batches - 1, (k - warm) * batches / body));
    bu[b] += std::log(r00);
    bs[b] += std::log(r11);
    ++bn[b];
  }
  double su = 0, ss = 0;
  std::array<double, batches> mu{}, ms{};
  for (int b = 0; b < batches; ++b) {
    mu[b] = bu[b] / static_cast<double>(bn[b]);
    ms[b] = bs[b] / static_cast<double>(bn[b]);
    su += bu[b];
    ss += bs[b];
  }
  LyapunovReport r;
  r.method = LyapunovMethod::QrOrbit;
  r.lambda_u = su / static_cast<double>(body);
  r.lambda_s = ss / static_cast<double>(body);
  double vu = 0, vs = 0, au = 0, as = 0;
  for (int b = 0; b < batches; ++b) {
    au += mu[b];
    as += ms[b];
  }
  au /= batches;
  as /= batches;
  for (int b = 0; b < batches; ++b) {
    vu += (mu[b] - au) * (mu[b] - au);
    vs += (ms[b] - as) * (ms[b] - as);
  }
  r.std_error_u = std::sqrt(vu / (batches - 1) / batches);
  r.std_error_s = std::sqrt(vs / (batches - 1) / batches);
  r.std_error = std::max(r.std_error_u, r.std_error_s);
  r.samples = body;
  return r;
}

SpectralReport h2_degree(const TorusAutomorphism& f) { return dynamical_degree(f.h2_action()); }

TorusPoint kummer_project(const TorusPoint& p) {
  TorusPoint n{neg_wrap(p[0]), neg_wrap(p[1]), neg_wrap(p[2]), neg_wrap(p[3])};
  TorusPoint q = reduce_mod1(p);
  return std::min(q, n);
}

RationalTorusPoint kummer_project(const RationalTorusPoint& p) {
  RationalTorusPoint q = p;
  for (auto& n : q.num) n = mod(n, q.den);
  RationalTorusPoint n = -q;
  return n.num < q.num ? n : q;
}

int eta_tau_order(const TorusLattice& lattice) {
  const auto tau = lattice.tau();
  if (std::abs(tau - std::complex<double>(0, 1)) <= 1e-12) return 4;
  if (std::abs(tau - kZeta3) <= 1e-12) return 3;
  throw Error(ErrorCode::UnsupportedTau, "eta_tau needs tau = i or exp(2 pi i/3)");
}

IntMatrix eta_tau_matrix(const TorusLattice& lattice) {
  return eta_tau_order(lattice) == 4 ? IntMatrix{{0, -1}, {1, 0}} : IntMatrix{{0, -1}, {1, -1}};
}

TorusPoint eta_tau_apply(const TorusPoint& p, const TorusLattice& lattice) {
  // tau (a + b tau) = -b + a tau (tau = i) or -b + (a - b) tau (tau = zeta_3)
  const bool four = eta_tau_order(lattice) == 4;
  TorusPoint q;
  for (int f = 0; f < 2; ++f) {
    double a = p[2 * f], b = p[2 * f + 1];
    q[2 * f] = neg_wrap(wrap(b));
    q[2 * f + 1] = four ? wrap(a) : wrap(a - b);
  }
  return q;
}

RationalTorusPoint eta_tau_apply(const RationalTorusPoint& p, const TorusLattice& lattice) {
  const bool four = eta_tau_order(lattice) == 4;
  RationalTorusPoint q = p;
  for (int f = 0; f < 2; ++f) {
    std::int64_t a = p.num[2 * f], b = p.num[2 * f + 1];
    q.num[2 * f] = mod(-b, p.den);
    q.num[2 * f + 1] = four ? mod(a, p.den) : mod(a - b, p.den);
  }
  return q;
}

TorusPoint eta_tau_project(const TorusPoint& p, const TorusLattice& lattice) {
  const int order = eta_tau_order(lattice);
  TorusPoint best = reduce_mod1(p), cur = best;
  for (int k = 1; k < order; ++k) {
    cur = eta_tau_apply(cur, lattice);
    best = std::min(best, cur);
  }
  return best;
}

RationalTorusPoint eta_tau_project(const RationalTorusPoint& p, const TorusLattice& lattice) {
  const int order = eta_tau_order(lattice);
  RationalTorusPoint cur = p;
  for (auto& n : cur.num) n = mod(n, cur.den);
  RationalTorusPoint best = cur;
  for (int k = 1; k < order; ++k) {
    cur = eta_tau_apply(cur, lattice);
    if (cur.num < best.num) best = cur;
  }
  return best;
}

namespace {

double factor_distance2(double da, double db, const TorusLattice& lattice) {
  da -= std::nearbyint(da);
  db -= std::nearbyint(db);
  const auto tau = lattice.tau();
  if (lattice.rectangular()) return da * da + db * db * tau.imag() * tau.imag();
  double best = -1;
  for (int m = -1; m <= 1; ++m)
    for (int n = -1; n <= 1; ++n) {
      std::complex<double> z = (da + m) + (db + n) * tau;
      double d = std::norm(z);
      if (best < 0 || d < best) best = d;
    }
  return best;
}

}  // namespace

double torus_distance(const TorusPoint& p, const TorusPoint& q, const TorusLattice& lattice) {
  return std::sqrt(factor_distance2(p[0] - q[0], p[1] - q[1], lattice) +
                   factor_distance2(p[2] - q[2], p[3] - q[3], lattice));
}

double kummer_distance(const TorusPoint& p, const TorusPoint& q, const TorusLattice& lattice) {
  TorusPoint nq{-q[0], -q[1], -q[2], -q[3]};
  return std::min(torus_distance(p, q, lattice), torus_distance(p, nq, lattice));
}

double eta_tau_distance(const TorusPoint& p, const TorusPoint& q, const TorusLattice& lattice) {
  const int order = eta_tau_order(lattice);
  double best = torus_distance(p, q, lattice);
  TorusPoint cur = reduce_mod1(q);
  for (int k = 1; k < order; ++k) {
    cur = eta_tau_apply(cur, lattice);
    best = std::min(best, torus_distance(p, cur, lattice));
  }
  return best;
}

double quotient_distance(const TorusAutomorphism& f, const TorusPoint& p, const TorusPoint& q) {
  switch (f.quotient()) {
    case Quotient::None: return torus_distance(p, q, f.lattice());
    case Quotient::Kummer: return kummer_distance(p, q, f.lattice());
    case Quotient::EtaTau: return eta_tau_distance(p, q, f.lattice());
  }
  return torus_distance(p, q, f.lattice());
}

}  // namespace kummerlab

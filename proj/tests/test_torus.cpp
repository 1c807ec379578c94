#include "doctest.h"

#include "kummerlab/error.hpp"
#include "kummerlab/kernels.hpp"
#include "kummerlab/periodic.hpp"
#include "kummerlab/rigidity.hpp"
#include "kummerlab/rng.hpp"

#include <cmath>
#include <numeric>
#include <set>

using namespace kummerlab;

namespace {

const TorusAutomorphism cat_map(IntMatrix{{2, 1}, {1, 1}});

// Lucas numbers L_{2n} = tr M^n for the golden matrix
long long lucas_even(int n) {
  long long a = 2, b = 1;
  for (int i = 0; i < 2 * n; ++i) {
    const long long c = a + b;
    a = b;
    b = c;
  }
  return a;
}

}  // namespace

TEST_SUITE("torus") {

TEST_CASE("automorphism validation") {
  CHECK_THROWS_AS(TorusAutomorphism(IntMatrix{{2, 0}, {0, 1}}), Error);
  CHECK_THROWS_AS(TorusAutomorphism(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), Error);
  CHECK_THROWS_AS(TorusLattice({0.3, -1.0}), Error);
  CHECK_NOTHROW(TorusAutomorphism(IntMatrix{{0, 1}, {-1, 0}}, TorusLattice({0, 1}), Quotient::EtaTau));
}

TEST_CASE("H2 degree is the square of the spectral radius") {
  for (const IntMatrix& m : {IntMatrix{{2, 1}, {1, 1}}, IntMatrix{{3, 2}, {1, 1}}, IntMatrix{{5, 2}, {2, 1}}, IntMatrix{{0, 1}, {-1, 3}}}) {
    const TorusAutomorphism f(m);
    const double tr = static_cast<double>(f.entry(0, 0) + f.entry(1, 1));
    const double det = static_cast<double>(f.entry(0, 0) * f.entry(1, 1) - f.entry(0, 1) * f.entry(1, 0));
    const double rho = (std::fabs(tr) + std::sqrt(tr * tr - 4 * det)) / 2;
    CHECK(std::fabs(h2_degree(f).lambda_f - rho * rho) <= 1e-12 * rho * rho);
  }
}

TEST_CASE("fixed point counts agree with the Lucas oracle") {
  CHECK(fix_count(cat_map, 1) == 1);
  CHECK(fix_count(cat_map, 2) == 25);
  CHECK(fix_count(cat_map, 3) == 256);
  for (int n = 1; n <= 12; ++n) {
    const long long d = 2 - lucas_even(n);
    CHECK(fix_count(cat_map, static_cast<unsigned>(n)) == BigInt(d) * d);
  }
  CHECK_THROWS_AS(fix_count(TorusAutomorphism(IntMatrix{{0, -1}, {1, 0}}), 4), Error);
}

TEST_CASE("enumeration matches counts and every point is fixed") {
  for (unsigned n = 1; n <= 4; ++n) {
    const PeriodicEnsemble e = fix_enumerate(cat_map, n);
    CHECK(BigInt(e.points.size()) == fix_count(cat_map, n));
    std::set<RationalTorusPoint> uniq(e.points.begin(), e.points.end());
    CHECK(uniq.size() == e.points.size());
    for (const auto& p : e.points) {
      RationalTorusPoint q = p;
      for (unsigned k = 0; k < n; ++k) q = kummerlab::apply(cat_map, q);
      CHECK(q == p);
    }
  }
}

TEST_CASE("the period-2 set is a subgroup") {
  const PeriodicEnsemble e = fix_enumerate(cat_map, 2);
  std::set<RationalTorusPoint> s(e.points.begin(), e.points.end());
  for (const auto& a : e.points) {
    CHECK(s.count(-a) == 1);
    for (const auto& b : e.points) CHECK(s.count((a + b).reduced()) == 1);
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(fix_enumerate(cat_map, 8, 1000), Error);
}

TEST_CASE("Weyl sums of a subgroup are 0 or 1") {
  for (unsigned n = 2; n <= 4; ++n) {
    const PeriodicEnsemble e = fix_enumerate(cat_map, n);
    const WeylReport w = equidistribution_test(e, 3);
    CHECK(w.max_deviation <= 1e-10);
    CHECK(w.trivial_fraction == doctest::Approx(trivial_fraction(cat_map, n, 3)).epsilon(1e-15));
    for (const auto& k : w.trivial) CHECK(character_trivial(cat_map, n, k));
  }
  CHECK_THROWS_AS(equidistribution_test(PeriodicEnsemble{}, 3), Error);
}

TEST_CASE("minus identity has the sixteen two-torsion points") {
  const TorusAutomorphism minus(IntMatrix{{-1, 0}, {0, -1}});
  CHECK(fix_count(minus, 1) == 16);
  const PeriodicEnsemble e = fix_enumerate(minus, 1);
  REQUIRE(e.points.size() == 16);
  for (const auto& p : e.points) {
    CHECK(p.den <= 2);
    CHECK(kummer_project(p) == p.reduced());
  }
}

TEST_CASE("orders of eta_tau") {
  CHECK(eta_tau_order(TorusLattice({0, 1})) == 4);
  CHECK(eta_tau_order(TorusLattice({-0.5, std::sqrt(3.0) / 2})) == 3);
  CHECK_THROWS_AS(eta_tau_order(TorusLattice({0.1, 1.3})), Error);
  const IntMatrix r4 = eta_tau_matrix(TorusLattice({0, 1}));
  CHECK(r4.pow(4) == IntMatrix::identity(2));
  CHECK(r4.pow(2) != IntMatrix::identity(2));
}

TEST_CASE("quotient distances are invariant") {
  Stream s(3, 0);
  const TorusLattice hex({-0.5, std::sqrt(3.0) / 2});
  for (int i = 0; i < 200; ++i) {
    TorusPoint p, q;
    for (auto& x : p) x = s.uniform();
    for (auto& x : q) x = s.uniform();
    const TorusPoint mq = reduce_mod1({-q[0], -q[1], -q[2], -q[3]});
    CHECK(kummer_distance(p, q, TorusLattice{}) == doctest::Approx(kummer_distance(p, mq, TorusLattice{})).epsilon(1e-12));
    CHECK(eta_tau_distance(p, q, hex) == doctest::Approx(eta_tau_distance(p, eta_tau_apply(q, hex), hex)).epsilon(1e-12));
    CHECK(kummer_distance(p, q, TorusLattice{}) <= torus_distance(p, q, TorusLattice{}) + 1e-15);
  }
}

TEST_CASE("Lyapunov exponents: exact and QR agree") {
  const LyapunovReport ex = lyapunov_exact(cat_map);
  CHECK(ex.lambda_u == doctest::Approx(std::log((3 + std::sqrt(5.0)) / 2)).epsilon(1e-14));
  CHECK(ex.lambda_s == -ex.lambda_u);
  const LyapunovReport qr = lyapunov_qr_orbit(cat_map, {0.1, 0.2, 0.3, 0.4}, 10000);
  CHECK(std::fabs(qr.lambda_u - ex.lambda_u) <= 1e-5);
  CHECK(std::fabs(qr.lambda_s - ex.lambda_s) <= 1e-5);
  CHECK_THROWS_AS(lyapunov_exact(TorusAutomorphism(IntMatrix{{1, 1}, {0, 1}})), Error);
  CHECK_THROWS_AS(lyapunov_qr_orbit(cat_map, {0, 0, 0, 0}, 50), Error);
}

TEST_CASE("saddle estimator recovers exact exponents on the torus") {
  const LyapunovReport r = lyapunov_from_multipliers(torus_multipliers(cat_map, 5));
  const double lu = std::log((3 + std::sqrt(5.0)) / 2);
  CHECK(std::fabs(r.lambda_u - lu) <= 1e-10);
  CHECK(std::fabs(r.lambda_s + lu) <= 1e-10);
}

TEST_CASE("kernels: parallel equals serial bit for bit") {
  const PeriodicEnsemble e = fix_enumerate(cat_map, 4);
  std::int64_t den = 1;
  for (const auto& p : e.points) den = std::lcm(den, p.den);
  kernels::Numerators num;
  for (const auto& p : e.points) {
    std::array<std::int64_t, 4> v{};
    for (int k = 0; k < 4; ++k) v[k] = p.num[k] * (den / p.den);
    num.push_back(v);
  }
  const auto ks = frequencies(2);
  CHECK(kernels::weyl_sums_serial(num, den, ks) == kernels::weyl_sums_parallel(num, den, ks));
  CHECK(kernels::haar_samples_serial(9, 5000) == kernels::haar_samples_parallel(9, 5000));
  const auto pts = kernels::haar_samples_serial(9, 5000);
  const auto centers = choose_probes(pts.size(), 50, 9);
  const auto radii = log_spaced_radii(0.5, 0.05, 6);
  auto d = [](const TorusPoint& a, const TorusPoint& b) { return torus_distance(a, b, TorusLattice{}); };
  CHECK(kernels::ball_counts_serial(pts, centers, radii, d) == kernels::ball_counts_parallel(pts, centers, radii, d));
}

TEST_CASE("local dimension input validation") {
  CHECK_THROWS_AS(validate_dimension_inputs(500, log_spaced_radii(0.5, 0.05, 10), 10), Error);
  CHECK_THROWS_AS(validate_dimension_inputs(5000, log_spaced_radii(0.5, 0.1, 10), 10), Error);
  CHECK_THROWS_AS(validate_dimension_inputs(5000, {0.05, 0.5}, 10), Error);
  CHECK_NOTHROW(validate_dimension_inputs(5000, log_spaced_radii(0.5, 0.05, 10), 10));
}

TEST_CASE("local dimension of Haar measure and of a subtorus") {
  const auto pts = kernels::haar_samples_parallel(1, 100000);
  const auto radii = log_spaced_radii(0.5, 0.05, 10);
  auto d = [](const TorusPoint& a, const TorusPoint& b) { return torus_distance(a, b, TorusLattice{}); };
  const DimensionEstimate e = local_dimension_estimate(pts, d, radii, 200, 1, true);
  CHECK(std::fabs(e.dimension - 4) <= 0.2);
  std::vector<TorusPoint> flat = pts;
  for (auto& p : flat) p[2] = p[3] = 0;
  const DimensionEstimate e2 = local_dimension_estimate(flat, d, radii, 200, 1, true);
  CHECK(std::fabs(e2.dimension - 2) <= 0.1);
}

TEST_CASE("torus rigidity control is Kummer consistent") {
  TorusRigidityOptions o;
  const RigidityReport r = torus_rigidity_report(cat_map, o);
  CHECK(r.verdict == Verdict::KummerConsistent);
  CHECK(r.gap_u.value == 0.0);
  CHECK(r.gap_s.value == 0.0);
  REQUIRE(r.cross_check);
  CHECK(std::fabs(r.cross_check->lambda_u - r.half_log_lambda_f) <= 1e-5);
}

}

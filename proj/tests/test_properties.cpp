#include "doctest.h"

#include "kummerlab/blanc.hpp"
#include "kummerlab/dual.hpp"
#include "kummerlab/error.hpp"
#include "kummerlab/io.hpp"
#include "kummerlab/periodic.hpp"
#include "kummerlab/rng.hpp"
#include "kummerlab/spectral.hpp"

#include <cmath>
#include <set>

using namespace kummerlab;

namespace {

// Hyperbolic SL2(Z) elements as words in the two elementary matrices.
IntMatrix random_hyperbolic(Stream& s) {
  for (;;) {
    IntMatrix m = IntMatrix::identity(2);
    const int len = 1 + static_cast<int>(s.below(4));
    for (int i = 0; i < len; ++i) {
      const long long a = static_cast<long long>(s.below(5)) - 2;
      m = m * (i % 2 ? IntMatrix{{1, a}, {0, 1}} : IntMatrix{{1, 0}, {a, 1}});
    }
    if (s.below(2)) m = m * IntMatrix{{-1, 0}, {0, -1}};
    const BigInt tr = m.trace();
    if (boost::multiprecision::abs(tr) > 2 && boost::multiprecision::abs(tr) < 12) return m;
  }
}

IntMatrix random_unimodular3(Stream& s) {
  IntMatrix m = IntMatrix::identity(3);
  for (int k = 0; k < 6; ++k) {
    IntMatrix e = IntMatrix::identity(3);
    const std::size_t i = s.below(3), j = (i + 1 + s.below(2)) % 3;
    e(i, j) = static_cast<long long>(s.below(5)) - 2;
    m = m * e;
  }
  return m;
}

double rho(const IntMatrix& m) {
  const double tr = m.trace().convert_to<double>();
  return (std::fabs(tr) + std::sqrt(tr * tr - 4)) / 2;
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("streams are reproducible and uniform lies in [0,1)") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    Stream a(123, i), b(123, i);
    for (int k = 0; k < 20; ++k) {
      const double u = a.uniform();
      CHECK(u == b.uniform());
      CHECK(u >= 0.0);
      CHECK(u < 1.0);
    }
  }
  CHECK(Stream(1, 0).next() != Stream(1, 1).next());
  CHECK(Stream(1, 0).next() != Stream(2, 0).next());
}

TEST_CASE("unimodular matrices: determinant, inverse, reciprocal characteristic polynomial") {
  Stream s(1, 0);
  for (int t = 0; t < 60; ++t) {
    const IntMatrix m = random_unimodular3(s);
    CHECK(m.determinant() == 1);
    const IntMatrix inv = m.unimodular_inverse();
    CHECK(m * inv == IntMatrix::identity(3));
    // det(tI - M^-1) = -t^3 det(t^-1 I - M) / det M: reversed coefficients, sign flipped
    const auto p = char_poly(m).coeffs(), q = char_poly(inv).coeffs();
    REQUIRE(p.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(q[i] == -p[3 - i]);
  }
}

TEST_CASE("torus invariants on random hyperbolic matrices") {
  Stream s(2, 0);
  for (int t = 0; t < 40; ++t) {
    const IntMatrix m = random_hyperbolic(s);
    const TorusAutomorphism f(m);
    const double r = rho(m);
    CHECK(std::fabs(h2_degree(f).lambda_f - r * r) <= 1e-12 * r * r);
    const LyapunovReport l = lyapunov_exact(f);
    CHECK(l.lambda_u == doctest::Approx(std::log(r)).epsilon(1e-13));
    CHECK(l.lambda_s == -l.lambda_u);
    const SpectralReport sr = dynamical_degree(m);
    CHECK(sr.classification == Classification::ReciprocalQuadratic);
    for (unsigned n = 1; n <= 3; ++n) {
      const BigInt count = fix_count(f, n);
      const long long d = (m.pow(n) - IntMatrix::identity(2)).determinant().convert_to<long long>();
      CHECK(count == BigInt(d) * d);
      if (count > 3000) continue;
      const PeriodicEnsemble e = fix_enumerate(f, n);
      CHECK(BigInt(e.points.size()) == count);
      std::set<RationalTorusPoint> set(e.points.begin(), e.points.end());
      for (std::size_t i = 0; i < e.points.size(); i += 7) {
        CHECK(set.count(-e.points[i]) == 1);
        CHECK(set.count((e.points[i] + e.points[e.points.size() - 1 - i]).reduced()) == 1);
        RationalTorusPoint q = e.points[i];
        for (unsigned k = 0; k < n; ++k) q = kummerlab::apply(f, q);
        CHECK(q == e.points[i]);
      }
      const WeylReport w = equidistribution_test(e, 2);
      CHECK(w.max_deviation <= 1e-10);
    }
  }
}

TEST_CASE("quadratic times cyclotomic keeps classification") {
  Stream s(3, 0);
  for (int t = 0; t < 30; ++t) {
    const long long a = 3 + static_cast<long long>(s.below(40));
    const unsigned n = 1 + static_cast<unsigned>(s.below(12));
    const IntPolynomial q{1, -a, 1};
    const SpectralReport r = polynomial_report(q * cyclotomic(n));
    CHECK(r.classification == Classification::ReciprocalQuadratic);
    CHECK(r.min_poly == q);
    CHECK(r.lambda_f == doctest::Approx((a + std::sqrt(double(a * a - 4))) / 2).epsilon(1e-13));
  }
}

TEST_CASE("even binary forms: isometries and witnesses") {
  Stream s(4, 0);
  int checked = 0;
  while (checked < 25) {
    const long long a = static_cast<long long>(s.below(7)) - 3, c = static_cast<long long>(s.below(7)) - 3,
                    b = static_cast<long long>(s.below(13)) - 6;
    const long long disc = b * b - 4 * a * c;
    if (disc <= 0) continue;
    const long long r = static_cast<long long>(std::llround(std::sqrt(double(disc))));
    if (r * r == disc) continue;
    const QuadraticLattice lat(IntMatrix{{2 * a, b}, {b, 2 * c}});
    const Rank2Analysis an = rank2_analysis(lat);
    CHECK_FALSE(an.represents_zero);
    CHECK(an.aut_infinite == !an.represents_minus_two);
    CHECK(an.fundamental_isometry.has_value() == an.aut_infinite);
    const FundamentalIsometry fi = fundamental_isometry(lat);
    CHECK(isometry_check(fi.matrix, lat));
    CHECK(fi.matrix.determinant() == 1);
    CHECK(fi.matrix.trace() > 2);
    if (an.minus_two_witness) {
      const auto [x, y] = *an.minus_two_witness;
      CHECK(a * x * x + b * x * y + c * y * y == -1);
    }
    ++checked;
  }
}

TEST_CASE("dual numbers match central differences") {
  Stream s(5, 0);
  using D = Dual<Cx, 2>;
  for (int t = 0; t < 50; ++t) {
    std::array<Cx, 4> c;
    for (auto& v : c) v = s.cnormal();
    const Cx z0 = s.cnormal(), w0 = s.cnormal();
    auto f = [&](auto z, auto w) { return c[0] * z * z * w + c[1] * w * w + c[2] * z + c[3]; };
    const D r = f(D::variable(z0, 0), D::variable(w0, 1));
    const double h = 1e-6;
    const Cx dz = (f(z0 + h, w0) - f(z0 - h, w0)) / (2 * h);
    const Cx dw = (f(z0, w0 + h) - f(z0, w0 - h)) / (2 * h);
    CHECK(std::abs(r.d[0] - dz) <= 1e-7 * (1 + std::abs(dz)));
    CHECK(std::abs(r.d[1] - dw) <= 1e-7 * (1 + std::abs(dw)));
  }
}

TEST_CASE("sigma_q on random cubics") {
  for (std::uint64_t seed = 20; seed < 30; ++seed) {
    const PlaneCubic c = random_cubic(seed);
    const P2Point q = random_cubic_point(c, seed, 0);
    for (int i = 0; i < 100; ++i) {
      const P2Point p = random_plane_point(seed, i);
      const P2Point sp = sigma_q(c, q, p);
      CHECK(chordal(sigma_q(c, q, sp), p) <= 1e-10);
      // the cubic value changes but stays off the curve for generic p
      CHECK(c.residual(sp) > 0);
    }
  }
}

TEST_CASE("serialization round trips") {
  Stream s(6, 0);
  for (int t = 0; t < 20; ++t) {
    const IntMatrix m = random_unimodular3(s);
    CHECK(io::parse_matrix(io::matrix_json(m)) == m);
  }
  const WehlerSurface w = random_surface(6);
  const WehlerSurface w2 = io::parse_surface(io::surface_json(w));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(w2.c(i, j, k) == w.c(i, j, k));
  const PlaneCubic c = random_cubic(6);
  CHECK(io::parse_cubic(io::cubic_json(c)).coefficients() == c.coefficients());
  const PeriodicEnsemble e = fix_enumerate(TorusAutomorphism(IntMatrix{{2, 1}, {1, 1}}), 3);
  const PeriodicEnsemble e2 = io::parse_ensemble_csv(io::ensemble_csv(e));
  CHECK(e2.points == e.points);
  CHECK(e2.period == e.period);
}

TEST_CASE("FNV-1a reference values") {
  CHECK(io::fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(io::fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(io::fnv1a64("foobar") == 0x85944171f73967e8ull);
}

}

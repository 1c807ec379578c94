#include "doctest.h"

#include "kummerlab/blanc.hpp"
#include "kummerlab/error.hpp"

#include <cmath>

using namespace kummerlab;

namespace {

Cx det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

double norm3(const Vec3& a) { return std::sqrt(std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2])); }

}  // namespace

TEST_SUITE("blanc") {

TEST_CASE("cubic evaluation and gradient") {
  PlaneCubic::Coeffs c{};
  c[0] = 1;   // X0^3
  c[4] = -3;  // X0 X1 X2
  c[9] = 2;   // X2^3
  const PlaneCubic p(c);  // rescaled by 1/3
  const Vec3 x{Cx(1, 1), Cx(0.5), Cx(-2, 0.25)};
  const Cx val = (std::pow(x[0], 3) - 3.0 * x[0] * x[1] * x[2] + 2.0 * std::pow(x[2], 3)) / 3.0;
  CHECK(std::abs(p(x) - val) < 1e-14);
  // Euler: x . grad P = 3 P
  const Vec3 g = p.gradient(x);
  CHECK(std::abs(x[0] * g[0] + x[1] * g[1] + x[2] * g[2] - 3.0 * p(x)) < 1e-13);
}

TEST_CASE("random cubic points are on the cubic") {
  const PlaneCubic c = random_cubic(1);
  for (int i = 0; i < 100; ++i) CHECK(c.residual(random_cubic_point(c, 1, i)) <= kOnCubicTol);
}

TEST_CASE("sigma_q is an involution") {
  for (std::uint64_t seed : {1, 2, 3}) {
    const PlaneCubic c = random_cubic(seed);
    const P2Point q = random_cubic_point(c, seed, 0);
    for (int i = 0; i < 1000; ++i) {
      const P2Point p = random_plane_point(seed, i);
      CHECK(chordal(sigma_q(c, q, sigma_q(c, q, p)), p) <= 1e-10);
    }
  }
}

TEST_CASE("the cubic is fixed point-wise") {
  const PlaneCubic c = random_cubic(4);
  const BlancMap b(c, {random_cubic_point(c, 4, 0), random_cubic_point(c, 4, 1), random_cubic_point(c, 4, 2)});
  for (int i = 0; i < 100; ++i) {
    const P2Point p = random_cubic_point(c, 44, i);
    CHECK(chordal(sigma_q(c, b.base_points()[0], p), p) <= 1e-10);
    CHECK(chordal(blanc_compose(b, p), p) <= 1e-9);
  }
}

TEST_CASE("the pencil through q is preserved") {
  const PlaneCubic c = random_cubic(5);
  const P2Point q = random_cubic_point(c, 5, 0);
  for (int i = 0; i < 200; ++i) {
    const P2Point p = random_plane_point(5, i);
    const P2Point s = sigma_q(c, q, p);
    CHECK(std::abs(det3(q.x, p.x, s.x)) / (norm3(q.x) * norm3(p.x) * norm3(s.x)) <= 1e-10);
  }
}

TEST_CASE("restriction to a line factors through its roots") {
  const PlaneCubic c = random_cubic(6);
  const P2Point q = random_cubic_point(c, 6, 0);
  for (int i = 0; i < 50; ++i) {
    const LineRestriction r = restrict_to_line(c, q, random_plane_point(6, i));
    for (double t : {-1.3, 0.4, 2.1}) {
      Vec3 x;
      for (int k = 0; k < 3; ++k) x[k] = r.q[k] + t * r.d[k];
      const Cx direct = c(x);
      const Cx factored = r.cubic[0] + r.cubic[3] * t * (t - r.roots[0]) * (t - r.roots[1]);
      CHECK(std::abs(direct - factored) <= 1e-10 * (1 + std::abs(direct)));
    }
  }
}

TEST_CASE("midpoint of the two roots goes to the point at infinity of the line") {
  const PlaneCubic c = random_cubic(7);
  const P2Point q = random_cubic_point(c, 7, 0);
  const LineRestriction r = restrict_to_line(c, q, random_plane_point(7, 3));
  const Cx m = (r.roots[0] + r.roots[1]) / 2.0;
  Vec3 x;
  for (int k = 0; k < 3; ++k) x[k] = r.q[k] + m * r.d[k];
  const P2Point p(x);
  const P2Point s = sigma_q(c, q, p);
  CHECK(chordal(s, P2Point(r.d)) <= 1e-9);
  CHECK(chordal(sigma_q(c, q, s), p) <= 1e-10);
}

TEST_CASE("indeterminacy") {
  const PlaneCubic c = random_cubic(8);
  const P2Point q = random_cubic_point(c, 8, 0);
  CHECK_THROWS_AS(sigma_q(c, q, q), Error);
  try {
    sigma_q(c, q, q);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Indeterminate);
  }
}

TEST_CASE("base point validation") {
  const PlaneCubic c = random_cubic(9);
  const P2Point q = random_cubic_point(c, 9, 0);
  CHECK_THROWS_AS(BlancMap(c, {}), Error);
  CHECK_THROWS_AS(BlancMap(c, {q, q}), Error);
  CHECK_THROWS_AS(BlancMap(c, {random_plane_point(9, 0)}), Error);
}

TEST_CASE("errors carry the stage of the failing involution") {
  const PlaneCubic c = random_cubic(10);
  const P2Point q1 = random_cubic_point(c, 10, 0), q2 = random_cubic_point(c, 10, 1);
  const BlancMap b(c, {q1, q2});
  try {
    blanc_compose(b, q2);  // sigma_{q2} acts first and is undefined at q2
    FAIL("expected INDETERMINATE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Indeterminate);
    CHECK(e.stage() == 2);
  }
}

TEST_CASE("composition and inverse") {
  const PlaneCubic c = random_cubic(11);
  const BlancMap b(c, {random_cubic_point(c, 11, 0), random_cubic_point(c, 11, 1), random_cubic_point(c, 11, 2)});
  for (int i = 0; i < 300; ++i) {
    const P2Point p = random_plane_point(11, i);
    CHECK(chordal(blanc_inverse(b, blanc_compose(b, p)), p) <= 1e-9);
  }
}

TEST_CASE("invariant two-form") {
  const PlaneCubic c = random_cubic(12);
  const BlancMap b1(c, {random_cubic_point(c, 12, 0)});
  const BlancMap b3(c, {random_cubic_point(c, 12, 0), random_cubic_point(c, 12, 1), random_cubic_point(c, 12, 2)});
  double d1 = 0, d3 = 0;
  for (int i = 0; i < 100; ++i) {
    const P2Point p = random_plane_point(120, i);
    d1 = std::max(d1, two_form_check(b1, p));
    d3 = std::max(d3, two_form_check(b3, p));
  }
  CHECK(d1 <= 1e-6);
  CHECK(d3 <= 1e-5);
  CHECK_THROWS_AS(two_form_check(b1, random_cubic_point(c, 12, 5)), Error);
}

TEST_CASE("two involutions generate no short relation") {
  const PlaneCubic c = random_cubic(13);
  const BlancMap b(c, {random_cubic_point(c, 13, 0), random_cubic_point(c, 13, 1)});
  for (int i = 0; i < 20; ++i) {
    const P2Point p = random_plane_point(13, i);
    P2Point x = p;
    for (int k = 1; k <= 6; ++k) {
      x = blanc_compose(b, x);
      CHECK(chordal(x, p) > 1e-6);
    }
  }
}

}

#include "doctest.h"

#include "kummerlab/dual.hpp"
#include "kummerlab/error.hpp"
#include "kummerlab/rigidity.hpp"
#include "kummerlab/wehler.hpp"
#include "kummerlab/wehler_newton.hpp"

#include <cmath>

using namespace kummerlab;

TEST_SUITE("wehler") {

TEST_CASE("dual numbers differentiate polynomials") {
  using D = Dual<Cx, 2>;
  const D z = D::variable(Cx(0.3, -0.7), 0), w = D::variable(Cx(1.1, 0.2), 1);
  const D f = z * z * w + Cx(3.0) * w - z;
  CHECK(std::abs(f.d[0] - (2.0 * z.v * w.v - 1.0)) < 1e-15);
  CHECK(std::abs(f.d[1] - (z.v * z.v + 3.0)) < 1e-15);
}

TEST_CASE("P1 points are max-normalized") {
  const P1Point a(Cx(2, 0), Cx(0, 4));
  CHECK(a.v == Cx(1));
  CHECK(std::abs(a.u - Cx(0, -0.5)) < 1e-16);
  CHECK_THROWS_AS(P1Point(0.0, 0.0), Error);
  CHECK(chordal(P1Point(1.0, 2.0), P1Point(3.0, 6.0)) < 1e-16);
}

TEST_CASE("random points lie on the surface") {
  for (std::uint64_t seed : {1, 2, 3}) {
    const WehlerSurface s = random_surface(seed);
    for (int i = 0; i < 100; ++i) CHECK(random_surface_point(s, seed, i).residual <= 1e-10);
  }
}

TEST_CASE("each involution is an involution and keeps two coordinates") {
  const WehlerSurface s = random_surface(4);
  for (int i = 0; i < 200; ++i) {
    const SurfacePoint p = random_surface_point(s, 4, i);
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
      const SurfacePoint q = sigma(s, a, p);
      CHECK(q.residual <= 1e-10);
      for (int k = 0; k < 3; ++k)
        if (k != static_cast<int>(a)) CHECK(chordal(q.p[k], p.p[k]) <= 1e-15);
      CHECK(point_distance(sigma(s, a, q), p) <= 1e-10);
    }
    CHECK(point_distance(wehler_map_inverse(s, wehler_map(s, p)), p) <= 1e-10);
  }
}

TEST_CASE("real surfaces stay real") {
  const WehlerSurface s = random_surface(5, true);
  CHECK(s.real_coefficients());
}

TEST_CASE("off-surface input is rejected") {
  const WehlerSurface s = random_surface(6);
  SurfacePoint p = random_surface_point(s, 6, 0);
  p.p[0] = P1Point(p.p[0].u + 0.01, p.p[0].v);
  p = make_point(s, p.p);
  CHECK_THROWS_AS(sigma(s, Axis::X, p), Error);
}

TEST_CASE("tangent map agrees with central differences") {
  const WehlerSurface s = random_surface(7);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const SurfacePoint p = random_surface_point(s, 7, i);
    const Chart c0 = choose_chart(s, p);
    const SurfacePoint fp = wehler_map(s, p);
    const Chart c1 = choose_chart(s, fp);
    const auto w = chart_coords(p, c0);
    const ChartMap m = chart_map(s, p, c0, w, forward_chain(), c1);
    const double h = 1e-6;
    double scale = 0, err = 0;
    for (int j = 0; j < 2; ++j) {
      auto wp = w, wm = w;
      wp[j] += h;
      wm[j] -= h;
      const auto vp = chart_map(s, p, c0, wp, forward_chain(), c1).value;
      const auto vm = chart_map(s, p, c0, wm, forward_chain(), c1).value;
      for (int k = 0; k < 2; ++k) {
        const Cx fd = (vp[k] - vm[k]) / (2 * h);
        err = std::max(err, std::abs(fd - m.jacobian[k][j]));
        scale = std::max(scale, std::abs(m.jacobian[k][j]));
      }
    }
    worst = std::max(worst, err / scale);
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("long orbits stay on the surface") {
  const WehlerSurface s = random_surface(8);
  SurfacePoint p = random_surface_point(s, 8, 0);
  for (int i = 0; i < 2000; ++i) p = wehler_map(s, p);
  CHECK(p.residual <= 1e-10);
}

TEST_CASE("forward and inverse chains") {
  CHECK(forward_chain(2) == std::vector<Axis>{Axis::Z, Axis::Y, Axis::X, Axis::Z, Axis::Y, Axis::X});
  CHECK(inverse_chain(1) == std::vector<Axis>{Axis::X, Axis::Y, Axis::Z});
}

TEST_CASE("period-2 census: replay, determinant and determinism") {
  const WehlerSurface s = random_surface(7);
  NewtonOptions opt;
  const auto a = newton_periodic(s, 2, 200, 11, opt);
  REQUIRE(a.size() >= 20);
  CHECK(a.size() <= 344);
  for (const auto& o : a) {
    CHECK(o.period == 2);
    CHECK(point_distance(wehler_iterate(s, o.point, 2), o.point) <= 1e-9);
    // the map reverses the holomorphic 2-form, so |m1 m2| = 1
    CHECK(std::fabs(std::abs(o.multipliers[0] * o.multipliers[1]) - 1) <= 1e-6);
    CHECK(std::abs(o.multipliers[0]) >= std::abs(o.multipliers[1]));
  }
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(point_distance(a[i].point, a[i - 1].point) > opt.tol.dedup);
  opt.parallel = false;
  const auto b = newton_periodic(s, 2, 200, 11, opt);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].multipliers == b[i].multipliers);
    for (int k = 0; k < 3; ++k) CHECK(a[i].point.p[k].u == b[i].point.p[k].u);
  }
}

TEST_CASE("no fixed points of the map itself") {
  // the Lefschetz number of f is 0 and generic surfaces have none
  const WehlerSurface s = random_surface(7);
  CHECK(newton_periodic(s, 1, 200, 3).empty());
}

TEST_CASE("estimator needs enough saddles") {
  CHECK_THROWS_AS(lyapunov_from_saddles({}), Error);
}

TEST_CASE("orbit density image header") {
  const WehlerSurface s = random_surface(9);
  const std::string pgm = orbit_density_pgm(s, random_surface_point(s, 9, 0), 2000, Axis::X, Axis::Y);
  CHECK(pgm.rfind("P5 512 512 255\n", 0) == 0);
  CHECK(pgm.size() == std::string("P5 512 512 255\n").size() + 512 * 512);
}

TEST_CASE("singularity probe on a generic surface finds nothing") {
  CHECK(singularity_probe(random_surface(10), 50, 1).empty());
}

TEST_CASE("automatic radii span a decade") {
  const WehlerSurface s = random_surface(7);
  std::vector<SurfacePoint> cloud;
  for (int i = 0; i < 1500; ++i) cloud.push_back(random_surface_point(s, 7, i));
  const auto radii = automatic_radii(cloud, product_chordal_distance, choose_probes(cloud.size(), 50, 1), 10);
  REQUIRE(radii.size() == 10);
  CHECK(radii.front() >= 10 * radii.back() * (1 - 1e-12));
}

}

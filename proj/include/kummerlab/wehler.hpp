#pragma once

#include "kummerlab/torus.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace kummerlab {

using Cx = std::complex<double>;
using Mat2 = std::array<std::array<Cx, 2>, 2>;

/// (u : v) on P^1, scaled so the larger component is exactly 1.
struct P1Point {
  Cx u{0.0};
  Cx v{1.0};

  P1Point() = default;
  P1Point(Cx u_, Cx v_);
  static P1Point affine(Cx w) { return P1Point(w, 1.0); }
  static P1Point infinity() { return P1Point(1.0, 0.0); }
};

/// |u1 v2 - u2 v1| on normalized points (equality test metric).
double chordal(const P1Point& a, const P1Point& b);
/// |u1 v2 - u2 v1| / (|a| |b|), the chordal metric of the sphere.
double sphere_distance(const P1Point& a, const P1Point& b);

enum class Axis { X = 0, Y = 1, Z = 2 };
const char* to_string(Axis a);

struct WehlerTolerances {
  double membership = 1e-10;
  double newton_accept = 1e-11;
  double dedup = 1e-7;
  double replay = 1e-9;
  /// Input residual above which sigma reports OffSurface (drift slack).
  double off_surface = 1e-8;
  double degenerate_fiber = 1e-14;
  double chart = 1e-10;
};

/// F = sum c[i][j][k] u_x^i v_x^(2-i) u_y^j v_y^(2-j) u_z^k v_z^(2-k).
class WehlerSurface {
 public:
  using Coeffs = std::array<std::array<std::array<Cx, 3>, 3>, 3>;

  WehlerSurface() = default;
  /// Normalizes to max |c| = 1; InvalidInput for the zero form.
  explicit WehlerSurface(const Coeffs& c);

  const Coeffs& coeffs() const noexcept { return c_; }
  const Cx& c(int i, int j, int k) const { return c_[i][j][k]; }
  bool real_coefficients() const;

 private:
  Coeffs c_{};
};

WehlerSurface random_surface(std::uint64_t seed, bool real_coeffs = false);

struct SurfacePoint {
  std::array<P1Point, 3> p;
  double residual = 0;

  const P1Point& x() const { return p[0]; }
  const P1Point& y() const { return p[1]; }
  const P1Point& z() const { return p[2]; }
};

double residual(const WehlerSurface& s, const std::array<P1Point, 3>& p);
SurfacePoint make_point(const WehlerSurface& s, const std::array<P1Point, 3>& p);
/// Largest coordinate-wise chordal distance.
double point_distance(const SurfacePoint& a, const SurfacePoint& b);
/// sqrt of the sum of squared sphere distances (product chordal metric).
double product_chordal_distance(const SurfacePoint& a, const SurfacePoint& b);

/// Coefficients (A, B, C) of A u^2 + B u v + C v^2 in the coordinate `axis`,
/// the other two coordinates taken from p.
std::array<Cx, 3> fiber_quadratic(const WehlerSurface& s, Axis axis, const std::array<P1Point, 3>& p);

/// Roots of the fiber quadratic over (p, q) = the other two coordinates in
/// increasing axis order. DegenerateFiber if A = B = C = 0.
std::vector<P1Point> solve_fiber(const WehlerSurface& s, Axis axis, const P1Point& p, const P1Point& q,
                                 const WehlerTolerances& tol = {});

/// Uniformly drawn (x, y), then one of the two z roots.
SurfacePoint random_surface_point(const WehlerSurface& s, std::uint64_t seed, std::uint64_t index,
                                  const WehlerTolerances& tol = {});

SurfacePoint sigma(const WehlerSurface& s, Axis axis, const SurfacePoint& p, const WehlerTolerances& tol = {});

/// sigma_1 o sigma_2 o sigma_3 (sigma_3 first). A failing involution is
/// reported with stage 1, 2 or 3 = its index.
SurfacePoint wehler_map(const WehlerSurface& s, const SurfacePoint& p, const WehlerTolerances& tol = {});
SurfacePoint wehler_map_inverse(const WehlerSurface& s, const SurfacePoint& p, const WehlerTolerances& tol = {});
SurfacePoint wehler_iterate(const WehlerSurface& s, const SurfacePoint& p, int n, const WehlerTolerances& tol = {});

/// Involution sequence applied left to right.
std::vector<Axis> forward_chain(int n = 1);
std::vector<Axis> inverse_chain(int n = 1);

/// Affine chart at a point: per axis w = u/v (or v/u when |u| > |v|); the
/// dependent axis has the largest |dF/dw| and is solved implicitly.
struct Chart {
  std::array<bool, 3> inverted{};
  int dependent = 2;
  std::array<int, 2> free{0, 1};
  friend bool operator==(const Chart&, const Chart&) = default;
};

/// ChartFailure if every |dF/dw| is below tol.chart.
Chart choose_chart(const WehlerSurface& s, const SurfacePoint& p, const WehlerTolerances& tol = {});
std::array<Cx, 2> chart_coords(const SurfacePoint& p, const Chart& c);
/// Affine partial derivatives dF/dw_a at p in the patches of c.
std::array<Cx, 3> chart_gradient(const WehlerSurface& s, const SurfacePoint& p, const Chart& c);

struct ChartMap {
  std::array<Cx, 2> value;
  Mat2 jacobian;
  SurfacePoint image;
};

/// The composition of `chain` read from chart `in` (at free coordinates w,
/// dependent coordinate the fiber root closest to `base`) to chart `out`,
/// with its complex Jacobian by forward-mode differentiation.
ChartMap chart_map(const WehlerSurface& s, const SurfacePoint& base, const Chart& in, const std::array<Cx, 2>& w,
                   const std::vector<Axis>& chain, const Chart& out, const WehlerTolerances& tol = {});

/// Derivative of f from the chart at p to the chart at f(p).
Mat2 tangent_map(const WehlerSurface& s, const SurfacePoint& p, const WehlerTolerances& tol = {});

/// Eigenvalues sorted by decreasing modulus.
std::array<Cx, 2> eigenvalues(const Mat2& m);
Mat2 operator*(const Mat2& a, const Mat2& b);

struct Suspect {
  SurfacePoint point;
  double gradient = 0;
};

/// Advisory search for singular points: fiber samples refined by Newton on
/// the affine gradient, flagged when F and the gradient are below 1e-8.
std::vector<Suspect> singularity_probe(const WehlerSurface& s, int trials, std::uint64_t seed);

/// Binary PGM (P5) of log-scaled visit counts of a forward orbit, projected
/// to the polar angles of the two chosen coordinates on the Riemann sphere.
std::string orbit_density_pgm(const WehlerSurface& s, const SurfacePoint& p0, long long iterations, Axis first,
                              Axis second, int size = 512, const WehlerTolerances& tol = {});

}  // namespace kummerlab

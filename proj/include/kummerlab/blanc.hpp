#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace kummerlab {

using Cx = std::complex<double>;
using Vec3 = std::array<Cx, 3>;

/// Homogeneous point of P^2, scaled so the largest coordinate is exactly 1.
struct P2Point {
  Vec3 x{Cx(0), Cx(0), Cx(1)};
  P2Point() = default;
  explicit P2Point(const Vec3& v);
};

double chordal(const P2Point& a, const P2Point& b);

/// Cubic with coefficients in graded-lex order:
/// X0^3, X0^2X1, X0^2X2, X0X1^2, X0X1X2, X0X2^2, X1^3, X1^2X2, X1X2^2, X2^3.
/// Coefficients are rescaled so the largest has modulus 1.
class PlaneCubic {
 public:
  using Coeffs = std::array<Cx, 10>;
  explicit PlaneCubic(const Coeffs& c);

  const Coeffs& coefficients() const { return c_; }
  Cx operator()(const Vec3& x) const;
  Vec3 gradient(const Vec3& x) const;
  /// |P(p)| on the normalized representative.
  double residual(const P2Point& p) const { return std::abs((*this)(p.x)); }

 private:
  Coeffs c_;
};

PlaneCubic random_cubic(std::uint64_t seed);

inline constexpr double kOnCubicTol = 1e-10;
inline constexpr double kTangencyTol = 1e-12;
inline constexpr double kDistinctBaseTol = 1e-8;

/// Random point of the cubic: intersect a random line with it.
P2Point random_cubic_point(const PlaneCubic& c, std::uint64_t seed, std::uint64_t index);
/// Random point of P^2 (Gaussian homogeneous coordinates).
P2Point random_plane_point(std::uint64_t seed, std::uint64_t index);

/// Restriction of the cubic to t -> q + t d, d = p - q in q's best chart.
/// `roots` holds t_a, t_b (the further intersections), `coeffs` the
/// deflated quadratic c1 + c2 t + c3 t^2.
struct LineRestriction {
  Vec3 q, d;
  std::array<Cx, 4> cubic;
  std::array<Cx, 2> roots;
  double discriminant = 0;
};
LineRestriction restrict_to_line(const PlaneCubic& c, const P2Point& q, const P2Point& p);

/// The involution of the line (qp) fixing the two further points of C on
/// it. Throws INDETERMINATE when p = q or the line is tangent.
P2Point sigma_q(const PlaneCubic& c, const P2Point& q, const P2Point& p);

class BlancMap {
 public:
  BlancMap(PlaneCubic cubic, std::vector<P2Point> base_points);
  const PlaneCubic& cubic() const { return cubic_; }
  const std::vector<P2Point>& base_points() const { return q_; }
  std::size_t length() const { return q_.size(); }

 private:
  PlaneCubic cubic_;
  std::vector<P2Point> q_;
};

/// sigma_{q1} o ... o sigma_{ql}: the last base point acts first. Errors
/// carry the 1-based index of the failing involution.
P2Point blanc_compose(const BlancMap& b, const P2Point& p);
P2Point blanc_inverse(const BlancMap& b, const P2Point& p);

/// | |Jac f(p)| |P(p)| / |P(f(p))| - 1 | in the chart X2 = 1, by central
/// differences with step 1e-6.
double two_form_check(const BlancMap& b, const P2Point& p);

}  // namespace kummerlab

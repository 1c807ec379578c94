#include "kummerlab/blanc.hpp"

#include "kummerlab/error.hpp"
#include "kummerlab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kummerlab {

namespace {

double max_abs(const Vec3& v) { return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])}); }

int argmax(const Vec3& v) {
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(v[i]) > std::abs(v[k])) k = i;
  return k;
}

Cx dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// exponents of the graded-lex monomials
constexpr int kExp[10][3] = {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
                             {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};

Cx ipow(Cx x, int e) {
  Cx r(1);
  while (e-- > 0) r *= x;
  return r;
}

// roots of a0 + a1 t + a2 t^2 + a3 t^3 by Durand-Kerner, then Newton
std::array<Cx, 3> cubic_roots(const std::array<Cx, 4>& a) {
  const Cx b0 = a[0] / a[3], b1 = a[1] / a[3], b2 = a[2] / a[3];
  auto g = [&](Cx t) { return ((t + b2) * t + b1) * t + b0; };
  std::array<Cx, 3> z{Cx(0.4, 0.9), Cx(0.4, 0.9) * Cx(0.4, 0.9), Cx(0.4, 0.9) * Cx(0.4, 0.9) * Cx(0.4, 0.9)};
  const double scale = 1 + std::max({std::abs(b0), std::abs(b1), std::abs(b2)});
  for (auto& v : z) v *= scale;
  for (int it = 0; it < 500; ++it) {
    double move = 0;
    for (int i = 0; i < 3; ++i) {
      Cx den(1);
      for (int j = 0; j < 3; ++j)
        if (j != i) den *= z[i] - z[j];
      if (den == Cx(0)) den = Cx(1e-300);
      const Cx step = g(z[i]) / den;
      z[i] -= step;
      move = std::max(move, std::abs(step) / (1 + std::abs(z[i])));
    }
    if (move < 1e-17) break;
  }
  return z;
}

}  // namespace

P2Point::P2Point(const Vec3& v) {
  const int k = argmax(v);
  if (!(std::abs(v[k]) > 0) || !std::isfinite(std::abs(v[k])))
    throw Error(ErrorCode::InvalidInput, "zero or non-finite homogeneous triple");
  const Cx s = v[k];
  for (int i = 0; i < 3; ++i) x[i] = i == k ? Cx(1) : v[i] / s;
}

double chordal(const P2Point& a, const P2Point& b) {
  // |a x b| / (|a||b|)
  const Vec3& u = a.x;
  const Vec3& v = b.x;
  const Cx c0 = u[1] * v[2] - u[2] * v[1], c1 = u[2] * v[0] - u[0] * v[2], c2 = u[0] * v[1] - u[1] * v[0];
  const double n = std::sqrt(std::norm(c0) + std::norm(c1) + std::norm(c2));
  const double nu = std::sqrt(std::norm(u[0]) + std::norm(u[1]) + std::norm(u[2]));
  const double nv = std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
  return n / (nu * nv);
}

PlaneCubic::PlaneCubic(const Coeffs& c) : c_(c) {
  double m = 0;
  for (const Cx& v : c) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw Error(ErrorCode::InvalidInput, "non-finite cubic coefficient");
    m = std::max(m, std::abs(v));
  }
  if (!(m > 0)) throw Error(ErrorCode::InvalidInput, "zero cubic");
  if (std::fabs(m - 1.0) <= 8 * std::numeric_limits<double>::epsilon()) return;
  for (Cx& v : c_) v /= m;
}

Cx PlaneCubic::operator()(const Vec3& x) const {
  Cx s(0);
  for (int i = 0; i < 10; ++i) s += c_[i] * ipow(x[0], kExp[i][0]) * ipow(x[1], kExp[i][1]) * ipow(x[2], kExp[i][2]);
  return s;
}

Vec3 PlaneCubic::gradient(const Vec3& x) const {
  Vec3 g{};
  for (int i = 0; i < 10; ++i)
    for (int v = 0; v < 3; ++v) {
      const int e = kExp[i][v];
      if (!e) continue;
      Cx m = c_[i] * static_cast<double>(e);
      for (int w = 0; w < 3; ++w) m *= ipow(x[w], kExp[i][w] - (w == v));
      g[v] += m;
    }
  return g;
}

PlaneCubic random_cubic(std::uint64_t seed) {
  Stream s(seed, 0);
  PlaneCubic::Coeffs c;
  for (Cx& v : c) v = s.cnormal();
  return PlaneCubic(c);
}

P2Point random_plane_point(std::uint64_t seed, std::uint64_t index) {
  Stream s(seed, index);
  Vec3 v;
  for (Cx& x : v) x = s.cnormal();
  return P2Point(v);
}

P2Point random_cubic_point(const PlaneCubic& c, std::uint64_t seed, std::uint64_t index) {
  Stream s(seed ^ 0xC0B1Cull, index);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Vec3 a, b;
    for (Cx& x : a) x = s.cnormal();
    for (Cx& x : b) x = s.cnormal();
    // P(a + t b) = P(a) + t grad P(a).b + t^2 grad P(b).a + t^3 P(b)
    const std::array<Cx, 4> g{c(a), dot(c.gradient(a), b), dot(c.gradient(b), a), c(b)};
    if (std::abs(g[3]) < 1e-6) continue;
    const auto roots = cubic_roots(g);
    Cx t = roots[s.below(3)];
    // polish along the line
    for (int it = 0; it < 4; ++it) {
      const Vec3 w{a[0] + t * b[0], a[1] + t * b[1], a[2] + t * b[2]};
      const Cx gp = dot(c.gradient(w), b);
      if (gp == Cx(0)) break;
      t -= c(w) / gp;
    }
    const Vec3 v{a[0] + t * b[0], a[1] + t * b[1], a[2] + t * b[2]};
    P2Point p(v);
    if (c.residual(p) <= 1e-13) return p;
  }
  throw Error(ErrorCode::InternalInvariant, "could not place a point on the cubic");
}

LineRestriction restrict_to_line(const PlaneCubic& c, const P2Point& q, const P2Point& p) {
  LineRestriction r;
  const int k = argmax(q.x);
  r.q = q.x;  // q.x[k] is exactly 1 already
  Vec3 pp = p.x;
  if (std::abs(pp[k]) > 1e-3) {
    const Cx s = pp[k];
    for (Cx& v : pp) v /= s;
  }
  for (int i = 0; i < 3; ++i) r.d[i] = pp[i] - r.q[i];
  if (max_abs(r.d) == 0) throw Error(ErrorCode::Indeterminate, "p equals the base point");
  r.cubic = {c(r.q), dot(c.gradient(r.q), r.d), dot(c.gradient(r.d), r.q), c(r.d)};
  const Cx c1 = r.cubic[1], c2 = r.cubic[2], c3 = r.cubic[3];
  const double scale = std::max({std::abs(c1), std::abs(c2), std::abs(c3)});
  r.discriminant = scale > 0 ? std::abs(c2 * c2 - 4.0 * c1 * c3) / (scale * scale) : 0.0;
  if (std::abs(c3) > 0) {
    // stable quadratic roots of c3 t^2 + c2 t + c1
    const Cx sq = std::sqrt(c2 * c2 - 4.0 * c1 * c3);
    const Cx w = std::real(std::conj(c2) * sq) >= 0 ? -(c2 + sq) / 2.0 : -(c2 - sq) / 2.0;
    r.roots = {w / c3, w != Cx(0) ? c1 / w : Cx(0)};
  } else {
    r.roots = {Cx(INFINITY), c2 != Cx(0) ? -c1 / c2 : Cx(INFINITY)};
  }
  return r;
}

P2Point sigma_q(const PlaneCubic& c, const P2Point& q, const P2Point& p) {
  if (chordal(p, q) <= kDistinctBaseTol) throw Error(ErrorCode::Indeterminate, "p equals the base point");
  const LineRestriction r = restrict_to_line(c, q, p);
  if (r.discriminant <= kTangencyTol) throw Error(ErrorCode::Indeterminate, "line through the base point is tangent to the cubic");
  const Cx c1 = r.cubic[1], c2 = r.cubic[2], c3 = r.cubic[3];
  // Points alpha q + beta d; the involution of the line with fixed points
  // the roots of c1 a^2 + c2 a b + c3 b^2 is (a,b) -> (c2/2 a + c3 b, -c1 a - c2/2 b).
  // p sits at (1,1); t' = -(c2 + 2 c1)/(2 c3 + c2), taken projectively.
  const Cx a = 2.0 * c3 + c2, b = -(c2 + 2.0 * c1);
  Vec3 v;
  for (int i = 0; i < 3; ++i) v[i] = a * r.q[i] + b * r.d[i];
  if (max_abs(v) <= 1e-300) throw Error(ErrorCode::Indeterminate, "image collapses");
  return P2Point(v);
}

BlancMap::BlancMap(PlaneCubic cubic, std::vector<P2Point> base_points) : cubic_(std::move(cubic)), q_(std::move(base_points)) {
  if (q_.empty()) throw Error(ErrorCode::InvalidInput, "at least one base point is required");
  for (std::size_t i = 0; i < q_.size(); ++i) {
    if (cubic_.residual(q_[i]) > kOnCubicTol)
      throw Error(ErrorCode::Precondition, "base point " + std::to_string(i + 1) + " is not on the cubic");
    for (std::size_t j = 0; j < i; ++j)
      if (chordal(q_[i], q_[j]) < kDistinctBaseTol)
        throw Error(ErrorCode::Precondition, "base points " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide");
  }
}

namespace {

P2Point stage(const BlancMap& b, std::size_t i, const P2Point& p) {
  try {
    return sigma_q(b.cubic(), b.base_points()[i], p);
  } catch (const Error& e) {
    throw Error(e.code(), std::string(e.what()) + " (involution " + std::to_string(i + 1) + ")", static_cast<int>(i + 1));
  }
}

}  // namespace

P2Point blanc_compose(const BlancMap& b, const P2Point& p) {
  P2Point x = p;
  for (std::size_t i = b.length(); i-- > 0;) x = stage(b, i, x);
  return x;
}

P2Point blanc_inverse(const BlancMap& b, const P2Point& p) {
  P2Point x = p;
  for (std::size_t i = 0; i < b.length(); ++i) x = stage(b, i, x);
  return x;
}

double two_form_check(const BlancMap& b, const P2Point& p) {
  constexpr double kChart = 1e-8, h = 1e-6;
  if (std::abs(p.x[2]) < kChart) throw Error(ErrorCode::ChartFailure, "point outside the chart X2 != 0");
  const Cx x0 = p.x[0] / p.x[2], y0 = p.x[1] / p.x[2];
  auto affine = [&](Cx x, Cx y) {
    const P2Point img = blanc_compose(b, P2Point(Vec3{x, y, Cx(1)}));
    if (std::abs(img.x[2]) < kChart) throw Error(ErrorCode::ChartFailure, "image outside the chart X2 != 0");
    return std::array<Cx, 2>{img.x[0] / img.x[2], img.x[1] / img.x[2]};
  };
  const Cx p0 = b.cubic()(Vec3{x0, y0, Cx(1)});
  const auto f0 = affine(x0, y0);
  const Cx p1 = b.cubic()(Vec3{f0[0], f0[1], Cx(1)});
  if (std::abs(p0) <= kOnCubicTol || std::abs(p1) <= kOnCubicTol) throw Error(ErrorCode::OnCubic, "point or image on the cubic");
  const auto xp = affine(x0 + h, y0), xm = affine(x0 - h, y0);
  const auto yp = affine(x0, y0 + h), ym = affine(x0, y0 - h);
  const Cx j00 = (xp[0] - xm[0]) / (2 * h), j10 = (xp[1] - xm[1]) / (2 * h);
  const Cx j01 = (yp[0] - ym[0]) / (2 * h), j11 = (yp[1] - ym[1]) / (2 * h);
  const double jac = std::abs(j00 * j11 - j01 * j10);
  return std::fabs(jac * std::abs(p0) / std::abs(p1) - 1.0);
}

}  // namespace kummerlab

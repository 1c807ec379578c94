#include "kummerlab/wehler.hpp"

#include "kummerlab/dual.hpp"
#include "kummerlab/error.hpp"
#include "kummerlab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace kummerlab {

P1Point::P1Point(Cx u_, Cx v_) {
  if (std::abs(u_) > std::abs(v_)) {
    v = v_ / u_;
    u = 1.0;
  } else if (v_ != Cx(0.0)) {
    u = u_ / v_;
    v = 1.0;
  } else {
    throw Error(ErrorCode::InvalidInput, "(0 : 0) is not a point of P^1");
  }
}

double chordal(const P1Point& a, const P1Point& b) { return std::abs(a.u * b.v - a.v * b.u); }

double sphere_distance(const P1Point& a, const P1Point& b) {
  return chordal(a, b) / std::sqrt((std::norm(a.u) + std::norm(a.v)) * (std::norm(b.u) + std::norm(b.v)));
}

const char* to_string(Axis a) {
  switch (a) {
    case Axis::X: return "X";
    case Axis::Y: return "Y";
    case Axis::Z: return "Z";
  }
  return "?";
}

WehlerSurface::WehlerSurface(const Coeffs& c) : c_(c) {
  double m = 0;
  for (const auto& a : c_)
    for (const auto& b : a)
      for (const auto& z : b) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
          throw Error(ErrorCode::InvalidInput, "non-finite coefficient");
        m = std::max(m, std::abs(z));
      }
  if (m == 0) throw Error(ErrorCode::InvalidInput, "form is identically zero");
  // already normalized up to rounding: leave it alone so files round-trip
  if (std::fabs(m - 1.0) <= 8 * std::numeric_limits<double>::epsilon()) return;
  for (auto& a : c_)
    for (auto& b : a)
      for (auto& z : b) z /= m;
}

bool WehlerSurface::real_coefficients() const {
  for (const auto& a : c_)
    for (const auto& b : a)
      for (const auto& z : b)
        if (z.imag() != 0) return false;
  return true;
}

WehlerSurface random_surface(std::uint64_t seed, bool real_coeffs) {
  Stream st(seed, 0);
  WehlerSurface::Coeffs c{};
  for (auto& a : c)
    for (auto& b : a)
      for (auto& z : b) z = real_coeffs ? Cx(st.uniform(-1.0, 1.0), 0.0) : st.disk();
  return WehlerSurface(c);
}

namespace {

template <class T>
struct HP {
  T u, v;
};

template <class T>
HP<T> normalize(const HP<T>& p) {
  if (std::abs(primal(p.u)) > std::abs(primal(p.v))) return {T(Cx(1.0)), p.v / p.u};
  return {p.u / p.v, T(Cx(1.0))};
}

template <class T>
std::array<T, 3> monos(const HP<T>& p) {
  return {p.v * p.v, p.u * p.v, p.u * p.u};
}

// Q[e] = coefficient of u^e v^(2-e) in the coordinate `axis`.
template <class T>
std::array<T, 3> quad(const WehlerSurface& s, Axis axis, const std::array<HP<T>, 3>& p) {
  std::array<T, 3> q{T(Cx(0.0)), T(Cx(0.0)), T(Cx(0.0))};
  const int a = static_cast<int>(axis);
  const int o1 = a == 0 ? 1 : 0, o2 = a == 2 ? 1 : 2;
  const auto m1 = monos(p[o1]), m2 = monos(p[o2]);
  for (int r = 0; r < 3; ++r)
    for (int t = 0; t < 3; ++t) {
      const T w = m1[r] * m2[t];
      for (int e = 0; e < 3; ++e) {
        int idx[3];
        idx[a] = e;
        idx[o1] = r;
        idx[o2] = t;
        q[e] += w * s.c(idx[0], idx[1], idx[2]);
      }
    }
  return q;
}

int stage_of(Axis a) { return static_cast<int>(a) + 1; }

// Swap the coordinate `axis` with the other root of its fiber quadratic.
template <class T>
void sigma_impl(const WehlerSurface& s, Axis axis, std::array<HP<T>, 3>& p, const WehlerTolerances& tol) {
  const int a = static_cast<int>(axis);
  const auto q = quad(s, axis, p);
  const T& A = q[2];
  const T& B = q[1];
  const T& C = q[0];
  const Cx pa = primal(A), pb = primal(B), pc = primal(C);
  if (std::max({std::abs(pa), std::abs(pb), std::abs(pc)}) <= tol.degenerate_fiber)
    throw Error(ErrorCode::IndeterminatePoint, std::string("degenerate fiber for sigma_") + to_string(axis),
                stage_of(axis));
  const T& u = p[a].u;
  const T& v = p[a].v;
  // Vieta: sum of roots, product of roots, and the reciprocal sum.
  std::array<HP<T>, 3> cand{HP<T>{-(B * v) - A * u, A * v}, HP<T>{C * v, A * u}, HP<T>{C * u, -(B * u) - C * v}};
  int best = -1;
  double best_res = 0;
  for (int k = 0; k < 3; ++k) {
    const Cx cu = primal(cand[k].u), cv = primal(cand[k].v);
    const double m = std::max(std::abs(cu), std::abs(cv));
    if (!(m > 1e-300) || !std::isfinite(m)) continue;
    const Cx nu = cu / m, nv = cv / m;
    const double sc = std::max(std::abs(nu), std::abs(nv));
    const Cx uu = nu / sc, vv = nv / sc;
    const double r = std::abs(pa * uu * uu + pb * uu * vv + pc * vv * vv);
    if (best < 0 || r < best_res) {
      best = k;
      best_res = r;
    }
  }
  if (best < 0)
    throw Error(ErrorCode::IndeterminatePoint, std::string("no root swap for sigma_") + to_string(axis),
                stage_of(axis));
  HP<T> np = normalize(cand[best]);
  // One Newton step on the fiber quadratic in the moved coordinate.
  const bool inv = std::abs(primal(np.u)) > std::abs(primal(np.v));
  const T w = inv ? np.v : np.u;
  const T g = inv ? A + B * w + C * w * w : A * w * w + B * w + C;
  const T gp = inv ? B + T(Cx(2.0)) * C * w : T(Cx(2.0)) * A * w + B;
  const double scale = std::abs(pa) + std::abs(pb) + std::abs(pc);
  if (std::abs(primal(gp)) > 1e-8 * scale) {
    const T w2 = w - g / gp;
    np = inv ? HP<T>{T(Cx(1.0)), w2} : HP<T>{w2, T(Cx(1.0))};
    np = normalize(np);
  }
  p[a] = np;
}

std::array<HP<Cx>, 3> to_hp(const std::array<P1Point, 3>& p) {
  return {HP<Cx>{p[0].u, p[0].v}, HP<Cx>{p[1].u, p[1].v}, HP<Cx>{p[2].u, p[2].v}};
}

std::array<P1Point, 3> from_hp(const std::array<HP<Cx>, 3>& p) {
  return {P1Point(p[0].u, p[0].v), P1Point(p[1].u, p[1].v), P1Point(p[2].u, p[2].v)};
}

template <class T>
std::array<P1Point, 3> primal_point(const std::array<HP<T>, 3>& p) {
  return {P1Point(primal(p[0].u), primal(p[0].v)), P1Point(primal(p[1].u), primal(p[1].v)),
          P1Point(primal(p[2].u), primal(p[2].v))};
}

std::vector<P1Point> quadratic_roots(Cx A, Cx B, Cx C, const WehlerTolerances& tol) {
  if (std::max({std::abs(A), std::abs(B), std::abs(C)}) <= tol.degenerate_fiber)
    throw Error(ErrorCode::DegenerateFiber, "A = B = C = 0");
  Cx s = std::sqrt(B * B - 4.0 * A * C);
  if ((std::conj(B) * s).real() < 0) s = -s;
  const Cx q = -(B + s) / 2.0;
  if (q == Cx(0.0)) {
    P1Point r = std::abs(A) > std::abs(C) ? P1Point(0.0, 1.0) : P1Point::infinity();
    return {r, r};
  }
  return {P1Point(q, A), P1Point(C, q)};
}

P1Point polish_root(Cx A, Cx B, Cx C, const P1Point& r) {
  const bool inv = std::abs(r.u) > std::abs(r.v);
  const Cx w = inv ? r.v : r.u;
  const Cx g = inv ? A + B * w + C * w * w : A * w * w + B * w + C;
  const Cx gp = inv ? B + 2.0 * C * w : 2.0 * A * w + B;
  if (std::abs(gp) <= 1e-8 * (std::abs(A) + std::abs(B) + std::abs(C))) return r;
  const Cx w2 = w - g / gp;
  return inv ? P1Point(1.0, w2) : P1Point(w2, 1.0);
}

std::array<Cx, 3> affine_basis(Cx w, bool inv) {
  // exponent e of u: u^e v^(2-e) with (u, v) = (w, 1) or (1, w)
  return inv ? std::array<Cx, 3>{w * w, w, 1.0} : std::array<Cx, 3>{1.0, w, w * w};
}

std::array<Cx, 3> affine_basis_d(Cx w, bool inv) {
  return inv ? std::array<Cx, 3>{2.0 * w, 1.0, 0.0} : std::array<Cx, 3>{0.0, 1.0, 2.0 * w};
}

std::array<Cx, 3> affine_basis_dd(bool inv) {
  return inv ? std::array<Cx, 3>{2.0, 0.0, 0.0} : std::array<Cx, 3>{0.0, 0.0, 2.0};
}

}  // namespace

double residual(const WehlerSurface& s, const std::array<P1Point, 3>& p) {
  const auto hp = to_hp(p);
  const auto q = quad(s, Axis::Z, hp);
  const auto m = monos(hp[2]);
  return std::abs(q[0] * m[0] + q[1] * m[1] + q[2] * m[2]);
}

SurfacePoint make_point(const WehlerSurface& s, const std::array<P1Point, 3>& p) {
  SurfacePoint sp;
  sp.p = p;
  sp.residual = residual(s, p);
  return sp;
}

double point_distance(const SurfacePoint& a, const SurfacePoint& b) {
  return std::max({chordal(a.p[0], b.p[0]), chordal(a.p[1], b.p[1]), chordal(a.p[2], b.p[2])});
}

double product_chordal_distance(const SurfacePoint& a, const SurfacePoint& b) {
  double s = 0;
  for (int i = 0; i < 3; ++i) {
    double d = sphere_distance(a.p[i], b.p[i]);
    s += d * d;
  }
  return std::sqrt(s);
}

std::array<Cx, 3> fiber_quadratic(const WehlerSurface& s, Axis axis, const std::array<P1Point, 3>& p) {
  const auto q = quad(s, axis, to_hp(p));
  return {q[2], q[1], q[0]};
}

std::vector<P1Point> solve_fiber(const WehlerSurface& s, Axis axis, const P1Point& p, const P1Point& q,
                                 const WehlerTolerances& tol) {
  std::array<P1Point, 3> pts;
  const int a = static_cast<int>(axis);
  const int o1 = a == 0 ? 1 : 0, o2 = a == 2 ? 1 : 2;
  pts[o1] = p;
  pts[o2] = q;
  const auto abc = fiber_quadratic(s, axis, pts);
  auto roots = quadratic_roots(abc[0], abc[1], abc[2], tol);
  for (auto& r : roots) r = polish_root(abc[0], abc[1], abc[2], r);
  return roots;
}

SurfacePoint random_surface_point(const WehlerSurface& s, std::uint64_t seed, std::uint64_t index,
                                  const WehlerTolerances& tol) {
  Stream st(seed, index);
  for (int attempt = 0; attempt < 100; ++attempt) {
    P1Point x(st.disk(), st.disk()), y(st.disk(), st.disk());
    const bool pick = st.next() & 1;
    std::vector<P1Point> roots;
    try {
      roots = solve_fiber(s, Axis::Z, x, y, tol);
    } catch (const Error&) {
      continue;
    }
    SurfacePoint sp = make_point(s, {x, y, roots[pick ? 1 : 0]});
    if (sp.residual <= tol.membership) return sp;
  }
  throw Error(ErrorCode::InternalInvariant, "could not sample a surface point");
}

SurfacePoint sigma(const WehlerSurface& s, Axis axis, const SurfacePoint& p, const WehlerTolerances& tol) {
  const double r = residual(s, p.p);
  if (!(r <= tol.off_surface)) throw Error(ErrorCode::OffSurface, "residual " + std::to_string(r), stage_of(axis));
  auto hp = to_hp(p.p);
  sigma_impl(s, axis, hp, tol);
  return make_point(s, from_hp(hp));
}

std::vector<Axis> forward_chain(int n) {
  std::vector<Axis> c;
  for (int i = 0; i < n; ++i) c.insert(c.end(), {Axis::Z, Axis::Y, Axis::X});
  return c;
}

std::vector<Axis> inverse_chain(int n) {
  std::vector<Axis> c;
  for (int i = 0; i < n; ++i) c.insert(c.end(), {Axis::X, Axis::Y, Axis::Z});
  return c;
}

SurfacePoint wehler_map(const WehlerSurface& s, const SurfacePoint& p, const WehlerTolerances& tol) {
  SurfacePoint q = p;
  for (Axis a : forward_chain()) q = sigma(s, a, q, tol);
  return q;
}

SurfacePoint wehler_map_inverse(const WehlerSurface& s, const SurfacePoint& p, const WehlerTolerances& tol) {
  SurfacePoint q = p;
  for (Axis a : inverse_chain()) q = sigma(s, a, q, tol);
  return q;
}

SurfacePoint wehler_iterate(const WehlerSurface& s, const SurfacePoint& p, int n, const WehlerTolerances& tol) {
  SurfacePoint q = p;
  if (n >= 0)
    for (int i = 0; i < n; ++i) q = wehler_map(s, q, tol);
  else
    for (int i = 0; i < -n; ++i) q = wehler_map_inverse(s, q, tol);
  return q;
}

std::array<Cx, 3> chart_gradient(const WehlerSurface& s, const SurfacePoint& p, const Chart& c) {
  std::array<Cx, 3> g;
  for (int a = 0; a < 3; ++a) {
    const auto abc = fiber_quadratic(s, static_cast<Axis>(a), p.p);
    const Cx A = abc[0], B = abc[1], C = abc[2];
    const Cx w = c.inverted[a] ? p.p[a].v : p.p[a].u;
    g[a] = c.inverted[a] ? B + 2.0 * C * w : 2.0 * A * w + B;
  }
  return g;
}

Chart choose_chart(const WehlerSurface& s, const SurfacePoint& p, const WehlerTolerances& tol) {
  Chart c;
  for (int a = 0; a < 3; ++a) c.inverted[a] = std::abs(p.p[a].u) > std::abs(p.p[a].v);
  const auto g = chart_gradient(s, p, c);
  int dep = 0;
  for (int a = 1; a < 3; ++a)
    if (std::abs(g[a]) > std::abs(g[dep])) dep = a;
  if (std::abs(g[dep]) < tol.chart) throw Error(ErrorCode::ChartFailure, "all affine partials vanish");
  c.dependent = dep;
  c.free = dep == 0 ? std::array<int, 2>{1, 2} : dep == 1 ? std::array<int, 2>{0, 2} : std::array<int, 2>{0, 1};
  return c;
}

std::array<Cx, 2> chart_coords(const SurfacePoint& p, const Chart& c) {
  std::array<Cx, 2> w;
  for (int t = 0; t < 2; ++t) {
    const auto& q = p.p[c.free[t]];
    w[t] = c.inverted[c.free[t]] ? q.v / q.u : q.u / q.v;
  }
  return w;
}

ChartMap chart_map(const WehlerSurface& s, const SurfacePoint& base, const Chart& in, const std::array<Cx, 2>& w,
                   const std::vector<Axis>& chain, const Chart& out, const WehlerTolerances& tol) {
  using D = Dual<Cx, 2>;
  const D one(Cx(1.0));
  std::array<HP<D>, 3> p;
  for (int t = 0; t < 2; ++t) {
    const int a = in.free[t];
    const D x = D::variable(w[t], t);
    p[a] = in.inverted[a] ? HP<D>{one, x} : HP<D>{x, one};
  }
  // Dependent coordinate: the fiber root nearest the base point, with the
  // implicit-function derivative supplied by one Newton step on duals.
  const int dep = in.dependent;
  const Axis dax = static_cast<Axis>(dep);
  const auto q = quad(s, dax, p);
  const Cx A = q[2].v, B = q[1].v, C = q[0].v;
  auto roots = quadratic_roots(A, B, C, tol);
  const P1Point& ref = base.p[dep];
  const P1Point& root = chordal(roots[0], ref) <= chordal(roots[1], ref) ? roots[0] : roots[1];
  const bool inv = in.inverted[dep];
  const Cx den = inv ? root.u : root.v;
  if (std::abs(den) < 1e-12) throw Error(ErrorCode::ChartFailure, "dependent root left the affine patch");
  const Cx r = (inv ? root.v : root.u) / den;
  const D rd(r);
  const D g = inv ? q[2] + q[1] * rd + q[0] * rd * rd : q[2] * rd * rd + q[1] * rd + q[0];
  const Cx gp = inv ? B + 2.0 * C * r : 2.0 * A * r + B;
  if (std::abs(gp) < tol.chart) throw Error(ErrorCode::ChartFailure, "implicit chart is singular");
  const D rfix = rd - g * (Cx(1.0) / gp);
  p[dep] = inv ? HP<D>{one, rfix} : HP<D>{rfix, one};

  for (Axis a : chain) sigma_impl(s, a, p, tol);

  ChartMap m;
  for (int t = 0; t < 2; ++t) {
    const int a = out.free[t];
    const D& num = out.inverted[a] ? p[a].v : p[a].u;
    const D& dn = out.inverted[a] ? p[a].u : p[a].v;
    if (std::abs(dn.v) < 1e-12) throw Error(ErrorCode::ChartFailure, "image left the output chart");
    const D o = num / dn;
    m.value[t] = o.v;
    m.jacobian[t] = {o.d[0], o.d[1]};
  }
  m.image = make_point(s, primal_point(p));
  return m;
}

Mat2 tangent_map(const WehlerSurface& s, const SurfacePoint& p, const WehlerTolerances& tol) {
  const Chart c0 = choose_chart(s, p, tol);
  const SurfacePoint fp = wehler_map(s, p, tol);
  const Chart c1 = choose_chart(s, fp, tol);
  return chart_map(s, p, c0, chart_coords(p, c0), forward_chain(), c1, tol).jacobian;
}

std::array<Cx, 2> eigenvalues(const Mat2& m) {
  const Cx tr = m[0][0] + m[1][1];
  const Cx det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Cx s = std::sqrt(tr * tr / 4.0 - det);
  if ((std::conj(tr) * s).real() < 0) s = -s;
  const Cx l1 = tr / 2.0 + s;
  const Cx l2 = l1 == Cx(0.0) ? Cx(0.0) : det / l1;
  return std::abs(l1) >= std::abs(l2) ? std::array<Cx, 2>{l1, l2} : std::array<Cx, 2>{l2, l1};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

namespace {

// F, gradient and Hessian in the affine patches `inv` at w.
void affine_jet(const WehlerSurface& s, const std::array<Cx, 3>& w, const std::array<bool, 3>& inv, Cx* f,
                std::array<Cx, 3>* g, std::array<std::array<Cx, 3>, 3>* h) {
  std::array<std::array<Cx, 3>, 3> b, db, ddb;
  for (int a = 0; a < 3; ++a) {
    b[a] = affine_basis(w[a], inv[a]);
    db[a] = affine_basis_d(w[a], inv[a]);
    ddb[a] = affine_basis_dd(inv[a]);
  }
  *f = 0;
  *g = {};
  *h = {};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const Cx c = s.c(i, j, k);
        if (c == Cx(0.0)) continue;
        const int e[3] = {i, j, k};
        Cx v = c;
        for (int a = 0; a < 3; ++a) v *= b[a][e[a]];
        *f += v;
        for (int a = 0; a < 3; ++a) {
          Cx ga = c;
          for (int t = 0; t < 3; ++t) ga *= (t == a ? db[t][e[t]] : b[t][e[t]]);
          (*g)[a] += ga;
          for (int bb = 0; bb < 3; ++bb) {
            Cx hab = c;
            for (int t = 0; t < 3; ++t) {
              if (t == a && t == bb)
                hab *= ddb[t][e[t]];
              else if (t == a || t == bb)
                hab *= db[t][e[t]];
              else
                hab *= b[t][e[t]];
            }
            (*h)[a][bb] += hab;
          }
        }
      }
}

bool solve3(std::array<std::array<Cx, 3>, 3> m, std::array<Cx, 3> rhs, std::array<Cx, 3>* x) {
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int r = c + 1; r < 3; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (std::abs(m[piv][c]) < 1e-300) return false;
    std::swap(m[c], m[piv]);
    std::swap(rhs[c], rhs[piv]);
    for (int r = c + 1; r < 3; ++r) {
      const Cx f = m[r][c] / m[c][c];
      for (int k = c; k < 3; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  for (int c = 2; c >= 0; --c) {
    Cx v = rhs[c];
    for (int k = c + 1; k < 3; ++k) v -= m[c][k] * (*x)[k];
    (*x)[c] = v / m[c][c];
  }
  return true;
}

}  // namespace

std::vector<Suspect> singularity_probe(const WehlerSurface& s, int trials, std::uint64_t seed) {
  std::vector<Suspect> out;
  for (int t = 0; t < trials; ++t) {
    SurfacePoint p;
    try {
      p = random_surface_point(s, seed, static_cast<std::uint64_t>(t));
    } catch (const Error&) {
      continue;
    }
    std::array<bool, 3> inv;
    std::array<Cx, 3> w;
    for (int a = 0; a < 3; ++a) {
      inv[a] = std::abs(p.p[a].u) > std::abs(p.p[a].v);
      w[a] = inv[a] ? p.p[a].v : p.p[a].u;
    }
    Cx f;
    std::array<Cx, 3> g;
    std::array<std::array<Cx, 3>, 3> h;
    for (int it = 0; it < 30; ++it) {
      affine_jet(s, w, inv, &f, &g, &h);
      std::array<Cx, 3> dx{};
      if (!solve3(h, {-g[0], -g[1], -g[2]}, &dx)) break;
      double step = std::sqrt(std::norm(dx[0]) + std::norm(dx[1]) + std::norm(dx[2]));
      if (!std::isfinite(step) || step > 10) break;
      for (int a = 0; a < 3; ++a) w[a] += dx[a];
      if (step < 1e-14) break;
    }
    affine_jet(s, w, inv, &f, &g, &h);
    const double gn = std::max({std::abs(g[0]), std::abs(g[1]), std::abs(g[2])});
    if (!(std::abs(f) <= 1e-8 && gn <= 1e-8)) continue;
    std::array<P1Point, 3> q;
    for (int a = 0; a < 3; ++a) q[a] = inv[a] ? P1Point(1.0, w[a]) : P1Point(w[a], 1.0);
    Suspect sus{make_point(s, q), gn};
    bool dup = false;
    for (const auto& o : out)
      if (point_distance(o.point, sus.point) <= 1e-6) dup = true;
    if (!dup) out.push_back(sus);
  }
  return out;
}

std::string orbit_density_pgm(const WehlerSurface& s, const SurfacePoint& p0, long long iterations, Axis first,
                              Axis second, int size, const WehlerTolerances& tol) {
  std::vector<long long> hist(static_cast<std::size_t>(size) * size, 0);
  auto bin = [&](const P1Point& q) {
    const double theta = 2.0 * std::atan2(std::abs(q.u), std::abs(q.v)) / std::numbers::pi;
    return std::clamp(static_cast<int>(theta * size), 0, size - 1);
  };
  SurfacePoint p = p0;
  for (long long i = 0; i < iterations; ++i) {
    try {
      p = wehler_map(s, p, tol);
    } catch (const Error&) {
      break;
    }
    const int col = bin(p.p[static_cast<int>(first)]);
    const int row = size - 1 - bin(p.p[static_cast<int>(second)]);
    ++hist[static_cast<std::size_t>(row) * size + col];
  }
  const long long mx = *std::max_element(hist.begin(), hist.end());
  std::string out = "P5 " + std::to_string(size) + " " + std::to_string(size) + " 255\n";
  out.reserve(out.size() + hist.size());
  for (long long c : hist) {
    const double v = mx > 0 ? 255.0 * std::log1p(static_cast<double>(c)) / std::log1p(static_cast<double>(mx)) : 0.0;
    out.push_back(static_cast<char>(static_cast<unsigned char>(std::lround(v))));
  }
  return out;
}

}  // namespace kummerlab

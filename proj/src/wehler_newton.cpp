#include "kummerlab/wehler_newton.hpp"

#include "kummerlab/error.hpp"

#include <algorithm>
#include <cmath>

namespace kummerlab {

const char* to_string(SaddleType t) { return t == SaddleType::Saddle ? "SADDLE" : "NONSADDLE"; }

namespace {

SurfacePoint lift(const WehlerSurface& s, const SurfacePoint& base, const Chart& c, const std::array<Cx, 2>& w,
                  const WehlerTolerances& tol) {
  return chart_map(s, base, c, w, {}, c, tol).image;
}

double norm2(const std::array<Cx, 2>& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1])); }

std::array<double, 12> sort_key(const SurfacePoint& p) {
  std::array<double, 12> k;
  for (int a = 0; a < 3; ++a) {
    k[4 * a] = p.p[a].u.real();
    k[4 * a + 1] = p.p[a].u.imag();
    k[4 * a + 2] = p.p[a].v.real();
    k[4 * a + 3] = p.p[a].v.imag();
  }
  return k;
}

}  // namespace

std::optional<SaddleOrbit> newton_from(const WehlerSurface& s, const SurfacePoint& start, int n,
                                       const NewtonOptions& opt) {
  const auto chain = forward_chain(n);
  const auto& tol = opt.tol;
  SurfacePoint p = start;
  try {
    for (int it = 0; it < opt.max_iter; ++it) {
      const Chart c = choose_chart(s, p, tol);
      const auto w = chart_coords(p, c);
      const ChartMap cm = chart_map(s, p, c, w, chain, c, tol);
      const double disp = point_distance(cm.image, p);
      const std::array<Cx, 2> g{cm.value[0] - w[0], cm.value[1] - w[1]};
      const Cx a = cm.jacobian[0][0] - 1.0, b = cm.jacobian[0][1], cc = cm.jacobian[1][0],
               d = cm.jacobian[1][1] - 1.0;
      const Cx det = a * d - b * cc;
      bool done = disp <= tol.newton_accept;
      std::array<Cx, 2> step{};
      if (!done) {
        if (std::abs(det) < 1e-300) return std::nullopt;
        step = {-(d * g[0] - b * g[1]) / det, -(-cc * g[0] + a * g[1]) / det};
        const double len = norm2(step);
        if (!std::isfinite(len)) return std::nullopt;
        if (len <= tol.newton_accept && disp <= tol.replay) {
          // Step below the acceptance threshold: the residual is at the
          // rounding floor of f^n.
          p = lift(s, p, c, {w[0] + step[0], w[1] + step[1]}, tol);
          done = true;
        } else {
          if (len > opt.step_cap) {
            step[0] *= opt.step_cap / len;
            step[1] *= opt.step_cap / len;
          }
          const double g0 = norm2(g);
          bool moved = false;
          double alpha = 1.0;
          for (int k = 0; k <= opt.backtracks; ++k, alpha *= 0.5) {
            const std::array<Cx, 2> w2{w[0] + alpha * step[0], w[1] + alpha * step[1]};
            try {
              SurfacePoint p2 = lift(s, p, c, w2, tol);
              const ChartMap cm2 = chart_map(s, p2, c, chart_coords(p2, c), chain, c, tol);
              const std::array<Cx, 2> g2{cm2.value[0] - w2[0], cm2.value[1] - w2[1]};
              if (norm2(g2) < g0 || k == opt.backtracks) {
                p = p2;
                moved = true;
                break;
              }
            } catch (const Error&) {
            }
          }
          if (!moved) return std::nullopt;
        }
      }
      if (!done) continue;

      const Chart c2 = choose_chart(s, p, tol);
      const ChartMap fin = chart_map(s, p, c2, chart_coords(p, c2), chain, c2, tol);
      SaddleOrbit o;
      o.period = n;
      o.point = p;
      if (!(p.residual <= tol.membership)) return std::nullopt;
      const SurfacePoint back = wehler_iterate(s, p, n, tol);
      o.displacement = point_distance(back, p);
      if (!(o.displacement <= tol.replay)) return std::nullopt;
      o.multipliers = eigenvalues(fin.jacobian);
      o.type = std::abs(o.multipliers[0]) > 1.0 && std::abs(o.multipliers[1]) < 1.0 ? SaddleType::Saddle
                                                                                     : SaddleType::NonSaddle;
      o.minimal_period = n;
      for (int m = 1; m < n; ++m) {
        if (n % m) continue;
        if (point_distance(wehler_iterate(s, p, m, tol), p) <= tol.dedup) {
          o.minimal_period = m;
          break;
        }
      }
      return o;
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return std::nullopt;
}

std::vector<SaddleOrbit> newton_periodic(const WehlerSurface& s, int n, int seeds, std::uint64_t rng_seed,
                                         const NewtonOptions& opt) {
  if (n < 1 || n > opt.max_period) throw Error(ErrorCode::Precondition, "period must be in [1, max_period]");
  if (seeds < 0) throw Error(ErrorCode::InvalidInput, "negative seed count");
  std::vector<std::vector<SaddleOrbit>> slots(static_cast<std::size_t>(seeds));
  auto task = [&](int j) {
    const std::uint64_t index = (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint64_t>(j);
    SurfacePoint start;
    try {
      start = random_surface_point(s, rng_seed, index, opt.tol);
    } catch (const Error&) {
      return;
    }
    auto o = newton_from(s, start, n, opt);
    if (!o) return;
    if (opt.exact_period && o->minimal_period != n) return;
    auto& out = slots[static_cast<std::size_t>(j)];
    out.push_back(*o);
    if (!opt.complete_orbits) return;
    SurfacePoint q = o->point;
    for (int k = 1; k < o->minimal_period; ++k) {
      try {
        q = wehler_map(s, q, opt.tol);
      } catch (const Error&) {
        break;
      }
      if (auto r = newton_from(s, q, n, opt)) out.push_back(*r);
    }
  };
  if (opt.parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (int j = 0; j < seeds; ++j) task(j);
  } else {
    for (int j = 0; j < seeds; ++j) task(j);
  }

  // Single-owner merge: canonical order, then greedy deduplication.
  std::vector<SaddleOrbit> all;
  for (auto& sl : slots)
    for (auto& o : sl) all.push_back(std::move(o));
  std::sort(all.begin(), all.end(),
            [](const SaddleOrbit& a, const SaddleOrbit& b) { return sort_key(a.point) < sort_key(b.point); });
  std::vector<SaddleOrbit> kept;
  for (auto& o : all) {
    bool dup = false;
    for (const auto& k : kept)
      if (point_distance(k.point, o.point) <= opt.tol.dedup) {
        dup = true;
        break;
      }
    if (!dup) kept.push_back(std::move(o));
  }
  return kept;
}

LyapunovReport lyapunov_from_multipliers(const std::vector<PeriodicMultipliers>& m) {
  std::vector<double> lu, ls;
  for (const auto& x : m) {
    const double a = std::abs(x.m1), b = std::abs(x.m2);
    if (!(a > 1.0 && b < 1.0)) continue;
    lu.push_back(std::log(a) / x.period);
    ls.push_back(std::log(b) / x.period);
  }
  if (lu.size() < kMinSaddles)
    throw Error(ErrorCode::TooFewSaddles, std::to_string(lu.size()) + " saddles, need " + std::to_string(kMinSaddles));
  auto mean_se = [](const std::vector<double>& v, double* se) {
    double mu = 0;
    for (double x : v) mu += x;
    mu /= static_cast<double>(v.size());
    double var = 0;
    for (double x : v) var += (x - mu) * (x - mu);
    *se = std::sqrt(var / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
    return mu;
  };
  LyapunovReport r;
  r.method = LyapunovMethod::SaddleMultipliers;
  r.lambda_u = mean_se(lu, &r.std_error_u);
  r.lambda_s = mean_se(ls, &r.std_error_s);
  r.std_error = std::max(r.std_error_u, r.std_error_s);
  r.samples = static_cast<long long>(lu.size());
  return r;
}

LyapunovReport lyapunov_from_saddles(const std::vector<SaddleOrbit>& orbits) {
  std::vector<PeriodicMultipliers> m;
  for (const auto& o : orbits)
    if (o.type == SaddleType::Saddle) m.push_back({o.period, o.multipliers[0], o.multipliers[1]});
  return lyapunov_from_multipliers(m);
}

std::vector<PeriodicMultipliers> torus_multipliers(const TorusAutomorphism& f, int n_max) {
  std::vector<PeriodicMultipliers> out;
  for (int n = 1; n <= n_max; ++n) {
    const IntMatrix mn = f.matrix().pow(static_cast<unsigned>(n));
    Mat2 m{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m[i][j] = Cx(mn(i, j).convert_to<double>());
    const auto e = eigenvalues(m);
    out.push_back({n, e[0], e[1]});
  }
  return out;
}

}  // namespace kummerlab

#include "kummerlab/rigidity.hpp"

#include "kummerlab/error.hpp"
#include "kummerlab/kernels.hpp"
#include "kummerlab/spectral.hpp"
#include "kummerlab/wehler_action.hpp"

#include <cmath>
#include <limits>

namespace kummerlab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::KummerConsistent: return "KUMMER_CONSISTENT";
    case Verdict::RigidityGap: return "RIGIDITY_GAP";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

Verdict decide_verdict(const RigidityReport& r, std::string* reason) {
  auto say = [&](const std::string& s) {
    if (reason) *reason = s;
  };
  if (!r.lyapunov) {
    say("no Lyapunov estimate");
    return Verdict::Inconclusive;
  }
  // An exact (stderr 0) estimate is compared with an 8 ulp floor: lambda_f
  // and lambda_u come from independent floating-point routes.
  const double floor = 8 * std::numeric_limits<double>::epsilon() * std::max(1.0, r.half_log_lambda_f);
  const double tu = std::max(3 * r.gap_u.sigma, floor), ts = std::max(3 * r.gap_s.sigma, floor);
  if (r.gap_u.value < -tu || r.gap_s.value < -ts) {
    say("negative gap beyond 3 sigma (below the Ruelle bound)");
    return Verdict::Inconclusive;
  }
  if (r.gap_u.value > tu || r.gap_s.value > ts) {
    say("gap above 3 sigma");
    return Verdict::RigidityGap;
  }
  if (!r.dimension) {
    say("gaps vanish but no dimension estimate");
    return Verdict::Inconclusive;
  }
  if (std::fabs(r.dimension->dimension - 4.0) <= std::max(3 * r.dimension->std_error, kDimensionSlack)) {
    say("gaps vanish and local dimension is 4");
    return Verdict::KummerConsistent;
  }
  say("gaps vanish but local dimension differs from 4");
  return Verdict::Inconclusive;
}

namespace {

void fill_gaps(RigidityReport& r) {
  const auto& l = *r.lyapunov;
  r.gap_u = {l.lambda_u - r.half_log_lambda_f, l.std_error_u};
  r.gap_s = {-l.lambda_s - r.half_log_lambda_f, l.std_error_s};
}

}  // namespace

RigidityReport torus_rigidity_report(const TorusAutomorphism& f, const TorusRigidityOptions& opt) {
  RigidityReport r;
  const SpectralReport h2 = h2_degree(f);
  r.lambda_f = h2.lambda_f;
  r.half_log_lambda_f = static_cast<double>(0.5L * std::log(h2.lambda_f_ld));
  try {
    r.lyapunov = lyapunov_exact(f);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotHyperbolic) throw;
    r.reason = e.what();
    r.verdict = Verdict::Inconclusive;
    return r;
  }
  r.cross_check = lyapunov_qr_orbit(f, {0.1234, 0.5678, 0.9012, 0.3456}, opt.qr_steps);
  fill_gaps(r);
  // mu_f is Haar measure on the torus, pushed to the quotient if any.
  auto samples =
      opt.parallel ? kernels::haar_samples_parallel(opt.seed, opt.samples) : kernels::haar_samples_serial(opt.seed, opt.samples);
  if (f.quotient() == Quotient::Kummer)
    for (auto& p : samples) p = kummer_project(p);
  else if (f.quotient() == Quotient::EtaTau)
    for (auto& p : samples) p = eta_tau_project(p, f.lattice());
  const auto radii = log_spaced_radii(opt.r_max, opt.r_min, opt.radii);
  try {
    r.dimension = local_dimension_estimate(
        samples, [&f](const TorusPoint& a, const TorusPoint& b) { return quotient_distance(f, a, b); }, radii,
        opt.probes, opt.seed, opt.parallel);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateRadii && e.code() != ErrorCode::InsufficientSamples) throw;
  }
  r.saddle_count = 0;
  r.verdict = decide_verdict(r, &r.reason);
  return r;
}

BigInt wehler_lefschetz(int n) {
  const IntMatrix p = wehler_product(wehler_cohomology_action()).pow(static_cast<unsigned>(n));
  return 2 + p.trace() + (n % 2 ? -19 : 19);
}

RigidityReport wehler_rigidity_from_saddles(const std::vector<SaddleOrbit>& saddles, const WehlerRigidityOptions& opt) {
  RigidityReport r;
  const SpectralReport sr = dynamical_degree(wehler_product(wehler_cohomology_action()));
  r.lambda_f = sr.lambda_f;
  r.half_log_lambda_f = static_cast<double>(0.5L * std::log(sr.lambda_f_ld));
  for (int n = 1; n <= opt.n_max; ++n) {
    PeriodCensus c;
    c.period = n;
    c.lefschetz = wehler_lefschetz(n);
    for (const auto& o : saddles)
      if (o.period == n) {
        ++c.found;
        c.saddles += o.type == SaddleType::Saddle;
      }
    r.census.push_back(c);
  }
  std::vector<SurfacePoint> cloud;
  for (const auto& o : saddles)
    if (o.type == SaddleType::Saddle) {
      ++r.saddle_count;
      cloud.push_back(o.point);
    }
  try {
    r.lyapunov = lyapunov_from_saddles(saddles);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooFewSaddles) throw;
    r.verdict = Verdict::Inconclusive;
    r.reason = e.what();
    return r;
  }
  fill_gaps(r);
  if (cloud.size() >= kMinDimensionSamples) {
    const std::size_t probes = std::min(opt.probes, cloud.size());
    const auto centers = choose_probes(cloud.size(), probes, opt.rng_seed);
    const auto radii = automatic_radii(cloud, product_chordal_distance, centers, opt.radii);
    if (!radii.empty()) {
      try {
        r.dimension =
            local_dimension_estimate(cloud, product_chordal_distance, radii, probes, opt.rng_seed, opt.newton.parallel);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateRadii) throw;
      }
    }
  }
  r.verdict = decide_verdict(r, &r.reason);
  return r;
}

RigidityReport wehler_rigidity_report(const WehlerSurface& s, const WehlerRigidityOptions& opt,
                                      std::vector<SaddleOrbit>* saddles_out) {
  std::vector<SaddleOrbit> all;
  for (int n = 1; n <= opt.n_max; ++n) {
    auto o = newton_periodic(s, n, opt.seeds, opt.rng_seed, opt.newton);
    all.insert(all.end(), o.begin(), o.end());
  }
  RigidityReport r = wehler_rigidity_from_saddles(all, opt);
  if (saddles_out) *saddles_out = std::move(all);
  return r;
}

}  // namespace kummerlab

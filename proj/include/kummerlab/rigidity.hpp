#pragma once

#include "kummerlab/local_dimension.hpp"
#include "kummerlab/torus.hpp"
#include "kummerlab/wehler_newton.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kummerlab {

enum class Verdict { KummerConsistent, RigidityGap, Inconclusive };
const char* to_string(Verdict v);

struct Gap {
  double value = 0;
  double sigma = 0;
};

struct PeriodCensus {
  int period = 0;
  std::size_t found = 0;
  std::size_t saddles = 0;
  /// Number of fixed points of f^n counted with multiplicity.
  BigInt lefschetz;
};

struct RigidityReport {
  double lambda_f = 1;
  double half_log_lambda_f = 0;
  std::optional<LyapunovReport> lyapunov;
  std::optional<LyapunovReport> cross_check;
  std::optional<DimensionEstimate> dimension;
  Gap gap_u, gap_s;
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
  std::size_t saddle_count = 0;
  std::vector<PeriodCensus> census;
};

/// |dim - 4| allowance when the statistical error is tiny (see notes).
inline constexpr double kDimensionSlack = 0.2;

/// Verdict rules: negative gaps beyond 3 sigma force INCONCLUSIVE, positive
/// gaps beyond 3 sigma give RIGIDITY_GAP, both within 3 sigma together with a
/// dimension near 4 give KUMMER_CONSISTENT; anything else is INCONCLUSIVE.
Verdict decide_verdict(const RigidityReport& r, std::string* reason);

struct TorusRigidityOptions {
  std::size_t samples = 100000;
  std::size_t probes = 200;
  double r_max = 0.5;
  double r_min = 0.05;
  int radii = 10;
  long long qr_steps = 10000;
  std::uint64_t seed = 1;
  bool parallel = true;
};

RigidityReport torus_rigidity_report(const TorusAutomorphism& f, const TorusRigidityOptions& opt = {});

/// Lefschetz number of f^n for f = sigma_1 sigma_2 sigma_3 on a generic
/// (2,2,2) surface: 2 + tr(P^n) + 19 (-1)^n.
BigInt wehler_lefschetz(int n);

struct WehlerRigidityOptions {
  int n_max = 5;
  int seeds = 2000;
  std::uint64_t rng_seed = 1;
  std::size_t probes = 200;
  int radii = 10;
  NewtonOptions newton;
};

/// Saddle census of periods 1..n_max pooled; the dimension is estimated on
/// the saddle cloud with the product chordal metric and automatic radii.
RigidityReport wehler_rigidity_report(const WehlerSurface& s, const WehlerRigidityOptions& opt = {},
                                      std::vector<SaddleOrbit>* saddles_out = nullptr);

/// Same assembly from an existing census (used by the CLI and tests).
RigidityReport wehler_rigidity_from_saddles(const std::vector<SaddleOrbit>& saddles, const WehlerRigidityOptions& opt);

/// Radii for a point cloud: r_min is the median 10th-neighbour distance of
/// the probes, r_max the median distance to the (N/10)-th neighbour,
/// widened to a full decade. Empty when the cloud is too small or collapsed.
template <class P, class Dist>
std::vector<double> automatic_radii(const std::vector<P>& pts, Dist dist, const std::vector<std::size_t>& probes,
                                    int count);

}  // namespace kummerlab

#include "kummerlab/rigidity_impl.hpp"

#pragma once

#include "kummerlab/torus.hpp"
#include "kummerlab/wehler.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kummerlab {

enum class SaddleType { Saddle, NonSaddle };
const char* to_string(SaddleType t);

struct SaddleOrbit {
  int period = 1;
  SurfacePoint point;
  /// Eigenvalues of D(f^n) in the chart at `point`, |m1| >= |m2|.
  std::array<Cx, 2> multipliers{};
  SaddleType type = SaddleType::NonSaddle;
  /// Replayed max coordinate chordal distance between f^n(point) and point.
  double displacement = 0;
  int minimal_period = 1;
};

struct NewtonOptions {
  int max_iter = 80;
  /// Largest Newton step in affine chart coordinates.
  double step_cap = 0.5;
  int backtracks = 8;
  int max_period = 8;
  bool exact_period = false;
  /// Add the other points of each orbit (re-polished) to the census.
  bool complete_orbits = true;
  bool parallel = true;
  WehlerTolerances tol;
};

/// Period-n points found from `seeds` random starts; seed j draws from the
/// stream (rng_seed, n << 32 | j). Result is canonically sorted and
/// deduplicated, independent of the number of threads.
std::vector<SaddleOrbit> newton_periodic(const WehlerSurface& s, int n, int seeds, std::uint64_t rng_seed,
                                         const NewtonOptions& opt = {});

/// Newton from one start; empty when it does not converge or fails replay.
std::optional<SaddleOrbit> newton_from(const WehlerSurface& s, const SurfacePoint& start, int n,
                                       const NewtonOptions& opt = {});

struct PeriodicMultipliers {
  int period = 1;
  Cx m1, m2;
};

inline constexpr std::size_t kMinSaddles = 5;

/// Mean of (1/n) log|m1| and (1/n) log|m2| over saddles, with sample
/// standard errors. TooFewSaddles below five saddles.
LyapunovReport lyapunov_from_multipliers(const std::vector<PeriodicMultipliers>& m);
LyapunovReport lyapunov_from_saddles(const std::vector<SaddleOrbit>& orbits);

/// Multipliers of the periodic points of a linear torus map, periods 1..n_max:
/// the eigenvalues of M^n.
std::vector<PeriodicMultipliers> torus_multipliers(const TorusAutomorphism& f, int n_max);

}  // namespace kummerlab

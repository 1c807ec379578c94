#pragma once

#include "kummerlab/torus.hpp"

#include <array>
#include <vector>

namespace kummerlab {

struct PeriodicEnsemble {
  unsigned period = 1;
  /// Canonically sorted, all with the same denominator.
  std::vector<RationalTorusPoint> points;
  BigInt count;
};

/// det(M^n - I)^2, the number of fixed points of f^n. DegeneratePeriod if zero.
BigInt fix_count(const TorusAutomorphism& f, unsigned n);

inline constexpr long long kDefaultEnumerationCap = 1000000;

/// All fixed points of f^n as exact rational points (Smith-form cosets).
/// CapExceeded if fix_count exceeds `cap`.
PeriodicEnsemble fix_enumerate(const TorusAutomorphism& f, unsigned n, long long cap = kDefaultEnumerationCap);

using Frequency = std::array<int, 4>;

/// Nonzero k with |k|_inf <= k_max, lexicographic order.
std::vector<Frequency> frequencies(int k_max);

struct WeylReport {
  int k_max = 0;
  std::size_t frequency_count = 0;
  double max_abs = 0;
  /// Largest |W(k)| over k with |W(k)| below the 1e-10 threshold (should be ~0).
  double max_abs_nontrivial_free = 0;
  /// Largest distance of |W(k)| from {0, 1}.
  double max_deviation = 0;
  std::vector<Frequency> trivial;  // |W(k)| > 1e-10
  double trivial_fraction = 0;
};

inline constexpr double kWeylThreshold = 1e-10;

/// Weyl sums over the ensemble; EmptyEnsemble if there are no points.
WeylReport equidistribution_test(const PeriodicEnsemble& e, int k_max, bool parallel = true);

/// Whether the character k is trivial on Fix(f^n), decided on the dual
/// lattice without enumerating points.
bool character_trivial(const TorusAutomorphism& f, unsigned n, const Frequency& k);

/// Fraction of nonzero k with |k|_inf <= k_max trivial on Fix(f^n).
double trivial_fraction(const TorusAutomorphism& f, unsigned n, int k_max);

}  // namespace kummerlab

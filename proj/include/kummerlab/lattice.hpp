#pragma once

#include "kummerlab/int_matrix.hpp"

#include <optional>

namespace kummerlab {

/// Integral lattice given by a symmetric Gram matrix.
class QuadraticLattice {
 public:
  QuadraticLattice() = default;
  /// Throws InvalidInput if `gram` is not symmetric.
  explicit QuadraticLattice(IntMatrix gram);

  std::size_t rank() const noexcept { return gram_.dim(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  BigInt determinant() const { return gram_.determinant(); }
  bool is_even() const;
  /// v^T G w
  BigInt pair(const std::vector<BigInt>& v, const std::vector<BigInt>& w) const;

 private:
  IntMatrix gram_;
};

struct Signature {
  int pos = 0;
  int neg = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Exact inertia by rational symmetric Gaussian reduction.
Signature signature(const QuadraticLattice& lattice);

/// m^T G m == G, exactly.
bool isometry_check(const IntMatrix& m, const QuadraticLattice& lattice);

/// U + (-E8): rank 10, even, unimodular, signature (1,9).
QuadraticLattice enriques_lattice();

/// E8 Cartan matrix (positive definite).
IntMatrix e8_cartan();

struct Rank2Options {
  long long search_bound = 10000;
  long long direct_pell_bound = 10000;
  int max_cf_steps = 200000;
  /// Upper limit on the completeness box for the -2 search.
  long long max_complete_bound = 100000000;
};

struct Rank2Analysis {
  bool represents_zero = false;
  bool represents_minus_two = false;
  bool aut_infinite = false;
  std::optional<double> lambda_psi;
  /// Generator of the orientation-preserving hyperbolic isometries, when found.
  std::optional<IntMatrix> fundamental_isometry;
  /// A witness vector with q(v) = -2, when one was found.
  std::optional<std::pair<BigInt, BigInt>> minus_two_witness;
  /// Largest |x| covered by the -2 search.
  long long searched_bound = 0;
  /// True when the search covered a box known to contain a representative
  /// of every orbit of vectors with q = -2.
  bool minus_two_complete = false;
};

/// Hyperbolic isometry with the smallest dilation factor > 1, for a rank-2
/// lattice of signature (1,1) that does not represent zero. Positive trace.
struct FundamentalIsometry {
  IntMatrix matrix;
  BigInt t;  // t^2 - D u^2 = 4 for the primitive form
  BigInt u;
  BigInt discriminant;
  double lambda = 0;
};

FundamentalIsometry fundamental_isometry(const QuadraticLattice& lattice, const Rank2Options& options = {});

Rank2Analysis rank2_analysis(const QuadraticLattice& lattice, const Rank2Options& options = {});

/// Some (x, y) with |x| <= bound and q(x, y) = value, if any (y unbounded,
/// solved exactly).
std::optional<std::pair<BigInt, BigInt>> find_representation(const QuadraticLattice& lattice, long long value,
                                                             long long bound);

}  // namespace kummerlab

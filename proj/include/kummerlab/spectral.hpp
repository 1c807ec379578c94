#pragma once

#include "kummerlab/int_matrix.hpp"
#include "kummerlab/lattice.hpp"
#include "kummerlab/polynomial.hpp"
#include "kummerlab/roots.hpp"

#include <string>
#include <vector>

namespace kummerlab {

enum class Classification { One, ReciprocalQuadratic, Salem, Other };

const char* to_string(Classification c);

inline constexpr double kUnitCircleTolerance = 1e-10;

/// det(t I - m), exact (division-free Berkowitz recursion).
IntPolynomial char_poly(const IntMatrix& m);

struct SpectralReport {
  IntPolynomial char_poly;
  double lambda_f = 1.0;
  long double lambda_f_ld = 1.0L;
  IntPolynomial min_poly;
  int min_poly_degree = 1;
  Classification classification = Classification::One;
  bool kummer_possible = true;
  double residual = 0.0;
};

/// Spectral radius of m with its minimal polynomial and classification.
/// NonInvertible if det m = 0.
SpectralReport dynamical_degree(const IntMatrix& m, double unit_tol = kUnitCircleTolerance);

/// Spectral data of a polynomial directly (same pipeline without the matrix).
SpectralReport polynomial_report(const IntPolynomial& p, double unit_tol = kUnitCircleTolerance);

Classification salem_classify(const IntPolynomial& p, double unit_tol = kUnitCircleTolerance);

/// Irreducible factor of p over Z (primitive, positive leading coefficient)
/// having `root` as a root. UnsupportedDegree beyond the search limits.
IntPolynomial minimal_factor(const IntPolynomial& p, ComplexLD root);

/// Orders n of the cyclotomic factors Phi_n of p, with multiplicity, and
/// the cofactor left after removing them.
struct CyclotomicFactorization {
  std::vector<unsigned> orders;
  IntPolynomial rest;
};
CyclotomicFactorization cyclotomic_factors(const IntPolynomial& p);

struct Splitting {
  IntPolynomial psi;
  IntPolynomial cyclotomic_part;
  std::vector<unsigned> cyclotomic_orders;
  /// Part of the cyclotomic_part that is not a product of Phi_n (flagged).
  IntPolynomial non_cyclotomic;
  bool all_cyclotomic = true;
};

/// char_poly(m) = Psi_f * C with Psi_f the irreducible factor of lambda_f.
Splitting nf_splitting(const IntMatrix& m, const QuadraticLattice& lattice, double unit_tol = kUnitCircleTolerance);

/// Verdict on the measure of maximal entropy implied by the degree of
/// lambda_f: degree >= 5 excludes Kummer examples.
std::string entropy_measure_verdict(const SpectralReport& r);

/// Lehmer's polynomial t^10 + t^9 - t^7 - t^6 - t^5 - t^4 - t^3 + t + 1.
IntPolynomial lehmer_polynomial();

/// Companion matrix with char_poly = p (p monic).
IntMatrix companion_matrix(const IntPolynomial& p);

}  // namespace kummerlab

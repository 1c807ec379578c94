#pragma once

#include "kummerlab/bigint.hpp"

#include <complex>
#include <string>
#include <vector>

namespace kummerlab {

/// Integer polynomial, coefficients stored constant term first.
/// The zero polynomial has an empty coefficient list and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial monomial(std::size_t degree, const BigInt& c = 1);
  /// t - r
  static IntPolynomial linear(const BigInt& r);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  const BigInt& operator[](std::size_t i) const { return c_[i]; }
  const BigInt& leading() const { return c_.back(); }

  BigInt content() const;
  IntPolynomial primitive_part() const;
  IntPolynomial derivative() const;
  /// Sign-normalized so the leading coefficient is positive.
  IntPolynomial normalized_sign() const;
  /// Coefficient list reversed equals itself (palindromic).
  bool is_palindromic() const;

  std::complex<long double> eval(std::complex<long double> z) const;
  long double eval(long double x) const;
  /// sum |c_i| |x|^i, the natural scale for relative residuals.
  long double abs_eval(long double x) const;

  std::string to_string(char var = 't') const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Exact division over Z. Returns true and writes the quotient when
/// `divisor` divides `p` with an integer quotient.
bool divide_exact(const IntPolynomial& p, const IntPolynomial& divisor, IntPolynomial* quotient);

/// Primitive gcd over Z[t] (content-free, positive leading coefficient).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p / gcd(p, p'), made primitive.
IntPolynomial square_free_part(const IntPolynomial& p);

/// n-th cyclotomic polynomial Phi_n (memoized, thread-safe).
const IntPolynomial& cyclotomic(unsigned n);

/// Euler's totient.
unsigned totient(unsigned n);

}  // namespace kummerlab

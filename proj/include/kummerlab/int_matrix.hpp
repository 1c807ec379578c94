#pragma once

#include "kummerlab/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace kummerlab {

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  /// Throws InvalidInput unless `rows` is square and nonempty.
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);
  static IntMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  IntMatrix transpose() const;
  IntMatrix pow(unsigned n) const;
  /// Exact determinant (fraction-free Bareiss elimination).
  BigInt determinant() const;
  /// Exact inverse; requires det = +-1.
  IntMatrix unimodular_inverse() const;
  BigInt trace() const;
  bool is_symmetric() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::vector<std::vector<BigInt>> rows() const;

 private:
  std::size_t dim_ = 0;
  std::vector<BigInt> a_;
};

/// Smith normal form U*A*V = D with U, V unimodular and D diagonal,
/// d_1 | d_2 | ... , d_i >= 0.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Kronecker product a (x) I_k, used for lattice-coordinate actions.
IntMatrix kron_identity(const IntMatrix& a, std::size_t k);

/// Induced action on the second exterior power, basis e_i^e_j (i<j) in
/// lexicographic order.
IntMatrix exterior_square(const IntMatrix& a);

}  // namespace kummerlab

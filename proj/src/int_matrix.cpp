#include "kummerlab/int_matrix.hpp"

#include "kummerlab/error.hpp"

#include <utility>

namespace kummerlab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : dim_(rows.size()), a_(rows.size() * rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error(ErrorCode::InvalidInput, "matrix must be square");
    std::size_t j = 0;
    for (long long v : row) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  if (rows.empty()) throw Error(ErrorCode::InvalidInput, "matrix must be nonempty");
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error(ErrorCode::InvalidInput, "matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::pow(unsigned n) const {
  IntMatrix result = identity(dim_);
  IntMatrix base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

BigInt IntMatrix::determinant() const {
  if (dim_ == 0) return 1;
  std::vector<BigInt> m = a_;
  const std::size_t n = dim_;
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * n + j]; };
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

IntMatrix IntMatrix::unimodular_inverse() const {
  // Gauss-Jordan over the rationals; exact integrality is checked at the end.
  const std::size_t n = dim_;
  std::vector<BigRational> m(n * 2 * n);
  auto at = [&](std::size_t i, std::size_t j) -> BigRational& { return m[i * 2 * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = BigRational((*this)(i, j));
    at(i, n + i) = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && at(piv, k) == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::NonInvertible, "singular matrix");
    if (piv != k)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(k, j), at(piv, j));
    BigRational p = at(k, k);
    for (std::size_t j = 0; j < 2 * n; ++j) at(k, j) /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || at(i, k) == 0) continue;
      BigRational f = at(i, k);
      for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) -= f * at(k, j);
    }
  }
  IntMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const BigRational& v = at(i, n + j);
      if (denominator(v) != 1) throw Error(ErrorCode::NonInvertible, "inverse is not integral");
      inv(i, j) = numerator(v);
    }
  return inv;
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  const std::size_t n = a.dim_;
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

std::vector<std::vector<BigInt>> IntMatrix::rows() const {
  std::vector<std::vector<BigInt>> r(dim_, std::vector<BigInt>(dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r[i][j] = (*this)(i, j);
  return r;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < m.dim(); ++k) std::swap(m(i, k), m(j, k));
}
void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < m.dim(); ++k) std::swap(m(k, i), m(k, j));
}
// row_i += f * row_j
void add_row(IntMatrix& m, std::size_t i, std::size_t j, const BigInt& f) {
  for (std::size_t k = 0; k < m.dim(); ++k) m(i, k) += f * m(j, k);
}
void add_col(IntMatrix& m, std::size_t i, std::size_t j, const BigInt& f) {
  for (std::size_t k = 0; k < m.dim(); ++k) m(k, i) += f * m(k, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t n = a.dim();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix v = IntMatrix::identity(n);

  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      // pivot: smallest nonzero |entry| in the trailing block
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (d(i, j) != 0 && (pi == n || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == n) return {u, d, v};  // trailing block is zero
      if (pi != k) {
        swap_rows(d, pi, k);
        swap_rows(u, pi, k);
      }
      if (pj != k) {
        swap_cols(d, pj, k);
        swap_cols(v, pj, k);
      }
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (d(i, k) == 0) continue;
        BigInt q = floor_div(d(i, k), d(k, k));
        add_row(d, i, k, -q);
        add_row(u, i, k, -q);
        if (d(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (d(k, j) == 0) continue;
        BigInt q = floor_div(d(k, j), d(k, k));
        add_col(d, j, k, -q);
        add_col(v, j, k, -q);
        if (d(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the trailing block by the pivot
      bool divides = true;
      for (std::size_t i = k + 1; i < n && divides; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (d(i, j) % d(k, k) != 0) {
            add_row(d, k, i, BigInt(1));
            add_row(u, k, i, BigInt(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(k, k) < 0) {
      for (std::size_t j = 0; j < n; ++j) {
        d(k, j) = -d(k, j);
        u(k, j) = -u(k, j);
      }
    }
  }
  return {u, d, v};
}

IntMatrix kron_identity(const IntMatrix& a, std::size_t k) {
  IntMatrix r(a.dim() * k);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t p = 0; p < k; ++p) r(i * k + p, j * k + p) = a(i, j);
  return r;
}

IntMatrix exterior_square(const IntMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) basis.emplace_back(i, j);
  IntMatrix r(basis.size());
  // (A e_k)^(A e_l) = sum_{i<j} (a_ik a_jl - a_il a_jk) e_i^e_j
  for (std::size_t c = 0; c < basis.size(); ++c) {
    auto [k, l] = basis[c];
    for (std::size_t row = 0; row < basis.size(); ++row) {
      auto [i, j] = basis[row];
      r(row, c) = a(i, k) * a(j, l) - a(i, l) * a(j, k);
    }
  }
  return r;
}

}  // namespace kummerlab

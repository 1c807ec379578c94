#include "kummerlab/lattice.hpp"

#include "kummerlab/error.hpp"

namespace kummerlab {

QuadraticLattice::QuadraticLattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (gram_.dim() == 0) throw Error(ErrorCode::InvalidInput, "lattice rank must be positive");
  if (!gram_.is_symmetric()) throw Error(ErrorCode::InvalidInput, "Gram matrix must be symmetric");
}

bool QuadraticLattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

BigInt QuadraticLattice::pair(const std::vector<BigInt>& v, const std::vector<BigInt>& w) const {
  if (v.size() != rank() || w.size() != rank()) throw Error(ErrorCode::DimensionMismatch, "vector length");
  BigInt s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) s += v[i] * gram_(i, j) * w[j];
  return s;
}

Signature signature(const QuadraticLattice& lattice) {
  const std::size_t n = lattice.rank();
  std::vector<BigRational> s(n * n);
  auto at = [&](std::size_t i, std::size_t j) -> BigRational& { return s[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) at(i, j) = BigRational(lattice.gram()(i, j));

  auto swap_sym = [&](std::size_t a, std::size_t b) {
    for (std::size_t k = 0; k < n; ++k) std::swap(at(a, k), at(b, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(at(k, a), at(k, b));
  };

  Signature sig;
  std::size_t k = 0;
  for (; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && at(piv, piv) == 0) ++piv;
    if (piv == n) {
      // No usable diagonal: e_i + e_j has norm 2 s_ij when s_ii = s_jj = 0.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (at(i, j) != 0) {
            for (std::size_t c = 0; c < n; ++c) at(i, c) += at(j, c);
            for (std::size_t r = 0; r < n; ++r) at(r, i) += at(r, j);
            piv = i;
            found = true;
          }
      if (!found) break;  // trailing block vanishes
    }
    if (piv != k) swap_sym(piv, k);
    const BigRational p = at(k, k);
    if (p > 0) ++sig.pos; else ++sig.neg;
    // Schur complement on the trailing block.
    for (std::size_t i = k + 1; i < n; ++i) {
      if (at(i, k) == 0) continue;
      BigRational f = at(i, k) / p;
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= f * at(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      at(i, k) = 0;
      at(k, i) = 0;
    }
  }
  sig.zero = static_cast<int>(n - k);
  return sig;
}

bool isometry_check(const IntMatrix& m, const QuadraticLattice& lattice) {
  if (m.dim() != lattice.rank()) throw Error(ErrorCode::DimensionMismatch, "isometry dimension");
  return m.transpose() * lattice.gram() * m == lattice.gram();
}

IntMatrix e8_cartan() {
  // Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
  IntMatrix c(8);
  for (std::size_t i = 0; i < 8; ++i) c(i, i) = 2;
  auto link = [&](std::size_t a, std::size_t b) {
    c(a - 1, b - 1) = -1;
    c(b - 1, a - 1) = -1;
  };
  link(1, 3);
  link(3, 4);
  link(4, 5);
  link(5, 6);
  link(6, 7);
  link(7, 8);
  link(2, 4);
  return c;
}

QuadraticLattice enriques_lattice() {
  IntMatrix g(10);
  g(0, 1) = 1;
  g(1, 0) = 1;
  IntMatrix e8 = e8_cartan();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) g(2 + i, 2 + j) = -e8(i, j);
  return QuadraticLattice(g);
}

}  // namespace kummerlab

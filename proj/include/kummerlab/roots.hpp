#pragma once

#include "kummerlab/polynomial.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace kummerlab {

using ComplexLD = std::complex<long double>;

/// All complex roots of a square-free polynomial by Aberth-Ehrlich
/// simultaneous iteration. Multiple roots converge slowly; callers pass
/// square_free_part(p).
std::vector<ComplexLD> polynomial_roots(const IntPolynomial& p);

/// Dominant eigenvalue of the companion matrix by power iteration, when it
/// is real and strictly dominant in modulus; nullopt otherwise.
std::optional<long double> dominant_root_power_iteration(const IntPolynomial& p, int max_iter = 20000);

/// Newton iteration on the exact polynomial starting from x.
long double newton_polish(const IntPolynomial& p, long double x, int iterations = 60);

/// |p(x)| / sum |c_i||x|^i
long double relative_residual(const IntPolynomial& p, long double x);

}  // namespace kummerlab

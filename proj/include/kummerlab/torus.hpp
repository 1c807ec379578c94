#pragma once

#include "kummerlab/int_matrix.hpp"
#include "kummerlab/spectral.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <string>

namespace kummerlab {

/// E = C / (Z + Z tau), Im tau > 0.
class TorusLattice {
 public:
  TorusLattice() = default;
  explicit TorusLattice(std::complex<double> tau);
  std::complex<double> tau() const noexcept { return tau_; }
  bool rectangular() const noexcept { return tau_.real() == 0.0; }

 private:
  std::complex<double> tau_{0.0, 1.0};
};

enum class Quotient { None, Kummer, EtaTau };
const char* to_string(Quotient q);
Quotient parse_quotient(const std::string& s);

/// Lattice coordinates (a1, b1, a2, b2) of (a1 + b1 tau, a2 + b2 tau), in [0,1).
using TorusPoint = std::array<double, 4>;

/// Exact point with common denominator; numerators kept in [0, den).
struct RationalTorusPoint {
  std::array<std::int64_t, 4> num{};
  std::int64_t den = 1;

  RationalTorusPoint reduced() const;
  TorusPoint to_point() const;
  /// "p/q" in lowest terms.
  std::string coord_string(int i) const;
  friend bool operator==(const RationalTorusPoint& a, const RationalTorusPoint& b);
  friend bool operator<(const RationalTorusPoint& a, const RationalTorusPoint& b);
};

RationalTorusPoint operator+(const RationalTorusPoint& a, const RationalTorusPoint& b);
RationalTorusPoint operator-(const RationalTorusPoint& a);

class TorusAutomorphism {
 public:
  /// Throws InvalidInput unless m is 2x2 with |det| = 1; UnsupportedTau
  /// for an eta_tau quotient on a lattice without the extra symmetry.
  explicit TorusAutomorphism(IntMatrix m, TorusLattice lattice = {}, Quotient quotient = Quotient::None);

  const IntMatrix& matrix() const noexcept { return m_; }
  const TorusLattice& lattice() const noexcept { return lattice_; }
  Quotient quotient() const noexcept { return quotient_; }
  long long entry(int i, int j) const { return e_[2 * i + j]; }

  TorusAutomorphism inverse() const;
  /// M (x) I_2 on (a1, b1, a2, b2).
  IntMatrix lattice_action() const;
  /// Action on H^2 = second exterior power of the lattice action.
  IntMatrix h2_action() const;

 private:
  IntMatrix m_;
  TorusLattice lattice_;
  Quotient quotient_;
  std::array<long long, 4> e_{};
};

TorusPoint reduce_mod1(TorusPoint p);
TorusPoint apply(const TorusAutomorphism& f, const TorusPoint& p);
RationalTorusPoint apply(const TorusAutomorphism& f, const RationalTorusPoint& p);
/// apply followed by the canonical projection of f's quotient tag.
TorusPoint apply_on_quotient(const TorusAutomorphism& f, const TorusPoint& p);

enum class LyapunovMethod { ExactEigen, QrOrbit, SaddleMultipliers };
const char* to_string(LyapunovMethod m);

struct LyapunovReport {
  double lambda_u = 0;
  double lambda_s = 0;
  LyapunovMethod method = LyapunovMethod::ExactEigen;
  double std_error = 0;
  /// Separate errors for the two exponents (std_error is their maximum).
  double std_error_u = 0;
  double std_error_s = 0;
  long long samples = 0;
};

/// NotHyperbolic if both eigenvalues of M have modulus 1.
LyapunovReport lyapunov_exact(const TorusAutomorphism& f);
/// Orthogonalization along an orbit of length n_steps (>= 100), 10 batch means.
LyapunovReport lyapunov_qr_orbit(const TorusAutomorphism& f, const TorusPoint& p0, long long n_steps);

/// Dynamical degree of the H^2 action, rho(M)^2.
SpectralReport h2_degree(const TorusAutomorphism& f);

/// Lexicographic minimum of p and -p.
TorusPoint kummer_project(const TorusPoint& p);
RationalTorusPoint kummer_project(const RationalTorusPoint& p);

/// Order of tau-multiplication: 4 for tau = i, 3 for tau = exp(2 pi i/3);
/// UnsupportedTau otherwise.
int eta_tau_order(const TorusLattice& lattice);
/// Matrix of multiplication by tau on (a, b) of one factor.
IntMatrix eta_tau_matrix(const TorusLattice& lattice);
TorusPoint eta_tau_apply(const TorusPoint& p, const TorusLattice& lattice);
RationalTorusPoint eta_tau_apply(const RationalTorusPoint& p, const TorusLattice& lattice);
TorusPoint eta_tau_project(const TorusPoint& p, const TorusLattice& lattice);
RationalTorusPoint eta_tau_project(const RationalTorusPoint& p, const TorusLattice& lattice);

/// Flat distance on E x E: per factor, minimum of |z + m + n tau| over
/// lattice translates, combined in the Euclidean norm.
double torus_distance(const TorusPoint& p, const TorusPoint& q, const TorusLattice& lattice);
double kummer_distance(const TorusPoint& p, const TorusPoint& q, const TorusLattice& lattice);
double eta_tau_distance(const TorusPoint& p, const TorusPoint& q, const TorusLattice& lattice);

/// Distance matching f's quotient tag.
double quotient_distance(const TorusAutomorphism& f, const TorusPoint& p, const TorusPoint& q);

}  // namespace kummerlab

#include "kummerlab/error.hpp"
#include "kummerlab/lattice.hpp"

#include <cmath>

namespace kummerlab {

namespace {

struct BinaryForm {
  BigInt a, b, c;  // q(x,y) = a x^2 + 2 b x y + c y^2
};

BinaryForm form_of(const QuadraticLattice& lattice) {
  if (lattice.rank() != 2) throw Error(ErrorCode::WrongRank, "rank-2 lattice required");
  return {lattice.gram()(0, 0), lattice.gram()(0, 1), lattice.gram()(1, 1)};
}

void require_hyperbolic_plane(const QuadraticLattice& lattice) {
  Signature s = signature(lattice);
  if (s.pos != 1 || s.neg != 1) throw Error(ErrorCode::WrongSignature, "signature (1,1) required");
}

// Continued fraction of (P + sqrt(N)) / Q, N not a square, Q | N - P^2.
class QuadraticCf {
 public:
  QuadraticCf(BigInt p, BigInt q, BigInt n) : p_(std::move(p)), q_(std::move(q)), n_(std::move(n)), s_(isqrt(n_)) {}

  BigInt next() {
    BigInt a = q_ > 0 ? floor_div(p_ + s_, q_) : floor_div(p_ + s_ + 1, q_);
    p_ = a * q_ - p_;
    q_ = (n_ - p_ * p_) / q_;
    return a;
  }

 private:
  BigInt p_, q_, n_, s_;
};

}  // namespace

std::optional<std::pair<BigInt, BigInt>> find_representation(const QuadraticLattice& lattice, long long value,
                                                             long long bound) {
  const BinaryForm f = form_of(lattice);
  const BigInt n = value;
  const BigInt delta = f.b * f.b - f.a * f.c;
  auto try_x = [&](const BigInt& x) -> std::optional<std::pair<BigInt, BigInt>> {
    if (f.c != 0) {
      // c y^2 + 2 b x y + (a x^2 - n) = 0, quarter discriminant x^2 delta + c n
      BigInt disc = x * x * delta + f.c * n;
      if (disc < 0 || !is_perfect_square(disc)) return std::nullopt;
      BigInt s = isqrt(disc);
      for (int sign : {1, -1}) {
        BigInt num = -f.b * x + sign * s;
        if (num % f.c == 0) return std::make_pair(x, num / f.c);
      }
      return std::nullopt;
    }
    // 2 b x y = n - a x^2
    BigInt rhs = n - f.a * x * x;
    BigInt den = 2 * f.b * x;
    if (den == 0) {
      if (rhs == 0) return std::make_pair(x, BigInt(0));  // any y when b x = 0; y = 0 is a witness
      return std::nullopt;
    }
    if (rhs % den == 0) return std::make_pair(x, rhs / den);
    return std::nullopt;
  };
  for (long long k = 0; k <= bound; ++k) {
    if (auto r = try_x(BigInt(k))) return r;
    if (k > 0)
      if (auto r = try_x(BigInt(-k))) return r;
  }
  return std::nullopt;
}

FundamentalIsometry fundamental_isometry(const QuadraticLattice& lattice, const Rank2Options& options) {
  const BinaryForm f = form_of(lattice);
  require_hyperbolic_plane(lattice);
  if (is_perfect_square(f.b * f.b - f.a * f.c))
    throw Error(ErrorCode::Precondition, "form represents zero; isometry group is finite");

  // Primitive form A x^2 + B x y + C y^2.
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(f.a, 2 * f.b), f.c);
  const BigInt A = f.a / g, B = 2 * f.b / g, C = f.c / g;
  const BigInt D = B * B - 4 * A * C;

  BigInt t = 0, u = 0;
  for (long long k = 1; k <= options.direct_pell_bound; ++k) {
    BigInt s = D * k * k + 4;
    if (is_perfect_square(s)) {
      t = isqrt(s);
      u = k;
      break;
    }
  }
  if (u == 0) {
    // Continued-fraction resolution of the Pell-Fermat equation.
    const bool even = (D % 4 == 0);
    const BigInt d = even ? D / 4 : D;
    const BigInt c0 = (D - 1) / 4;
    QuadraticCf cf = even ? QuadraticCf(0, 1, d) : QuadraticCf(1, 2, D);
    BigInt p2 = 0, p1 = 1, q2 = 1, q1 = 0;
    bool found = false;
    for (int step = 0; step < options.max_cf_steps; ++step) {
      BigInt a = cf.next();
      BigInt p = a * p1 + p2, q = a * q1 + q2;
      p2 = p1;
      p1 = p;
      q2 = q1;
      q1 = q;
      BigInt norm = even ? BigInt(p * p - d * q * q) : BigInt(p * p - p * q - c0 * q * q);
      if (norm == 1) {
        t = even ? BigInt(2 * p) : BigInt(2 * p - q);
        u = q;
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::SearchBoundExceeded, "Pell resolution exceeded the continued-fraction cap");
  }

  IntMatrix m(2);
  m(0, 0) = (t - B * u) / 2;
  m(0, 1) = -C * u;
  m(1, 0) = A * u;
  m(1, 1) = (t + B * u) / 2;
  if (!isometry_check(m, lattice)) throw Error(ErrorCode::InternalInvariant, "automorph is not an isometry");

  FundamentalIsometry out;
  out.matrix = m;
  out.t = t;
  out.u = u;
  out.discriminant = D;
  const long double sd = std::sqrt(to_long_double(D));
  out.lambda = static_cast<double>((to_long_double(t) + to_long_double(u) * sd) / 2.0L);
  return out;
}

Rank2Analysis rank2_analysis(const QuadraticLattice& lattice, const Rank2Options& options) {
  const BinaryForm f = form_of(lattice);
  require_hyperbolic_plane(lattice);

  Rank2Analysis r;
  r.represents_zero = is_perfect_square(f.b * f.b - f.a * f.c);

  long long bound = options.search_bound;
  std::optional<FundamentalIsometry> psi;
  if (!r.represents_zero) {
    psi = fundamental_isometry(lattice, options);
    // Box containing a representative of every Iso-orbit of vectors with
    // q(v) = -2: write v = alpha e+ + beta e- in unit eigenvectors of psi.
    const long double lam = psi->lambda;
    const long double m00 = to_long_double(psi->matrix(0, 0)), m01 = to_long_double(psi->matrix(0, 1));
    const long double m10 = to_long_double(psi->matrix(1, 0)), m11 = to_long_double(psi->matrix(1, 1));
    auto eigvec = [&](long double mu) {
      long double x = m01, y = mu - m00;
      if (std::fabs(x) + std::fabs(y) < 1e-300L) {
        x = mu - m11;
        y = m10;
      }
      long double nrm = std::hypot(x, y);
      return std::pair<long double, long double>(x / nrm, y / nrm);
    };
    auto [ex, ey] = eigvec(lam);
    auto [fx, fy] = eigvec(1.0L / lam);
    const long double a = to_long_double(f.a), b = to_long_double(f.b), c = to_long_double(f.c);
    const long double cross = std::fabs(a * ex * fx + b * (ex * fy + ey * fx) + c * ey * fy);
    if (std::isfinite(lam) && cross > 0) {
      const long double box = (lam + 1.0L) * std::sqrt(2.0L / (2.0L * cross)) * 1.001L + 1.0L;
      if (box <= static_cast<long double>(options.max_complete_bound)) {
        bound = std::max(bound, static_cast<long long>(std::ceil(box)));
        r.minus_two_complete = true;
      }
    }
  }
  r.searched_bound = bound;
  r.minus_two_witness = find_representation(lattice, -2, bound);
  r.represents_minus_two = r.minus_two_witness.has_value();
  if (r.represents_minus_two) r.minus_two_complete = true;

  r.aut_infinite = !r.represents_zero && !r.represents_minus_two;
  if (r.aut_infinite) {
    r.lambda_psi = psi->lambda;
    r.fundamental_isometry = psi->matrix;
  }
  return r;
}

}  // namespace kummerlab

#include "kummerlab/spectral.hpp"

#include "kummerlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace kummerlab {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::One: return "ONE";
    case Classification::ReciprocalQuadratic: return "RECIPROCAL_QUADRATIC";
    case Classification::Salem: return "SALEM";
    case Classification::Other: return "OTHER";
  }
  return "?";
}

IntPolynomial char_poly(const IntMatrix& a) {
  const std::size_t n = a.dim();
  // Berkowitz: coefficient vectors are kept highest degree first.
  std::vector<BigInt> vec{1};
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<BigInt> col;
    col.reserve(r + 2);
    col.emplace_back(1);
    col.emplace_back(-a(r, r));
    // w = A_{r-1}^k S, starting from S = column r above the diagonal
    std::vector<BigInt> w(r);
    for (std::size_t i = 0; i < r; ++i) w[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      BigInt dot = 0;
      for (std::size_t j = 0; j < r; ++j) dot += a(r, j) * w[j];
      col.push_back(-dot);
      if (k + 1 < r) {
        std::vector<BigInt> next(r);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) next[i] += a(i, j) * w[j];
        w = std::move(next);
      }
    }
    std::vector<BigInt> out(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) out[i] += col[i - j] * vec[j];
    vec = std::move(out);
  }
  std::reverse(vec.begin(), vec.end());
  return IntPolynomial(std::move(vec));
}

IntPolynomial lehmer_polynomial() { return IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}; }

IntMatrix companion_matrix(const IntPolynomial& p) {
  if (p.degree() < 1 || p.leading() != 1) throw Error(ErrorCode::InvalidInput, "companion matrix needs a monic polynomial");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  IntMatrix c(n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i + 1, i) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p[i];
  return c;
}

CyclotomicFactorization cyclotomic_factors(const IntPolynomial& p) {
  CyclotomicFactorization out;
  IntPolynomial rest = p;
  if (rest.degree() > 105) throw Error(ErrorCode::UnsupportedDegree, "degree above 105");
  const unsigned limit = static_cast<unsigned>(2 * std::max(1, rest.degree()) * std::max(1, rest.degree()) + 2);
  for (unsigned n = 1; n <= limit && rest.degree() > 0; ++n) {
    if (static_cast<int>(totient(n)) > rest.degree()) continue;
    const ComplexLD zeta = std::polar(1.0L, 2 * std::numbers::pi_v<long double> / n);
    while (rest.degree() > 0) {
      long double scale = rest.abs_eval(1.0L);
      if (std::abs(rest.eval(zeta)) > 1e-6L * scale) break;
      IntPolynomial q;
      if (!divide_exact(rest, cyclotomic(n), &q)) break;
      out.orders.push_back(n);
      rest = q;
    }
  }
  out.rest = rest;
  return out;
}

namespace {

struct RootClass {
  std::vector<ComplexLD> roots;  // one real root or a conjugate pair
};

std::vector<RootClass> conjugation_classes(const std::vector<ComplexLD>& roots) {
  std::vector<RootClass> classes;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const ComplexLD z = roots[i];
    const long double tol = 1e-9L * std::max(1.0L, std::abs(z));
    if (std::fabs(z.imag()) <= tol) {
      classes.push_back({{ComplexLD(z.real(), 0)}});
      continue;
    }
    std::size_t best = roots.size();
    long double best_d = 0;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (used[j]) continue;
      long double d = std::abs(roots[j] - std::conj(z));
      if (best == roots.size() || d < best_d) {
        best = j;
        best_d = d;
      }
    }
    if (best == roots.size()) throw Error(ErrorCode::InternalInvariant, "unpaired complex root");
    used[best] = true;
    classes.push_back({{z, std::conj(z)}});
  }
  return classes;
}

std::vector<BigInt> small_divisors(const BigInt& n) {
  BigInt m = abs(n);
  std::vector<BigInt> d;
  if (m > 1000000) return {1, m};
  for (BigInt k = 1; k <= m; ++k)
    if (m % k == 0) d.push_back(k);
  return d;
}

}  // namespace

IntPolynomial minimal_factor(const IntPolynomial& p, ComplexLD root) {
  if (p.degree() < 1) throw Error(ErrorCode::InvalidInput, "constant polynomial has no roots");
  if (p.degree() > 105) throw Error(ErrorCode::UnsupportedDegree, "degree above 105");
  IntPolynomial q = square_free_part(p);

  // Cyclotomic factors first.
  CyclotomicFactorization cyc = cyclotomic_factors(q);
  for (unsigned n : cyc.orders) {
    const IntPolynomial& phi = cyclotomic(n);
    if (std::abs(phi.eval(root)) <= 1e-8L * phi.abs_eval(std::abs(root))) return phi;
  }
  IntPolynomial rest = cyc.rest.primitive_part();
  if (rest.degree() < 1) throw Error(ErrorCode::InvalidInput, "root is not a root of the polynomial");
  if (rest.degree() == 1) return rest;

  std::vector<ComplexLD> roots = polynomial_roots(rest);
  std::vector<RootClass> classes = conjugation_classes(roots);
  std::size_t target = 0;
  long double best = -1;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (const auto& z : classes[i].roots) {
      long double d = std::abs(z - root);
      if (best < 0 || d < best) {
        best = d;
        target = i;
      }
    }
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (i != target) others.push_back(i);
  if (others.size() > 20) throw Error(ErrorCode::UnsupportedDegree, "too many conjugation classes for factor search");

  const std::vector<BigInt> leads = small_divisors(rest.leading());
  auto try_subset = [&](const std::vector<std::size_t>& pick, IntPolynomial* out) {
    std::vector<ComplexLD> c{1.0L};  // monic product, constant term first
    auto mul_root = [&](ComplexLD z) {
      std::vector<ComplexLD> next(c.size() + 1);
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= z * c[i];
      }
      c = std::move(next);
    };
    for (const auto& z : classes[target].roots) mul_root(z);
    for (std::size_t k : pick)
      for (const auto& z : classes[k].roots) mul_root(z);
    for (const BigInt& lead : leads) {
      const long double l = to_long_double(lead);
      std::vector<BigInt> coeffs(c.size());
      bool ok = true;
      for (std::size_t i = 0; i < c.size(); ++i) {
        long double v = c[i].real() * l;
        long double r = std::nearbyint(v);
        if (std::fabs(v - r) > 1e-5L + 1e-12L * std::fabs(v)) {
          ok = false;
          break;
        }
        coeffs[i] = BigInt(static_cast<long long>(r));
      }
      if (!ok) continue;
      IntPolynomial cand(std::move(coeffs));
      if (divide_exact(rest, cand, nullptr)) {
        *out = cand.primitive_part();
        return true;
      }
    }
    return false;
  };

  // Subsets by increasing size; the first divisor found is irreducible.
  const std::size_t k_total = others.size();
  for (std::size_t size = 0; size <= k_total; ++size) {
    std::vector<bool> mask(k_total, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(size), true);
    do {
      std::vector<std::size_t> pick;
      for (std::size_t i = 0; i < k_total; ++i)
        if (mask[i]) pick.push_back(others[i]);
      IntPolynomial f;
      if (try_subset(pick, &f)) return f;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  throw Error(ErrorCode::InternalInvariant, "no integer factor found for root");
}

SpectralReport polynomial_report(const IntPolynomial& p, double unit_tol) {
  if (p.degree() < 1) throw Error(ErrorCode::InvalidInput, "polynomial must be nonconstant");
  if (p.degree() > 105) throw Error(ErrorCode::UnsupportedDegree, "degree above 105");
  SpectralReport r;
  r.char_poly = p;
  IntPolynomial q = square_free_part(p);
  std::vector<ComplexLD> roots = polynomial_roots(q);

  const long double rho = std::abs(roots.front());
  // Among the roots of maximal modulus prefer a positive real one.
  ComplexLD dominant = roots.front();
  for (const auto& z : roots) {
    if (std::fabs(std::abs(z) - rho) > 1e-12L * rho) break;
    if (z.real() > 0 && std::fabs(z.imag()) <= 1e-12L * rho) {
      dominant = z;
      break;
    }
  }
  if (!(dominant.real() > 0 && std::fabs(dominant.imag()) <= 1e-12L * rho)) {
    // A negative real root of maximal modulus: the spectral radius is a
    // root of p(-t), which is classified instead.
    for (const auto& z : roots) {
      if (std::fabs(std::abs(z) - rho) > 1e-12L * rho) break;
      if (z.real() < 0 && std::fabs(z.imag()) <= 1e-12L * rho && rho > 1.0L + unit_tol) {
        std::vector<BigInt> c = p.coeffs();
        for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
        SpectralReport r2 = polynomial_report(IntPolynomial(c).normalized_sign(), unit_tol);
        r2.char_poly = p;
        return r2;
      }
    }
  }
  bool all_unit = true;
  for (const auto& z : roots)
    if (std::fabs(std::abs(z) - 1.0L) > unit_tol) all_unit = false;

  if (all_unit) {
    r.lambda_f_ld = 1.0L;
    r.lambda_f = 1.0;
    r.min_poly = IntPolynomial::linear(1);
    r.min_poly_degree = 1;
    r.classification = Classification::One;
    r.kummer_possible = true;
    r.residual = static_cast<double>(relative_residual(p, 1.0L));
    return r;
  }

  const bool dominant_real = std::fabs(dominant.imag()) <= 1e-12L * rho && dominant.real() > 0;
  long double lambda = rho;
  if (dominant_real) {
    lambda = dominant.real();
    // Power iteration on the companion matrix, when it converges, is the
    // primary dominant-root route; Aberth is the census fallback.
    if (auto pw = dominant_root_power_iteration(q)) {
      if (std::fabs(*pw - lambda) <= 1e-8L * lambda) lambda = *pw;
    }
    lambda = newton_polish(q, lambda);
  }
  r.lambda_f_ld = lambda;
  r.lambda_f = static_cast<double>(lambda);
  r.residual = static_cast<double>(dominant_real ? relative_residual(p, lambda) : std::abs(p.eval(dominant)) / p.abs_eval(rho));

  r.min_poly = minimal_factor(q, dominant_real ? ComplexLD(lambda, 0) : dominant);
  r.min_poly_degree = r.min_poly.degree();
  r.kummer_possible = r.min_poly_degree <= 4;

  r.classification = Classification::Other;
  if (dominant_real && lambda > 1.0L + unit_tol) {
    if (r.min_poly_degree == 2 && r.min_poly.is_palindromic()) {
      r.classification = Classification::ReciprocalQuadratic;
    } else if (r.min_poly_degree >= 4) {
      const IntPolynomial sq = r.min_poly * r.min_poly;
      const bool simple = !divide_exact(p.primitive_part(), sq, nullptr);
      const long double inv = 1.0L / lambda;
      bool has_inverse = false, rest_on_circle = true;
      for (const auto& z : roots) {
        if (std::abs(z - ComplexLD(lambda, 0)) <= 1e-9L * lambda) continue;
        if (std::abs(z - ComplexLD(inv, 0)) <= 1e-9L) {
          has_inverse = true;
          continue;
        }
        if (std::fabs(std::abs(z) - 1.0L) > unit_tol) rest_on_circle = false;
      }
      if (simple && has_inverse && rest_on_circle) r.classification = Classification::Salem;
    }
  }
  return r;
}

Classification salem_classify(const IntPolynomial& p, double unit_tol) {
  return polynomial_report(p, unit_tol).classification;
}

SpectralReport dynamical_degree(const IntMatrix& m, double unit_tol) {
  if (m.determinant() == 0) throw Error(ErrorCode::NonInvertible, "det = 0");
  return polynomial_report(char_poly(m), unit_tol);
}

Splitting nf_splitting(const IntMatrix& m, const QuadraticLattice& lattice, double unit_tol) {
  if (!isometry_check(m, lattice)) throw Error(ErrorCode::NotIsometry, "m^T G m != G");
  SpectralReport r = dynamical_degree(m, unit_tol);
  if (r.lambda_f_ld <= 1.0L + unit_tol) throw Error(ErrorCode::Precondition, "dynamical degree must exceed 1");
  Splitting s;
  s.psi = r.min_poly;
  IntPolynomial c;
  if (!divide_exact(r.char_poly.normalized_sign(), s.psi, &c))
    throw Error(ErrorCode::InternalInvariant, "minimal factor does not divide char poly");
  s.cyclotomic_part = c;
  if (c.degree() >= 1) {
    for (const auto& z : polynomial_roots(square_free_part(c)))
      if (std::fabs(std::abs(z) - 1.0L) > unit_tol)
        throw Error(ErrorCode::SplitViolation, "complementary factor has a root off the unit circle");
  }
  CyclotomicFactorization cf = cyclotomic_factors(c);
  s.cyclotomic_orders = cf.orders;
  s.non_cyclotomic = cf.rest;
  s.all_cyclotomic = cf.rest.degree() <= 0;
  return s;
}

std::string entropy_measure_verdict(const SpectralReport& r) {
  if (r.classification == Classification::One) return "zero entropy";
  if (!r.kummer_possible) return "\xCE\xBC_f singular";
  return "Kummer example not excluded";
}

}  // namespace kummerlab

#include "kummerlab/polynomial.hpp"

#include "kummerlab/error.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace kummerlab {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  for (long long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, const BigInt& c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(const BigInt& r) { return IntPolynomial(std::vector<BigInt>{-r, 1}); }

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : c_) g = boost::multiprecision::gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> v = c_;
  for (auto& c : v) c /= g;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long long>(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::normalized_sign() const {
  if (is_zero() || leading() > 0) return *this;
  std::vector<BigInt> v = c_;
  for (auto& c : v) c = -c;
  return IntPolynomial(std::move(v));
}

bool IntPolynomial::is_palindromic() const {
  for (std::size_t i = 0, j = c_.size(); i < c_.size(); ++i) {
    if (c_[i] != c_[j - 1 - i]) return false;
  }
  return true;
}

std::complex<long double> IntPolynomial::eval(std::complex<long double> z) const {
  std::complex<long double> acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + to_long_double(c_[i]);
  return acc;
}

long double IntPolynomial::eval(long double x) const {
  long double acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + to_long_double(c_[i]);
  return acc;
}

long double IntPolynomial::abs_eval(long double x) const {
  long double acc = 0;
  const long double ax = std::fabs(x);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * ax + std::fabs(to_long_double(c_[i]));
  return acc;
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(v));
}

bool divide_exact(const IntPolynomial& p, const IntPolynomial& divisor, IntPolynomial* quotient) {
  if (divisor.is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero polynomial");
  if (p.is_zero()) {
    if (quotient) *quotient = {};
    return true;
  }
  if (p.degree() < divisor.degree()) return false;
  std::vector<BigInt> r = p.coeffs();
  const auto& d = divisor.coeffs();
  const std::size_t dn = d.size() - 1;
  std::vector<BigInt> q(r.size() - dn);
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt& top = r[k + dn];
    if (top % d[dn] != 0) return false;
    BigInt f = top / d[dn];
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) r[k + j] -= f * d[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (r[i] != 0) return false;
  if (quotient) *quotient = IntPolynomial(std::move(q));
  return true;
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> r = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t dn = d.size() - 1;
  while (r.size() > dn && !r.empty()) {
    if (r.back() == 0) {
      r.pop_back();
      continue;
    }
    const BigInt top = r.back();
    const std::size_t shift = r.size() - 1 - dn;
    for (auto& c : r) c *= d[dn];
    for (std::size_t j = 0; j <= dn; ++j) r[shift + j] -= top * d[j];
    r.pop_back();
  }
  return IntPolynomial(std::move(r));
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y);
    x = y;
    y = r.primitive_part();
  }
  return x.primitive_part();
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.primitive_part();
  IntPolynomial g = gcd(p, p.derivative());
  IntPolynomial q;
  IntPolynomial pp = p.primitive_part();
  if (!divide_exact(pp, g, &q)) throw Error(ErrorCode::InternalInvariant, "gcd does not divide");
  return q.primitive_part();
}

unsigned totient(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const IntPolynomial& cyclotomic(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, IntPolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  if (n == 0) throw Error(ErrorCode::InvalidInput, "cyclotomic index must be positive");
  // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d
  IntPolynomial p = IntPolynomial::monomial(n) - IntPolynomial{1};
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    IntPolynomial q;
    if (!divide_exact(p, cyclotomic(d), &q)) throw Error(ErrorCode::InternalInvariant, "cyclotomic division");
    p = q;
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n, p).first->second;
}

}  // namespace kummerlab

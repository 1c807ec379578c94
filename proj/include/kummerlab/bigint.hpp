#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace kummerlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline long double to_long_double(const BigInt& v) { return v.convert_to<long double>(); }

inline bool fits_int64(const BigInt& v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

// Floor division and nonnegative remainder.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt floor_mod(const BigInt& a, const BigInt& b) { return a - b * floor_div(a, b); }

/// Largest s with s*s <= n (n >= 0).
inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt s = isqrt(n);
  return s * s == n;
}

}  // namespace kummerlab

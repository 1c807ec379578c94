#pragma once

#include <array>
#include <complex>

namespace kummerlab {

/// Forward-mode dual number with N directional derivatives.
template <class T, int N>
struct Dual {
  T v{};
  std::array<T, N> d{};

  Dual() = default;
  Dual(const T& value) : v(value) {}  // NOLINT: constants promote implicitly
  static Dual variable(const T& value, int i) {
    Dual x(value);
    x.d[i] = T(1);
    return x;
  }
};

template <class T, int N>
Dual<T, N> operator+(const Dual<T, N>& a, const Dual<T, N>& b) {
  Dual<T, N> r(a.v + b.v);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}
template <class T, int N>
Dual<T, N> operator-(const Dual<T, N>& a, const Dual<T, N>& b) {
  Dual<T, N> r(a.v - b.v);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] - b.d[i];
  return r;
}
template <class T, int N>
Dual<T, N> operator-(const Dual<T, N>& a) {
  Dual<T, N> r(-a.v);
  for (int i = 0; i < N; ++i) r.d[i] = -a.d[i];
  return r;
}
template <class T, int N>
Dual<T, N> operator*(const Dual<T, N>& a, const Dual<T, N>& b) {
  Dual<T, N> r(a.v * b.v);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return r;
}
template <class T, int N>
Dual<T, N> operator/(const Dual<T, N>& a, const Dual<T, N>& b) {
  const T inv = T(1) / b.v;
  Dual<T, N> r(a.v * inv);
  for (int i = 0; i < N; ++i) r.d[i] = (a.d[i] - r.v * b.d[i]) * inv;
  return r;
}

template <class T, int N>
Dual<T, N> operator*(const Dual<T, N>& a, const T& s) {
  Dual<T, N> r(a.v * s);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * s;
  return r;
}
template <class T, int N>
Dual<T, N> operator*(const T& s, const Dual<T, N>& a) {
  return a * s;
}
template <class T, int N>
Dual<T, N> operator+(const Dual<T, N>& a, const T& s) {
  Dual<T, N> r = a;
  r.v += s;
  return r;
}
template <class T, int N>
Dual<T, N> operator-(const Dual<T, N>& a, const T& s) {
  Dual<T, N> r = a;
  r.v -= s;
  return r;
}

template <class T, int N>
Dual<T, N>& operator+=(Dual<T, N>& a, const Dual<T, N>& b) {
  return a = a + b;
}
template <class T, int N>
Dual<T, N>& operator-=(Dual<T, N>& a, const Dual<T, N>& b) {
  return a = a - b;
}

// Primal part, uniform over plain and dual scalars.
template <class T>
const T& primal(const T& x) {
  return x;
}
template <class T, int N>
const T& primal(const Dual<T, N>& x) {
  return x.v;
}

}  // namespace kummerlab

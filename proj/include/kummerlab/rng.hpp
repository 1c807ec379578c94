#pragma once

#include <complex>
#include <cstdint>

namespace kummerlab {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Random stream keyed by (seed, index). Tasks draw from their own stream,
/// so results never depend on how tasks are spread over workers.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    std::uint64_t t = index ^ 0xD1B54A32D192ED03ULL;
    state_ = a ^ splitmix64(t);
  }

  std::uint64_t next() { return splitmix64(state_); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform on the closed unit disk (rejection).
  std::complex<double> disk() {
    for (;;) {
      double x = uniform(-1.0, 1.0), y = uniform(-1.0, 1.0);
      if (x * x + y * y <= 1.0) return {x, y};
    }
  }

  /// Standard complex Gaussian-ish point: used only as a generic direction.
  std::complex<double> cnormal() {
    return {uniform(-1.0, 1.0) + uniform(-1.0, 1.0), uniform(-1.0, 1.0) + uniform(-1.0, 1.0)};
  }

 private:
  std::uint64_t state_;
};

}  // namespace kummerlab

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace sgr {

// Deterministic random source.  mt19937_64 output is fully specified by the
// standard, and the mappings below avoid std::*_distribution (whose streams
// are implementation defined), so identical seeds give identical values on
// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform on {lo, ..., hi} via rejection, bias-free.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  // Uniform on the closed complex unit disc (rejection from the square).
  std::complex<double> unit_disc() {
    for (;;) {
      const double re = uniform(-1.0, 1.0);
      const double im = uniform(-1.0, 1.0);
      if (re * re + im * im <= 1.0) return {re, im};
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace sgr

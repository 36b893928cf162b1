#include "sgr/fft.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "sgr/errors.hpp"

namespace sgr {

namespace {

using cplx = std::complex<double>;

void fft_pow2(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const cplx wl = std::polar(1.0, ang);
    for (std::size_t i = 0; i < n; i += len) {
      cplx w = 1.0;
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

// Bluestein: rt = (r^2 + t^2 - (r-t)^2)/2 turns the DFT into a linear
// convolution with the chirp w_t = e^{sign i pi t^2 / N}, which is evaluated
// through power-of-two FFTs.
void fft_bluestein(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  std::size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;

  std::vector<cplx> chirp(n);
  for (std::size_t t = 0; t < n; ++t) {
    // t^2 mod 2N keeps the phase argument small and exact.
    const std::size_t t2 = (t * t) % (2 * n);
    chirp[t] = std::polar(
        1.0, sign * std::numbers::pi * static_cast<double>(t2) /
                 static_cast<double>(n));
  }

  std::vector<cplx> x(m, 0.0), y(m, 0.0);
  for (std::size_t t = 0; t < n; ++t) x[t] = a[t] * chirp[t];
  y[0] = std::conj(chirp[0]);
  for (std::size_t t = 1; t < n; ++t)
    y[t] = y[m - t] = std::conj(chirp[t]);

  fft_pow2(x, -1);
  fft_pow2(y, -1);
  for (std::size_t i = 0; i < m; ++i) x[i] *= y[i];
  fft_pow2(x, +1);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t r = 0; r < n; ++r) a[r] = x[r] * chirp[r] * scale;
}

}  // namespace

void dft_inplace(std::vector<cplx>& a, int sign) {
  require(sign == 1 || sign == -1, errc::invalid_params, "DFT sign must be +-1");
  const std::size_t n = a.size();
  if (n <= 1) return;
  if (std::has_single_bit(n)) {
    fft_pow2(a, sign);
  } else {
    fft_bluestein(a, sign);
  }
}

std::vector<cplx> dft_naive(const std::vector<cplx>& a, int sign) {
  require(sign == 1 || sign == -1, errc::invalid_params, "DFT sign must be +-1");
  const std::size_t n = a.size();
  std::vector<cplx> out(n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    cplx acc = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      const double ang = sign * 2.0 * std::numbers::pi *
                         static_cast<double>(r) * static_cast<double>(t) /
                         static_cast<double>(n);
      acc += a[t] * std::polar(1.0, ang);
    }
    out[r] = acc;
  }
  return out;
}

}  // namespace sgr

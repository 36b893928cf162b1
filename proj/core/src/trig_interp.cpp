#include "sgr/trig_interp.hpp"

#include <cmath>
#include <numbers>

namespace sgr {

std::complex<double> Coeffs1D::evaluate(double t) const {
  std::complex<double> v = 0.0;
  for (const auto& [freq, c] : c_)
    v += c * std::polar(1.0, static_cast<double>(freq) * t);
  return v;
}

std::vector<double> interp_nodes(int m) {
  require(m >= 0, errc::invalid_params, "interpolation order must be >= 0");
  const int n = 2 * m + 1;
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l)
    t[static_cast<std::size_t>(l)] = 2.0 * std::numbers::pi * l / n;
  return t;
}

double dirichlet(int m, double t) {
  require(m >= 0, errc::invalid_params, "interpolation order must be >= 0");
  const double s = std::sin(0.5 * t);
  if (std::abs(s) < 1e-9) {
    // Removable singularity at t = 0 mod 2 pi: fall back to the plain sum,
    // which is well conditioned there.
    double v = 1.0;
    for (int k = 1; k <= m; ++k) v += 2.0 * std::cos(k * t);
    return v;
  }
  return std::sin((m + 0.5) * t) / s;
}

int centered_residue(int freq, int m) {
  const int n = 2 * m + 1;
  int r = freq % n;
  if (r > m) r -= n;
  if (r < -m) r += n;
  return r;
}

Coeffs1D interpolate_samples(int m,
                             const std::vector<std::complex<double>>& samples) {
  require(m >= 0, errc::invalid_params, "interpolation order must be >= 0");
  require(m <= 2047, errc::too_large,
          "direct DFT interpolation supports m <= 2047");
  const int n = 2 * m + 1;
  require(static_cast<int>(samples.size()) == n, errc::length_mismatch,
          "need exactly 2m+1 samples");
  Coeffs1D out;
  // c_j = (1/n) sum_l f(t_l) e^{-i j t_l}; O(n^2) on purpose, this is the
  // sample-space reference path.
  for (int j = -m; j <= m; ++j) {
    std::complex<double> acc = 0.0;
    for (int l = 0; l < n; ++l) {
      const double phase = -2.0 * std::numbers::pi * j * l / n;
      acc += samples[static_cast<std::size_t>(l)] * std::polar(1.0, phase);
    }
    out.add(j, acc / static_cast<double>(n));
  }
  return out;
}

Coeffs1D alias_coeffs(int m, const Coeffs1D& f) {
  require(m >= 0, errc::invalid_params, "interpolation order must be >= 0");
  Coeffs1D out;
  for (const auto& [freq, c] : f.coeffs()) out.add(centered_residue(freq, m), c);
  return out;
}

Coeffs1D eta(int m, const Coeffs1D& f) {
  require(m >= 0, errc::invalid_params, "dyadic level must be >= 0");
  if (m == 0) return alias_coeffs(1, f);
  require(m <= 30, errc::too_large, "dyadic level must fit in int frequencies");
  Coeffs1D out = alias_coeffs(1 << m, f);
  const Coeffs1D coarse = alias_coeffs(1 << (m - 1), f);
  for (const auto& [freq, c] : coarse.coeffs()) out.add(freq, -c);
  return out;
}

}  // namespace sgr

#pragma once

#include <complex>
#include <map>
#include <vector>

#include "sgr/errors.hpp"

namespace sgr {

// Sparse coefficient map of a univariate trigonometric polynomial
// f(t) = sum_l c_l e^{ilt}.  Exact zeros are never stored.
class Coeffs1D {
 public:
  Coeffs1D() = default;

  void add(int freq, std::complex<double> c) {
    if (c == 0.0) {
      return;
    }
    auto [it, inserted] = c_.try_emplace(freq, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0.0) c_.erase(it);
    }
  }

  std::complex<double> at(int freq) const {
    auto it = c_.find(freq);
    return it == c_.end() ? std::complex<double>(0.0) : it->second;
  }

  const std::map<int, std::complex<double>>& coeffs() const { return c_; }
  std::size_t support_size() const { return c_.size(); }

  // Largest |freq| in the support; 0 for the zero polynomial.
  int band() const {
    int b = 0;
    for (const auto& [freq, c] : c_) b = std::max(b, std::abs(freq));
    return b;
  }

  std::complex<double> evaluate(double t) const;

  bool operator==(const Coeffs1D&) const = default;

 private:
  std::map<int, std::complex<double>> c_;
};

// Interpolation nodes t_l = 2 pi l / (2m+1), l = 0..2m.
std::vector<double> interp_nodes(int m);

// Dirichlet kernel D_m(t) = sum_{|k|<=m} e^{ikt}.  The closed form
// sin((m+1/2)t)/sin(t/2) is used away from the singularity; near multiples
// of 2 pi the explicit cosine sum takes over (D_m(0) = 2m+1).
double dirichlet(int m, double t);

// Reduce a frequency to its representative in [-m, m] modulo 2m+1.
int centered_residue(int freq, int m);

// Coefficients of the interpolant I_m f from samples on the 2m+1 nodes,
// computed by a direct DFT.  Requires samples.size() == 2m+1 and m <= 2047.
Coeffs1D interpolate_samples(int m, const std::vector<std::complex<double>>& samples);

// Coefficients of I_m f from the coefficients of f, by folding every
// frequency onto its centered residue: c_r(I_m f) = sum_{l = r mod 2m+1} c_l.
Coeffs1D alias_coeffs(int m, const Coeffs1D& f);

// Dyadic difference eta_m = I_{2^m} - I_{2^{m-1}} for m >= 1, eta_0 = I_1.
Coeffs1D eta(int m, const Coeffs1D& f);

}  // namespace sgr

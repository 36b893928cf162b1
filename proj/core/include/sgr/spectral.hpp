#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "sgr/multi_index.hpp"

namespace sgr {

// Multivariate trigonometric polynomial in frequency space,
// f(x) = sum_l c_l e^{i l.x}, stored sparsely.  Exact zeros are never kept,
// and iteration order is lexicographic in the frequency, which makes every
// reduction over the support deterministic.
class SpectralFunction {
 public:
  explicit SpectralFunction(int dim);

  int dim() const { return d_; }
  const std::map<FreqVec, std::complex<double>>& coeffs() const { return c_; }
  std::size_t support_size() const { return c_.size(); }

  std::complex<double> at(const FreqVec& freq) const;

  // Accumulate c into the coefficient at freq, erasing exact-zero results.
  void add(const FreqVec& freq, std::complex<double> c);

  // Largest |l_j| over the support for one axis / over all axes.
  int band_axis(int axis) const;
  int band() const;

  std::complex<double> evaluate(std::span<const double> x) const;

  SpectralFunction& operator+=(const SpectralFunction& g);
  SpectralFunction& operator-=(const SpectralFunction& g);
  SpectralFunction& operator*=(std::complex<double> s);
  friend SpectralFunction operator+(SpectralFunction f, const SpectralFunction& g) {
    f += g;
    return f;
  }
  friend SpectralFunction operator-(SpectralFunction f, const SpectralFunction& g) {
    f -= g;
    return f;
  }

  bool operator==(const SpectralFunction&) const = default;

 private:
  int d_;
  std::map<FreqVec, std::complex<double>> c_;
};

// Littlewood-Paley block of a frequency: per axis 0 for l_j = 0, otherwise
// floor(log2|l_j|) + 1, so that 2^{k_j-1} <= |l_j| < 2^{k_j}.
MultiIndex block_of(const FreqVec& freq);

// Restriction of f to the frequencies of the block k (the dyadic piece
// delta_k f).  The blocks partition Z^d, so summing over all blocks of the
// support returns f exactly.
SpectralFunction lp_block(const SpectralFunction& f, const MultiIndex& k);

// Norm selector.  a and b are the weight exponents used by the chosen kind
// (alpha/beta for the anisotropic weight, gamma for the isotropic ones,
// q for the grid Lq estimate).
struct NormKind {
  enum class Kind { L2, HMix, HGammaMix, HGamma, HAB, LInfEstimate, LqEstimate };
  Kind kind = Kind::L2;
  double a = 0.0;
  double b = 0.0;
  double q = 0.0;

  static NormKind l2() { return {Kind::L2, 0, 0, 0}; }
  static NormKind hmix(double alpha) { return {Kind::HMix, alpha, 0, 0}; }
  static NormKind hgamma_mix(double gamma) { return {Kind::HGammaMix, gamma, 0, 0}; }
  static NormKind hgamma(double gamma) { return {Kind::HGamma, gamma, 0, 0}; }
  static NormKind hab(double alpha, double beta) { return {Kind::HAB, alpha, beta, 0}; }
  static NormKind linf_estimate() { return {Kind::LInfEstimate, 0, 0, 0}; }
  static NormKind lq_estimate(double q) { return {Kind::LqEstimate, 0, 0, q}; }
};

// Norm of f under the chosen convention.
//   L2:          sqrt( (2 pi)^d sum |c_l|^2 )            (Parseval, with volume)
//   HMix:        sqrt( sum |c_l|^2 prod_j (1+l_j^2)^a )  (no volume factor)
//   HGammaMix:   same weight with exponent a = gamma
//   HGamma:      sqrt( sum |c_l|^2 (1+|l|_2^2)^a )
//   HAB:         sqrt( sum |c_l|^2 prod_j (1+l_j^2)^a (1+|l|_2^2)^b )
//   LInfEstimate: max |f| over the uniform tensor grid with 4(band+1)
//                 points per axis
//   LqEstimate:  rectangle-rule ( (2 pi)^d mean |f|^q )^{1/q} on that grid
double norm(const SpectralFunction& f, const NormKind& kind);

// Dyadic-block norm sqrt( sum_k 2^{2(a|k|_1 + b|k|_inf)} ||delta_k f||_2^2 )
// with the volume-carrying L2 norm inside.  Requires min(a, a+b) > 0.
double norm_hab_dyadic(const SpectralFunction& f, double a, double b);

// Isotropic dyadic-block norm sqrt( sum_k 2^{2 g |k|_inf} ||delta_k f||_2^2 ).
double norm_hgamma_dyadic(const SpectralFunction& f, double g);

// Sampling seminorm: same weighted block sum with the interpolatory pieces
// q_k f in place of delta_k f.  Band-limited input keeps the sum finite
// (blocks beyond the band cancel exactly).  Requires min(a, a+b) > 1/2.
double sampling_norm_plus(const SpectralFunction& f, double a, double b);

}  // namespace sgr

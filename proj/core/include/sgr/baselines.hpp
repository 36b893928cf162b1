#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sgr/index_set.hpp"

namespace sgr {

// Which norm the approximation error is measured in.
enum class TargetKind { Isotropic, Mixed };

const char* target_kind_name(TargetKind t);

// Approximation numbers of the embedding of the (alpha, beta)-weighted
// source space into the target space, restricted to the frequency cube
// |l_j| <= cutoff.  The embedding is diagonal with singular values
// sigma(l) = target_weight(l) / source_weight(l), so a_n = sigma_{n+1}
// (descending order).  Truncation is honest only while a_n stays above the
// largest singular value on the cube boundary; n_max marks that horizon.
struct SingularSpectrum {
  std::vector<double> sigma;  // descending; sigma[n] realizes a_n
  double boundary_max = 0.0;
  std::int64_t n_max = 0;

  double a(std::size_t n) const { return sigma.at(n); }
  bool valid(std::size_t n) const {
    return static_cast<std::int64_t>(n) <= n_max;
  }
};

SingularSpectrum approx_numbers(const SmoothnessParams& p, TargetKind target,
                                int cutoff);

// Least-squares slope of log e against log m, after dividing e by
// (log m)^log_correction.  Natural logarithms; requires positive data and,
// when the correction is active, m > 1.
struct RateFit {
  double slope = 0.0;
  double r2 = 0.0;
};

RateFit fit_rate(std::span<const std::pair<double, double>> pairs,
                 double log_correction = 0.0);

}  // namespace sgr

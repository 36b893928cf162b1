#include "sgr/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace sgr {

const char* target_kind_name(TargetKind t) {
  return t == TargetKind::Isotropic ? "isotropic" : "mixed";
}

SingularSpectrum approx_numbers(const SmoothnessParams& p, TargetKind target,
                                int cutoff) {
  require(p.d >= 1, errc::invalid_params, "dimension must be >= 1");
  require(cutoff >= 1, errc::invalid_params, "cutoff must be >= 1");
  require(p.alpha >= 0.0 && p.alpha + p.beta >= 0.0, errc::invalid_params,
          "source weight needs alpha >= 0 and alpha + beta >= 0");
  // Compactness of the embedding, so that sigma decays along every
  // direction and the cube truncation can be flagged honestly.
  if (target == TargetKind::Isotropic) {
    require(p.alpha > p.gamma - p.beta, errc::invalid_params,
            "isotropic target needs alpha > gamma - beta");
  } else {
    require(p.alpha > p.gamma && p.alpha > p.gamma - p.beta,
            errc::invalid_params, "mixed target needs alpha > gamma");
  }
  const double side = 2.0 * cutoff + 1.0;
  require(std::pow(side, p.d) <= 2e7, errc::too_large,
          "singular-value cube exceeds the supported size");

  SingularSpectrum out;
  out.sigma.reserve(static_cast<std::size_t>(std::pow(side, p.d)));
  std::vector<int> l(static_cast<std::size_t>(p.d), -cutoff);
  for (;;) {
    double src = 1.0, n2 = 0.0;
    int linf = 0;
    for (int v : l) {
      src *= std::pow(1.0 + static_cast<double>(v) * v, 0.5 * p.alpha);
      n2 += static_cast<double>(v) * v;
      linf = std::max(linf, std::abs(v));
    }
    src *= std::pow(1.0 + n2, 0.5 * p.beta);
    double tgt = 1.0;
    if (target == TargetKind::Isotropic) {
      tgt = std::pow(1.0 + n2, 0.5 * p.gamma);
    } else {
      for (int v : l)
        tgt *= std::pow(1.0 + static_cast<double>(v) * v, 0.5 * p.gamma);
    }
    const double sigma = tgt / src;
    out.sigma.push_back(sigma);
    if (linf == cutoff) out.boundary_max = std::max(out.boundary_max, sigma);

    int axis = p.d - 1;
    while (axis >= 0) {
      auto& v = l[static_cast<std::size_t>(axis)];
      if (++v <= cutoff) break;
      v = -cutoff;
      --axis;
    }
    if (axis < 0) break;
  }
  std::sort(out.sigma.begin(), out.sigma.end(), std::greater<double>());
  std::int64_t above = 0;
  for (double s : out.sigma) {
    if (s > out.boundary_max) ++above;
    else break;
  }
  out.n_max = above - 1;  // -1 when even a_0 sits at the boundary level
  return out;
}

RateFit fit_rate(std::span<const std::pair<double, double>> pairs,
                 double log_correction) {
  require(pairs.size() >= 2, errc::invalid_params,
          "rate fit needs at least two points");
  std::vector<double> xs, ys;
  xs.reserve(pairs.size());
  ys.reserve(pairs.size());
  for (const auto& [m, e] : pairs) {
    require(m > 0.0 && e > 0.0, errc::invalid_params,
            "rate fit needs positive abscissae and errors");
    xs.push_back(std::log(m));
    double y = std::log(e);
    if (log_correction != 0.0) {
      // Guarded so m = 1 stays usable in the uncorrected fit; log(log 1)
      // would otherwise turn 0 * -inf into NaN.
      require(m > 1.0, errc::invalid_params,
              "log-corrected fit needs m > 1");
      y -= log_correction * std::log(std::log(m));
    }
    ys.push_back(y);
  }
  const double n = static_cast<double>(xs.size());
  double xm = 0.0, ym = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xm += xs[i];
    ym += ys[i];
  }
  xm /= n;
  ym /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - xm) * (xs[i] - xm);
    sxy += (xs[i] - xm) * (ys[i] - ym);
    syy += (ys[i] - ym) * (ys[i] - ym);
  }
  require(sxx > 0.0, errc::degenerate, "rate fit needs spread in m");
  RateFit fit;
  fit.slope = sxy / sxx;
  // The residual is a sum of squares; cancellation can leave it a hair
  // negative, which would push r2 above one.
  const double ss_res = std::max(syy - sxy * sxy / sxx, 0.0);
  fit.r2 = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
  return fit;
}

}  // namespace sgr

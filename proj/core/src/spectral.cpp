#include "sgr/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "sgr/fft.hpp"

namespace sgr {

namespace {
using cplx = std::complex<double>;

double two_pi_pow(int d) {
  return std::pow(2.0 * std::numbers::pi, static_cast<double>(d));
}
}  // namespace

SpectralFunction::SpectralFunction(int dim) : d_(dim) {
  require(d_ >= 1, errc::invalid_params, "spectral function needs dim >= 1");
}

cplx SpectralFunction::at(const FreqVec& freq) const {
  auto it = c_.find(freq);
  return it == c_.end() ? cplx(0.0) : it->second;
}

void SpectralFunction::add(const FreqVec& freq, cplx c) {
  require(static_cast<int>(freq.size()) == d_, errc::dimension_mismatch,
          "frequency dimension mismatch");
  if (c == 0.0) return;
  auto [it, inserted] = c_.try_emplace(freq, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) c_.erase(it);
  }
}

int SpectralFunction::band_axis(int axis) const {
  require(axis >= 0 && axis < d_, errc::invalid_params, "axis out of range");
  int b = 0;
  for (const auto& [freq, c] : c_)
    b = std::max(b, std::abs(freq[static_cast<std::size_t>(axis)]));
  return b;
}

int SpectralFunction::band() const {
  int b = 0;
  for (const auto& [freq, c] : c_)
    for (int v : freq) b = std::max(b, std::abs(v));
  return b;
}

cplx SpectralFunction::evaluate(std::span<const double> x) const {
  require(static_cast<int>(x.size()) == d_, errc::dimension_mismatch,
          "evaluation point dimension mismatch");
  cplx acc = 0.0;
  for (const auto& [freq, c] : c_) {
    double phase = 0.0;
    for (int j = 0; j < d_; ++j)
      phase += static_cast<double>(freq[static_cast<std::size_t>(j)]) *
               x[static_cast<std::size_t>(j)];
    acc += c * std::polar(1.0, phase);
  }
  return acc;
}

SpectralFunction& SpectralFunction::operator+=(const SpectralFunction& g) {
  require(d_ == g.d_, errc::dimension_mismatch, "dimension mismatch in +=");
  for (const auto& [freq, c] : g.c_) add(freq, c);
  return *this;
}

SpectralFunction& SpectralFunction::operator-=(const SpectralFunction& g) {
  require(d_ == g.d_, errc::dimension_mismatch, "dimension mismatch in -=");
  for (const auto& [freq, c] : g.c_) add(freq, -c);
  return *this;
}

SpectralFunction& SpectralFunction::operator*=(cplx s) {
  if (s == 0.0) {
    c_.clear();
    return *this;
  }
  for (auto& [freq, c] : c_) c *= s;
  return *this;
}

MultiIndex block_of(const FreqVec& freq) {
  std::vector<int> k(freq.size());
  for (std::size_t j = 0; j < freq.size(); ++j) {
    const unsigned a = static_cast<unsigned>(std::abs(freq[j]));
    k[j] = a == 0 ? 0 : std::bit_width(a);
  }
  return MultiIndex(std::move(k));
}

SpectralFunction lp_block(const SpectralFunction& f, const MultiIndex& k) {
  require(k.dim() == f.dim(), errc::dimension_mismatch,
          "block index dimension mismatch");
  SpectralFunction out(f.dim());
  for (const auto& [freq, c] : f.coeffs())
    if (block_of(freq) == k) out.add(freq, c);
  return out;
}

namespace {

// Streams |f| over the uniform tensor grid with res points per axis and
// feeds every magnitude to the reducer.  d = 1 and d = 2 never materialize
// the full grid; d >= 3 transforms a dense cube axis by axis.
template <typename Reduce>
void grid_magnitudes(const SpectralFunction& f, int res, Reduce&& red) {
  const int d = f.dim();
  const std::size_t n = static_cast<std::size_t>(res);
  require(res >= 2 * f.band() + 1, errc::invalid_params,
          "grid resolution below Nyquist for this band");

  const auto wrap = [res](int freq) {
    int r = freq % res;
    return static_cast<std::size_t>(r < 0 ? r + res : r);
  };

  if (d == 1) {
    std::vector<cplx> line(n, 0.0);
    for (const auto& [freq, c] : f.coeffs()) line[wrap(freq[0])] += c;
    dft_inplace(line, +1);
    for (const cplx& v : line) red(std::abs(v));
    return;
  }

  if (d == 2) {
    // Row streaming over x_1: collapse the support onto axis 2 with a
    // running phase index per entry, then synthesize the row by FFT.
    struct Entry {
      std::size_t step;   // axis-1 frequency reduced mod res
      std::size_t idx2;   // axis-2 position in the row spectrum
      std::size_t phase;  // running (l_1 * r) mod res
      cplx c;
    };
    std::vector<Entry> entries;
    entries.reserve(f.support_size());
    for (const auto& [freq, c] : f.coeffs())
      entries.push_back({wrap(freq[0]), wrap(freq[1]), 0, c});
    std::vector<cplx> table(n);
    for (std::size_t t = 0; t < n; ++t)
      table[t] = std::polar(1.0, 2.0 * std::numbers::pi *
                                     static_cast<double>(t) /
                                     static_cast<double>(res));
    std::vector<cplx> row(n);
    for (std::size_t r = 0; r < n; ++r) {
      std::fill(row.begin(), row.end(), cplx(0.0));
      for (Entry& e : entries) {
        row[e.idx2] += e.c * table[e.phase];
        e.phase += e.step;
        if (e.phase >= n) e.phase -= n;
      }
      dft_inplace(row, +1);
      for (const cplx& v : row) red(std::abs(v));
    }
    return;
  }

  double cells = 1.0;
  for (int j = 0; j < d; ++j) cells *= static_cast<double>(res);
  require(cells <= 5e7, errc::too_large,
          "tensor evaluation grid exceeds the supported size");
  const std::size_t total = static_cast<std::size_t>(cells);

  std::vector<cplx> cube(total, 0.0);
  std::vector<std::size_t> stride(static_cast<std::size_t>(d));
  stride[static_cast<std::size_t>(d - 1)] = 1;
  for (int j = d - 2; j >= 0; --j)
    stride[static_cast<std::size_t>(j)] =
        stride[static_cast<std::size_t>(j + 1)] * n;
  for (const auto& [freq, c] : f.coeffs()) {
    std::size_t idx = 0;
    for (int j = 0; j < d; ++j)
      idx += wrap(freq[static_cast<std::size_t>(j)]) *
             stride[static_cast<std::size_t>(j)];
    cube[idx] += c;
  }

  std::vector<cplx> line(n);
  for (int axis = 0; axis < d; ++axis) {
    const std::size_t st = stride[static_cast<std::size_t>(axis)];
    const std::size_t block = st * n;
    for (std::size_t base = 0; base < total; base += block) {
      for (std::size_t off = 0; off < st; ++off) {
        for (std::size_t t = 0; t < n; ++t) line[t] = cube[base + off + t * st];
        dft_inplace(line, +1);
        for (std::size_t t = 0; t < n; ++t) cube[base + off + t * st] = line[t];
      }
    }
  }
  for (const cplx& v : cube) red(std::abs(v));
}

int grid_resolution(const SpectralFunction& f) { return 4 * (f.band() + 1); }

double weighted_l2(const SpectralFunction& f, const NormKind& k) {
  double sum = 0.0;
  for (const auto& [freq, c] : f.coeffs()) {
    double w = 1.0;
    switch (k.kind) {
      case NormKind::Kind::L2:
        break;
      case NormKind::Kind::HMix:
      case NormKind::Kind::HGammaMix:
        for (int v : freq)
          w *= std::pow(1.0 + static_cast<double>(v) * v, k.a);
        break;
      case NormKind::Kind::HGamma: {
        double n2 = 0.0;
        for (int v : freq) n2 += static_cast<double>(v) * v;
        w = std::pow(1.0 + n2, k.a);
        break;
      }
      case NormKind::Kind::HAB: {
        double n2 = 0.0;
        for (int v : freq) {
          w *= std::pow(1.0 + static_cast<double>(v) * v, k.a);
          n2 += static_cast<double>(v) * v;
        }
        w *= std::pow(1.0 + n2, k.b);
        break;
      }
      default:
        break;
    }
    sum += w * std::norm(c);
  }
  return sum;
}

}  // namespace

double norm(const SpectralFunction& f, const NormKind& k) {
  switch (k.kind) {
    case NormKind::Kind::L2:
      return std::sqrt(two_pi_pow(f.dim()) * weighted_l2(f, k));
    case NormKind::Kind::HMix:
    case NormKind::Kind::HGammaMix:
    case NormKind::Kind::HGamma:
      require(k.a >= 0.0, errc::invalid_params,
              "weighted norm needs exponent >= 0");
      return std::sqrt(weighted_l2(f, k));
    case NormKind::Kind::HAB:
      require(k.a >= 0.0 && k.a + k.b >= 0.0, errc::invalid_params,
              "anisotropic norm needs a >= 0 and a + b >= 0");
      return std::sqrt(weighted_l2(f, k));
    case NormKind::Kind::LInfEstimate: {
      double best = 0.0;
      grid_magnitudes(f, grid_resolution(f),
                      [&best](double v) { best = std::max(best, v); });
      return best;
    }
    case NormKind::Kind::LqEstimate: {
      require(k.q >= 1.0, errc::invalid_params, "Lq estimate needs q >= 1");
      const int res = grid_resolution(f);
      double cells = 1.0;
      for (int j = 0; j < f.dim(); ++j) cells *= static_cast<double>(res);
      double sum = 0.0;
      grid_magnitudes(f, res,
                      [&sum, &k](double v) { sum += std::pow(v, k.q); });
      return std::pow(two_pi_pow(f.dim()) * sum / cells, 1.0 / k.q);
    }
  }
  raise(errc::invalid_params, "unknown norm kind");
}

namespace {

double dyadic_weighted(const SpectralFunction& f, double a, double b,
                       bool isotropic) {
  // Per-block energies; map keyed by the block index keeps the reduction
  // order fixed.
  std::map<std::vector<int>, double> blocks;
  for (const auto& [freq, c] : f.coeffs())
    blocks[block_of(freq).entries()] += std::norm(c);
  const double vol = two_pi_pow(f.dim());
  double sum = 0.0;
  for (const auto& [kv, energy] : blocks) {
    const MultiIndex k{std::vector<int>(kv)};
    const double expo = isotropic ? 2.0 * a * k.linf()
                                  : 2.0 * (a * k.l1() + b * k.linf());
    sum += std::exp2(expo) * vol * energy;
  }
  return std::sqrt(sum);
}

}  // namespace

double norm_hab_dyadic(const SpectralFunction& f, double a, double b) {
  require(std::min(a, a + b) > 0.0, errc::invalid_params,
          "dyadic norm needs min(a, a+b) > 0");
  return dyadic_weighted(f, a, b, false);
}

double norm_hgamma_dyadic(const SpectralFunction& f, double g) {
  require(g >= 0.0, errc::invalid_params, "dyadic norm needs exponent >= 0");
  return dyadic_weighted(f, g, 0.0, true);
}

}  // namespace sgr

#include "sgr/sampling_operator.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <thread>

#include "sgr/rng.hpp"
#include "sgr/trig_interp.hpp"

namespace sgr {

namespace {

SpectralFunction alias_axis(const SpectralFunction& f, int m, int axis) {
  SpectralFunction out(f.dim());
  FreqVec g;
  for (const auto& [freq, c] : f.coeffs()) {
    g = freq;
    g[static_cast<std::size_t>(axis)] =
        centered_residue(freq[static_cast<std::size_t>(axis)], m);
    out.add(g, c);
  }
  return out;
}

SpectralFunction eta_axis(const SpectralFunction& f, int level, int axis) {
  if (level == 0) return alias_axis(f, 1, axis);
  require(level <= 30, errc::too_large,
          "dyadic level must fit in int frequencies");
  SpectralFunction out = alias_axis(f, 1 << level, axis);
  out -= alias_axis(f, 1 << (level - 1), axis);
  return out;
}

}  // namespace

SpectralFunction q_k(const SpectralFunction& f, const MultiIndex& k) {
  require(k.dim() == f.dim(), errc::dimension_mismatch,
          "piece index dimension mismatch");
  SpectralFunction out = f;
  for (int axis = 0; axis < f.dim(); ++axis) {
    out = eta_axis(out, k[axis], axis);
    if (out.support_size() == 0) break;  // a vanished axis kills the tensor
  }
  return out;
}

SpectralFunction apply_Q_enumerated(const SpectralFunction& f,
                                    const IndexSet& s,
                                    std::span<const std::size_t> order) {
  require(s.dim() == f.dim(), errc::dimension_mismatch,
          "operator/function dimension mismatch");
  require(order.size() == s.members().size(), errc::invalid_params,
          "enumeration order must cover the index set");
  std::vector<SpectralFunction> pieces(s.members().size(), SpectralFunction(f.dim()));
  for (std::size_t idx : order) {
    require(idx < s.members().size(), errc::invalid_params,
            "enumeration order out of range");
    pieces[idx] = q_k(f, s.members()[idx]);
  }
  SpectralFunction out(f.dim());
  for (const SpectralFunction& p : pieces) out += p;
  return out;
}

SpectralFunction apply_Q(const SpectralFunction& f, const IndexSet& s,
                         int threads) {
  require(s.dim() == f.dim(), errc::dimension_mismatch,
          "operator/function dimension mismatch");
  const std::size_t n = s.members().size();
  std::vector<SpectralFunction> pieces(n, SpectralFunction(f.dim()));
  if (threads <= 0)
    threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(n ? n : 1)));
  if (threads == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) pieces[i] = q_k(f, s.members()[i]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t]() {
        for (std::size_t i = static_cast<std::size_t>(t); i < n;
             i += static_cast<std::size_t>(threads))
          pieces[i] = q_k(f, s.members()[i]);
      });
    }
    for (auto& th : pool) th.join();
  }
  // Fixed lexicographic reduction keeps results identical for every thread
  // count and enumeration order.
  SpectralFunction out(f.dim());
  for (const SpectralFunction& p : pieces) out += p;
  return out;
}

namespace {

// Per-axis sample count of one piece: level 0 uses the 3 nodes of the
// order-1 interpolant; level k >= 1 evaluates both stacked interpolants,
// (2^{k+1}+1) + (2^k+1) samples.
std::int64_t axis_sample_count(int level) {
  if (level == 0) return 3;
  require(level <= 30, errc::too_large, "grid level out of supported range");
  return 3 * (std::int64_t{1} << level) + 2;
}

// Distinct per-axis nodes of one piece as reduced fractions of 2 pi.  The
// two interpolation grids at level k have coprime lengths, so they share
// only t = 0; reduction to lowest terms makes identity across levels exact.
std::vector<std::pair<std::int64_t, std::int64_t>> axis_nodes(int level) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const auto add_grid = [&out](std::int64_t den) {
    for (std::int64_t num = 0; num < den; ++num) {
      const std::int64_t g = std::gcd(num, den);
      out.emplace_back(num / g, den / g);
    }
  };
  if (level == 0) {
    add_grid(3);
  } else {
    add_grid((std::int64_t{1} << (level + 1)) + 1);
    add_grid((std::int64_t{1} << level) + 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t pack_fraction(std::int64_t num, std::int64_t den) {
  return (static_cast<std::uint64_t>(num) << 32) |
         static_cast<std::uint64_t>(den);
}

constexpr int kMaxGridDim = 4;

std::vector<std::array<std::uint64_t, kMaxGridDim>> collect_points(
    const IndexSet& s) {
  const int d = s.dim();
  require(d <= kMaxGridDim, errc::too_large,
          "distinct-grid accounting supports d <= 4");
  std::vector<std::array<std::uint64_t, kMaxGridDim>> pts;
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> axes(
      static_cast<std::size_t>(d));
  std::array<std::uint64_t, kMaxGridDim> point{};
  for (const auto& k : s.members()) {
    for (int j = 0; j < d; ++j)
      axes[static_cast<std::size_t>(j)] = axis_nodes(k[j]);
    const auto rec = [&](auto&& self, int j) -> void {
      if (j == d) {
        pts.push_back(point);
        return;
      }
      for (const auto& [num, den] : axes[static_cast<std::size_t>(j)]) {
        point[static_cast<std::size_t>(j)] = pack_fraction(num, den);
        self(self, j + 1);
      }
    };
    rec(rec, 0);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

GridReport sampling_grid(const IndexSet& s) {
  GridReport rep;
  for (const auto& k : s.members()) {
    std::int64_t prod = 1;
    for (int j = 0; j < s.dim(); ++j) {
      const std::int64_t nj = axis_sample_count(k[j]);
      require(prod <= std::numeric_limits<std::int64_t>::max() / nj,
              errc::overflow, "grid multiset count exceeds 64-bit range");
      prod *= nj;
    }
    require(rep.multiset_count <=
                std::numeric_limits<std::int64_t>::max() - prod,
            errc::overflow, "grid multiset count exceeds 64-bit range");
    rep.multiset_count += prod;
  }
  rep.distinct_count = static_cast<std::int64_t>(collect_points(s).size());
  return rep;
}

std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>>
sampling_grid_points(const IndexSet& s) {
  const auto packed = collect_points(s);
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> out;
  out.reserve(packed.size());
  for (const auto& p : packed) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pt(
        static_cast<std::size_t>(s.dim()));
    for (int j = 0; j < s.dim(); ++j) {
      const std::uint64_t v = p[static_cast<std::size_t>(j)];
      pt[static_cast<std::size_t>(j)] = {
          static_cast<std::int64_t>(v >> 32),
          static_cast<std::int64_t>(v & 0xffffffffu)};
    }
    out.push_back(std::move(pt));
  }
  return out;
}

ReproductionResult reproduction_check(const IndexSet& s, int trials,
                                      std::uint64_t seed, double tol) {
  require(trials >= 1, errc::invalid_params, "need at least one trial");
  require(is_solid(s), errc::not_solid,
          "reproduction requires a downward-closed index set");
  const FrequencySet cross = hyperbolic_cross(s);
  Rng rng(seed);
  ReproductionResult res;
  res.pass = true;
  for (int t = 0; t < trials; ++t) {
    SpectralFunction f(s.dim());
    for (const auto& freq : cross) f.add(freq, rng.unit_disc());
    const SpectralFunction g = apply_Q(f, s);
    const double rel = norm(g - f, NormKind::l2()) / norm(f, NormKind::l2());
    res.max_rel_error = std::max(res.max_rel_error, rel);
    if (!(rel <= tol)) res.pass = false;
  }
  return res;
}

double sampling_norm_plus(const SpectralFunction& f, double a, double b) {
  require(std::min(a, a + b) > 0.5, errc::invalid_params,
          "sampling norm needs min(a, a+b) > 1/2");
  const int d = f.dim();
  // q_l vanishes once some l_j exceeds the smallest level whose band cube
  // contains the support, so the sum over the box below is the whole sum.
  std::vector<int> box(static_cast<std::size_t>(d), 0);
  for (int j = 0; j < d; ++j) {
    const int band = f.band_axis(j);
    box[static_cast<std::size_t>(j)] =
        band <= 1 ? 0 : std::bit_width(static_cast<unsigned>(band - 1));
  }
  double sum = 0.0;
  const double vol = std::pow(2.0 * std::numbers::pi, static_cast<double>(d));
  std::vector<int> l(static_cast<std::size_t>(d), 0);
  const auto rec = [&](auto&& self, int axis) -> void {
    if (axis == d) {
      const MultiIndex k{std::vector<int>(l)};
      const SpectralFunction piece = q_k(f, k);
      double energy = 0.0;
      for (const auto& [freq, c] : piece.coeffs()) energy += std::norm(c);
      sum += std::exp2(2.0 * (a * k.l1() + b * k.linf())) * vol * energy;
      return;
    }
    for (int v = 0; v <= box[static_cast<std::size_t>(axis)]; ++v) {
      l[static_cast<std::size_t>(axis)] = v;
      self(self, axis + 1);
    }
  };
  rec(rec, 0);
  return std::sqrt(sum);
}

}  // namespace sgr

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "sgr/rng.hpp"
#include "sgr/trig_interp.hpp"
#include "support/oracles.hpp"

using namespace sgr;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

Coeffs1D random_poly(Rng& rng, int band, int terms) {
  Coeffs1D f;
  for (int t = 0; t < terms; ++t)
    f.add(static_cast<int>(rng.uniform_int(-band, band)), rng.unit_disc());
  return f;
}

// Lift a univariate coefficient map into the d=1 multivariate type the
// oracle understands.
SpectralFunction lift(const Coeffs1D& f) {
  SpectralFunction g(1);
  for (const auto& [freq, c] : f.coeffs()) g.add({freq}, c);
  return g;
}

}  // namespace

TEST_CASE("interpolation nodes are the equidistant 2m+1 grid") {
  const auto t = interp_nodes(2);
  REQUIRE(t.size() == 5);
  for (int l = 0; l < 5; ++l)
    CHECK(t[static_cast<std::size_t>(l)] ==
          doctest::Approx(2.0 * kPi * l / 5.0).epsilon(1e-15));
}

TEST_CASE("dirichlet kernel values") {
  CHECK(dirichlet(3, 0.0) == 7.0);  // D_m(0) = 2m+1, exact in the sum form
  CHECK(dirichlet(2, kPi) == doctest::Approx(1.0).epsilon(1e-12));
  // Continuity across the removable singularity threshold.
  CHECK(dirichlet(5, 1e-12) == doctest::Approx(11.0).epsilon(1e-9));
  // Zero at every nonzero node lag.
  const auto t = interp_nodes(4);
  for (std::size_t l = 1; l < t.size(); ++l)
    CHECK(std::abs(dirichlet(4, t[l])) < 1e-9);
}

TEST_CASE("centered residue folds onto [-m, m]") {
  CHECK(centered_residue(0, 3) == 0);
  CHECK(centered_residue(4, 1) == 1);    // 4 mod 3
  CHECK(centered_residue(-5, 2) == 0);   // -5 mod 5
  CHECK(centered_residue(7, 2) == 2);
  CHECK(centered_residue(8, 2) == -2);   // 3 wraps to -2
  CHECK(centered_residue(6, 6) == 6);
  CHECK(centered_residue(7, 6) == -6);
}

TEST_CASE("alias folding on known frequencies") {
  Coeffs1D f;
  f.add(4, cplx(1.0, 0.0));
  const Coeffs1D i1 = alias_coeffs(1, f);
  CHECK(i1.support_size() == 1);
  CHECK(i1.at(1) == cplx(1.0, 0.0));

  Coeffs1D g;
  g.add(3, cplx(0.5, -0.5));
  CHECK(alias_coeffs(1, g).at(0) == cplx(0.5, -0.5));

  // Two frequencies in the same residue class accumulate.
  Coeffs1D h;
  h.add(1, cplx(1.0, 0.0));
  h.add(4, cplx(2.0, 0.0));
  CHECK(alias_coeffs(1, h).at(1) == cplx(3.0, 0.0));
}

TEST_CASE("interpolation reproduces polynomials within its band") {
  Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = static_cast<int>(rng.uniform_int(0, 20));
    const Coeffs1D f = random_poly(rng, m, 15);
    CHECK(alias_coeffs(m, f) == f);  // residues are identities here
  }
}

TEST_CASE("alias path agrees with the plain grid-sum oracle") {
  Rng rng(72);
  double worst = 0.0;
  for (int trial = 0; trial < 25; ++trial) {
    const int m = static_cast<int>(rng.uniform_int(1, 16));
    const Coeffs1D f = random_poly(rng, 40, 20);
    const auto want = oracle::tensor_interp(lift(f), {m});
    const Coeffs1D got = alias_coeffs(m, f);
    for (const auto& [freq, c] : want)
      worst = std::max(worst, std::abs(c - got.at(freq[0])));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("sample-space interpolation matches the alias path") {
  Rng rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = static_cast<int>(rng.uniform_int(1, 24));
    const Coeffs1D f = random_poly(rng, 60, 25);
    std::vector<cplx> samples;
    for (double t : interp_nodes(m)) samples.push_back(f.evaluate(t));
    const Coeffs1D a = interpolate_samples(m, samples);
    const Coeffs1D b = alias_coeffs(m, f);
    for (int j = -m; j <= m; ++j)
      CHECK(std::abs(a.at(j) - b.at(j)) <= 1e-10);
  }
}

TEST_CASE("interpolate_samples validates its input") {
  CHECK_THROWS_AS(interpolate_samples(2, std::vector<cplx>(4)), error);
  CHECK_THROWS_AS(interpolate_samples(3000, std::vector<cplx>(6001)), error);
}

TEST_CASE("eta differences telescope and vanish below their band") {
  // Band 2 lies inside both grids of eta_3 = I_8 - I_4: exact zero.
  Coeffs1D f;
  f.add(2, cplx(1.0, 1.0));
  f.add(-1, cplx(0.25, 0.0));
  CHECK(eta(3, f).support_size() == 0);
  CHECK(eta(0, f) == alias_coeffs(1, f));

  // Sum of eta_0..eta_K collapses to I_{2^K}; equal up to summation noise.
  Rng rng(74);
  const Coeffs1D g = random_poly(rng, 300, 60);
  const int K = 6;
  Coeffs1D sum;
  for (int k = 0; k <= K; ++k) {
    const Coeffs1D piece = eta(k, g);
    for (const auto& [freq, c] : piece.coeffs()) sum.add(freq, c);
  }
  const Coeffs1D direct = alias_coeffs(1 << K, g);
  double scale = 0.0;
  for (const auto& [freq, c] : direct.coeffs())
    scale = std::max(scale, std::abs(c));
  for (int j = -(1 << K); j <= (1 << K); ++j)
    CHECK(std::abs(sum.at(j) - direct.at(j)) <= 1e-12 * scale);
}

TEST_CASE("coefficient maps drop exact zeros") {
  Coeffs1D f;
  f.add(3, cplx(1.0, -2.0));
  f.add(3, cplx(-1.0, 2.0));
  CHECK(f.support_size() == 0);
  CHECK(f.band() == 0);
}

TEST_CASE("evaluation sums the exponential series") {
  Coeffs1D f;
  f.add(0, cplx(1.0, 0.0));
  f.add(1, cplx(0.0, 1.0));
  const double t = 0.7;
  const cplx want = cplx(1.0, 0.0) + cplx(0.0, 1.0) * std::polar(1.0, t);
  CHECK(std::abs(f.evaluate(t) - want) <= 1e-15);
}

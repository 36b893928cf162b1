#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "sgr/rng.hpp"
#include "sgr/spectral.hpp"

using namespace sgr;
using cplx = std::complex<double>;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SpectralFunction random_cube(Rng& rng, int d, int band, int terms) {
  SpectralFunction f(d);
  FreqVec freq(static_cast<std::size_t>(d));
  for (int t = 0; t < terms; ++t) {
    for (auto& v : freq) v = static_cast<int>(rng.uniform_int(-band, band));
    f.add(freq, rng.unit_disc());
  }
  return f;
}

}  // namespace

TEST_CASE("coefficient bookkeeping") {
  SpectralFunction f(2);
  f.add({1, -2}, cplx(0.5, 0.5));
  f.add({1, -2}, cplx(0.5, -0.5));
  CHECK(f.at({1, -2}) == cplx(1.0, 0.0));
  CHECK(f.support_size() == 1);
  CHECK(f.band_axis(0) == 1);
  CHECK(f.band_axis(1) == 2);
  CHECK(f.band() == 2);

  f.add({1, -2}, cplx(-1.0, 0.0));
  CHECK(f.support_size() == 0);

  CHECK_THROWS_AS(f.add({1, 2, 3}, 1.0), error);
}

TEST_CASE("evaluation at a point") {
  SpectralFunction f(2);
  f.add({0, 0}, cplx(1.0, 0.0));
  f.add({1, 0}, cplx(2.0, 0.0));
  const double x[2] = {0.0, 1.3};
  CHECK(std::abs(f.evaluate(x) - cplx(3.0, 0.0)) <= 1e-15);
}

TEST_CASE("littlewood-paley block index") {
  CHECK(block_of({0, 0}) == MultiIndex({0, 0}));
  CHECK(block_of({1, -1}) == MultiIndex({1, 1}));
  CHECK(block_of({-2, 3}) == MultiIndex({2, 2}));
  CHECK(block_of({4, -7}) == MultiIndex({3, 3}));
  CHECK(block_of({8, 15}) == MultiIndex({4, 4}));
}

TEST_CASE("blocks partition the support exactly") {
  Rng rng(91);
  const SpectralFunction f = random_cube(rng, 2, 20, 50);
  SpectralFunction sum(2);
  for (int k1 = 0; k1 <= 5; ++k1)
    for (int k2 = 0; k2 <= 5; ++k2)
      sum += lp_block(f, MultiIndex({k1, k2}));
  CHECK(sum == f);

  // A full cube restricted to block (3,2) keeps 2^{3+2} modes.
  SpectralFunction cube(2);
  for (int a = -8; a <= 8; ++a)
    for (int b = -8; b <= 8; ++b) cube.add({a, b}, 1.0);
  CHECK(lp_block(cube, MultiIndex({3, 2})).support_size() == 32);
}

TEST_CASE("norm conventions on a single mode") {
  SpectralFunction f(2);
  const cplx c(0.6, -0.8);  // |c| = 1
  f.add({1, -2}, c);
  CHECK(norm(f, NormKind::l2()) == doctest::Approx(kTwoPi).epsilon(1e-14));
  CHECK(norm(f, NormKind::hmix(1.0)) ==
        doctest::Approx(std::sqrt(10.0)).epsilon(1e-14));       // (1+1)(1+4)
  CHECK(norm(f, NormKind::hgamma(1.0)) ==
        doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));        // 1+1+4
  CHECK(norm(f, NormKind::hab(1.0, -1.0)) ==
        doctest::Approx(std::sqrt(10.0 / 6.0)).epsilon(1e-14));
  CHECK(norm(f, NormKind::hgamma_mix(0.5)) ==
        doctest::Approx(std::sqrt(std::sqrt(10.0))).epsilon(1e-14));
}

TEST_CASE("norm preconditions") {
  SpectralFunction f(1);
  f.add({2}, 1.0);
  CHECK_THROWS_AS(norm(f, NormKind::hmix(-0.5)), error);
  CHECK_THROWS_AS(norm(f, NormKind::hab(1.0, -2.0)), error);
  CHECK_THROWS_AS(norm(f, NormKind::lq_estimate(0.5)), error);
}

TEST_CASE("parseval holds exactly for the grid L2 estimate") {
  Rng rng(92);
  for (int d : {1, 2}) {
    const SpectralFunction f = random_cube(rng, d, 9, 25);
    if (f.support_size() == 0) continue;
    const double l2 = norm(f, NormKind::l2());
    CHECK(norm(f, NormKind::lq_estimate(2.0)) ==
          doctest::Approx(l2).epsilon(1e-10));
  }
}

TEST_CASE("uniform grid maxima of explicit functions") {
  SpectralFunction f(1);
  f.add({1}, 1.0);
  CHECK(norm(f, NormKind::linf_estimate()) ==
        doctest::Approx(1.0).epsilon(1e-12));

  SpectralFunction g(1);
  g.add({0}, 1.0);
  g.add({1}, 1.0);
  // Peak 2 at t = 0, which the grid contains.
  CHECK(norm(g, NormKind::linf_estimate()) ==
        doctest::Approx(2.0).epsilon(1e-12));

  SpectralFunction h(2);
  h.add({1, 1}, cplx(0.0, 3.0));
  CHECK(norm(h, NormKind::linf_estimate()) ==
        doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("dyadic block norms weight each block by its level") {
  SpectralFunction f(2);
  const cplx c(0.8, 0.6);
  f.add({3, 0}, c);  // block (2,0): |k|_1 = 2, |k|_inf = 2
  CHECK(norm_hab_dyadic(f, 1.0, 0.0) ==
        doctest::Approx(4.0 * kTwoPi).epsilon(1e-14));
  CHECK(norm_hab_dyadic(f, 1.0, -0.5) ==
        doctest::Approx(2.0 * kTwoPi).epsilon(1e-14));
  CHECK(norm_hgamma_dyadic(f, 0.5) ==
        doctest::Approx(2.0 * kTwoPi).epsilon(1e-14));
  CHECK_THROWS_AS(norm_hab_dyadic(f, 1.0, -1.0), error);
  CHECK_THROWS_AS(norm_hgamma_dyadic(f, -0.1), error);
}

TEST_CASE("dyadic and weighted mixed norms are uniformly comparable") {
  Rng rng(93);
  double lo = 1e300, hi = 0.0;
  for (int trial = 0; trial < 30; ++trial) {
    const SpectralFunction f = random_cube(rng, 2, 16, 40);
    if (f.support_size() == 0) continue;
    const double r = norm_hab_dyadic(f, 1.0, 0.0) / norm(f, NormKind::hmix(1.0));
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  CHECK(hi / lo <= 64.0);
}

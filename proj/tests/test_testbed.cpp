#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>
#include <variant>

#include "sgr/errors.hpp"
#include "sgr/spectral.hpp"
#include "sgr/testbed.hpp"

using namespace sgr;

TEST_CASE("cube polynomials fill the whole frequency cube") {
  const SpectralFunction f = materialize(CubePoly{.L = 2, .seed = 42}, 2);
  CHECK(f.support_size() == 25);
  CHECK(f.band() == 2);
  for (const auto& [freq, c] : f.coeffs()) {
    CHECK(std::abs(c) <= 1.0);
    CHECK(std::abs(freq[0]) <= 2);
    CHECK(std::abs(freq[1]) <= 2);
  }
}

TEST_CASE("cube polynomials are a pure function of degree, seed, dimension") {
  const SpectralFunction a = materialize(CubePoly{.L = 3, .seed = 7}, 2);
  const SpectralFunction b = materialize(CubePoly{.L = 3, .seed = 7}, 2);
  const SpectralFunction c = materialize(CubePoly{.L = 3, .seed = 8}, 2);
  CHECK(a == b);
  CHECK_FALSE(a == c);
}

TEST_CASE("oversized supports are rejected before allocation") {
  try {
    materialize(CubePoly{.L = 3000}, 2);  // 6001^2 coefficients
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::too_large);
  }
  try {
    materialize(ProductDecay{.p = 2.0, .L = 200}, 3);  // 401^3 coefficients
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::too_large);
  }
}

TEST_CASE("block extremal places one corner mode per dyadic block") {
  const SpectralFunction f =
      materialize(BlockExtremal{.a = 2.0, .b = 0.0, .K = 3, .delta = 0.5}, 2);
  // One frequency per |k|_1 <= 3 level pair: binom(3+2, 2) members.
  CHECK(f.support_size() == 10);
  // Level pair (2,1) sits at corner (-3,-1) with weight
  // 2^{-2*3} * (1+3)^{-(1/2+1/2)} = 1/256.
  const auto it = f.coeffs().find(FreqVec{-3, -1});
  REQUIRE(it != f.coeffs().end());
  CHECK(it->second.real() == doctest::Approx(1.0 / 256.0).epsilon(1e-15));
  CHECK(it->second.imag() == 0.0);
  // The block of each corner is the level pair itself: corner 0 for level 0,
  // magnitude 2^{k_j}-1 for level k_j >= 1.
  CHECK(f.coeffs().contains(FreqVec{0, 0}));
  CHECK(f.coeffs().contains(FreqVec{-7, 0}));
  CHECK_FALSE(f.coeffs().contains(FreqVec{-15, 0}));
}

TEST_CASE("block extremal rejects flat or negative weights") {
  for (auto bad : {BlockExtremal{.a = 0.0, .b = 0.0, .K = 2, .delta = 0.5},
                   BlockExtremal{.a = 1.0, .b = -1.0, .K = 2, .delta = 0.5},
                   BlockExtremal{.a = 1.0, .b = 0.0, .K = 2, .delta = 0.0}}) {
    try {
      materialize(bad, 2);
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::invalid_params);
    }
  }
}

TEST_CASE("product decay uses the advertised per-axis weights") {
  const SpectralFunction f = materialize(ProductDecay{.p = 1.0, .L = 2}, 2);
  CHECK(f.support_size() == 25);
  const auto it = f.coeffs().find(FreqVec{1, -2});
  REQUIRE(it != f.coeffs().end());
  // (1+1)^{-1} * (1+2)^{-1} = 1/6.
  CHECK(it->second.real() == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(it->second.imag() == 0.0);
}

TEST_CASE("family descriptions parse and print round-trip") {
  const TestFamily fam = parse_family("blockextremal:alpha=1.5,beta=0,K=12");
  REQUIRE(std::holds_alternative<BlockExtremal>(fam));
  const auto& p = std::get<BlockExtremal>(fam);
  CHECK(p.a == 1.5);
  CHECK(p.b == 0.0);
  CHECK(p.K == 12);
  CHECK(p.delta == 0.5);  // default
  CHECK(p.seed == 0);     // default

  const std::string text = family_to_string(fam);
  const TestFamily again = parse_family(text);
  CHECK(materialize(again, 2) == materialize(fam, 2));

  const TestFamily cube = parse_family("cubepoly:L=4,seed=9");
  REQUIRE(std::holds_alternative<CubePoly>(cube));
  CHECK(std::get<CubePoly>(cube).L == 4);
  CHECK(std::get<CubePoly>(cube).seed == 9);

  const TestFamily prod = parse_family("productdecay:p=2,L=8");
  REQUIRE(std::holds_alternative<ProductDecay>(prod));
  CHECK(std::get<ProductDecay>(prod).p == 2.0);
  CHECK(std::get<ProductDecay>(prod).L == 8);
}

TEST_CASE("family parser rejects malformed descriptions") {
  for (const char* bad : {"gauss:L=2",             // unknown family
                          "cubepoly",              // missing L
                          "cubepoly:L",            // not key=value
                          "cubepoly:L=abc",        // no digits at all
                          "cubepoly:L=2x",         // trailing junk
                          "productdecay:p=2"}) {   // missing L
    try {
      parse_family(bad);
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::invalid_params);
    }
  }
}

TEST_CASE("membership margin is the dyadic weighted norm") {
  const SpectralFunction f =
      materialize(BlockExtremal{.a = 1.5, .b = 0.0, .K = 6, .delta = 0.5}, 2);
  CHECK(hab_membership_margin(f, 1.0, 0.0) == norm_hab_dyadic(f, 1.0, 0.0));
}

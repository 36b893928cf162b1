#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "sgr/spectral.hpp"

namespace sgr {

// Reproducible families of band-limited test functions.
//
// CubePoly:      full frequency cube |l_j| <= L, coefficients i.i.d. uniform
//                on the complex unit disc, drawn from the seed in
//                lexicographic frequency order.
// BlockExtremal: one frequency per dyadic block with |k|_1 <= K (the
//                lexicographically smallest corner of the block), coefficient
//                2^{-(a|k|_1 + b|k|_inf)} (1+|k|_1)^{-(1/2+delta)}.  Fully
//                deterministic; the seed field is accepted and unused.
// ProductDecay:  cube |l_j| <= L with c_l = prod_j (1+|l_j|)^{-p}.
struct CubePoly {
  int L = 0;
  std::uint64_t seed = 0;
};
struct BlockExtremal {
  double a = 0.0;
  double b = 0.0;
  int K = 0;
  double delta = 0.0;
  std::uint64_t seed = 0;
};
struct ProductDecay {
  double p = 0.0;
  int L = 0;
};
using TestFamily = std::variant<CubePoly, BlockExtremal, ProductDecay>;

// Build the function in dimension d.  TooLarge above 10^7 coefficients.
SpectralFunction materialize(const TestFamily& fam, int d);

// Parse a family description such as
//   "cubepoly:L=16,seed=7"
//   "blockextremal:alpha=2,beta=0,K=12,delta=0.5,seed=1"
//   "productdecay:p=2,L=32"
TestFamily parse_family(const std::string& text);
std::string family_to_string(const TestFamily& fam);

// Membership margin diagnostic: the dyadic weighted norm of f for (a, b).
double hab_membership_margin(const SpectralFunction& f, double a, double b);

}  // namespace sgr

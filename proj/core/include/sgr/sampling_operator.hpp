#pragma once

#include <cstdint>
#include <span>

#include "sgr/index_set.hpp"
#include "sgr/spectral.hpp"

namespace sgr {

// Tensor dyadic-difference piece q_k = eta_{k_1} x ... x eta_{k_d}, realized
// in frequency space axis by axis.
SpectralFunction q_k(const SpectralFunction& f, const MultiIndex& k);

// Sparse-grid interpolation operator Q = sum_{k in s} q_k.  The pieces are
// independent; with threads > 1 they are computed concurrently, and the sum
// is always reduced in the lexicographic member order, so the result does
// not depend on the thread count or enumeration order.
SpectralFunction apply_Q(const SpectralFunction& f, const IndexSet& s,
                         int threads = 1);

// Same operator with an explicit enumeration order over s.members(); the
// reduction stays canonical, which is what makes apply_Q order independent.
SpectralFunction apply_Q_enumerated(const SpectralFunction& f,
                                    const IndexSet& s,
                                    std::span<const std::size_t> order);

// Sample-point accounting for Q.  Every piece q_k evaluates its input on the
// two per-axis interpolation grids (sizes 2^{k_j+1}+1 and 2^{k_j}+1, a single
// 3-node grid at level 0); the multiset count adds those up over the tensor
// products, the distinct count identifies shared points exactly through
// reduced node fractions l/(2m+1) of 2 pi.
struct GridReport {
  std::int64_t multiset_count = 0;
  std::int64_t distinct_count = 0;
};
GridReport sampling_grid(const IndexSet& s);

// Distinct sample points as reduced fractions (num, den) of 2 pi per axis,
// lexicographically sorted.  Supports d <= 4.
std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>>
sampling_grid_points(const IndexSet& s);

// Reproduction test: random trigonometric polynomials supported on the
// hyperbolic cross of s must be fixed points of Q (solid s only).
struct ReproductionResult {
  bool pass = false;
  double max_rel_error = 0.0;
};
ReproductionResult reproduction_check(const IndexSet& s, int trials,
                                      std::uint64_t seed, double tol = 1e-10);

}  // namespace sgr

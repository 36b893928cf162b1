#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "sgr/errors.hpp"
#include "sgr/index_set.hpp"
#include "sgr/multi_index.hpp"
#include "sgr/rng.hpp"
#include "sgr/sampling_operator.hpp"
#include "sgr/spectral.hpp"
#include "support/oracles.hpp"

using namespace sgr;

namespace {

MultiIndex mi(std::vector<int> v) { return MultiIndex(std::move(v)); }

SpectralFunction random_cube(Rng& rng, int d, int band, int modes) {
  SpectralFunction f(d);
  for (int i = 0; i < modes; ++i) {
    FreqVec freq(static_cast<std::size_t>(d));
    for (auto& v : freq) v = static_cast<int>(rng.uniform_int(-band, band));
    f.add(freq, rng.unit_disc());
  }
  return f;
}

IndexSet custom_set(int d, std::vector<MultiIndex> members) {
  return IndexSet(d, SetFamily::Custom, SmoothnessParams{}, std::nullopt,
                  std::nullopt, std::move(members));
}

}  // namespace

TEST_CASE("difference pieces match the signed-interpolation oracle") {
  Rng rng(4201);
  const SpectralFunction f = random_cube(rng, 2, 7, 25);
  for (int k1 = 0; k1 <= 3; ++k1) {
    for (int k2 = 0; k2 <= 3; ++k2) {
      const SpectralFunction got = q_k(f, mi({k1, k2}));
      const oracle::CoeffMap want = oracle::q_k(f, {k1, k2});
      CHECK(oracle::max_abs_diff(want, got) <= 1e-10);
    }
  }
}

TEST_CASE("pieces vanish exactly on input already inside the coarser band") {
  Rng rng(88);
  // Band 1 per axis, so both stacked interpolants of any level >= 1
  // reproduce it and their difference cancels to exact zero.
  const SpectralFunction f = random_cube(rng, 2, 1, 6);
  CHECK(q_k(f, mi({1, 0})).support_size() == 0);
  CHECK(q_k(f, mi({0, 2})).support_size() == 0);
  CHECK(q_k(f, mi({2, 3})).support_size() == 0);
  // The base piece is the 3-node interpolant, which keeps band-1 input.
  CHECK(q_k(f, mi({0, 0})) == f);
}

TEST_CASE("piece levels must match the function dimension") {
  SpectralFunction f(2);
  f.add({1, 0}, 1.0);
  CHECK_THROWS_AS(q_k(f, mi({1})), error);
  try {
    q_k(f, mi({1}));
  } catch (const error& e) {
    CHECK(e.code() == errc::dimension_mismatch);
  }
}

TEST_CASE("summing pieces over a full box telescopes to one interpolation") {
  Rng rng(501);
  const SpectralFunction f = random_cube(rng, 2, 40, 30);
  std::vector<MultiIndex> box;
  for (int k1 = 0; k1 <= 3; ++k1)
    for (int k2 = 0; k2 <= 3; ++k2) box.push_back(mi({k1, k2}));
  const SpectralFunction got = apply_Q(f, custom_set(2, box));
  const oracle::CoeffMap want = oracle::tensor_interp(f, {8, 8});
  const double scale = norm(f, NormKind::l2());
  CHECK(oracle::max_abs_diff(want, got) <= 1e-12 * scale);
}

TEST_CASE("operator equals the member-ordered sum of its pieces") {
  Rng rng(1234);
  const SpectralFunction f = random_cube(rng, 2, 20, 40);
  const IndexSet s = energy_set(SmoothnessParams{2, 2.0, 0.0, 1.0, 0.0}, 6.0);
  const SpectralFunction got = apply_Q(f, s);
  SpectralFunction manual(2);
  for (const auto& k : s.members()) manual += q_k(f, k);
  CHECK(got == manual);
}

TEST_CASE("thread count and enumeration order never change a single bit") {
  Rng rng(777);
  const SpectralFunction f = random_cube(rng, 2, 20, 40);
  const IndexSet s = energy_set(SmoothnessParams{2, 2.0, 0.0, 1.0, 0.0}, 6.0);
  const SpectralFunction one = apply_Q(f, s, 1);
  const SpectralFunction four = apply_Q(f, s, 4);
  const SpectralFunction autod = apply_Q(f, s, 0);
  CHECK(one == four);
  CHECK(one == autod);

  std::vector<std::size_t> order(s.members().size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::reverse(order.begin(), order.end());
  CHECK(apply_Q_enumerated(f, s, order) == one);

  // A mid-sized rotation exercises a genuinely shuffled evaluation order.
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::rotate(order.begin(), order.begin() + order.size() / 3, order.end());
  CHECK(apply_Q_enumerated(f, s, order) == one);
}

TEST_CASE("enumerated application validates its order") {
  Rng rng(5);
  const SpectralFunction f = random_cube(rng, 2, 4, 5);
  const IndexSet s = smolyak_set(2, 1);
  std::vector<std::size_t> short_order = {0, 1};
  try {
    apply_Q_enumerated(f, s, short_order);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_params);
  }
  std::vector<std::size_t> out_of_range = {0, 1, 3};
  try {
    apply_Q_enumerated(f, s, out_of_range);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_params);
  }
}

TEST_CASE("operator reproduces polynomials on its hyperbolic cross") {
  const IndexSet s = smolyak_set(2, 3);
  const ReproductionResult rep = reproduction_check(s, 5, 77);
  CHECK(rep.pass);
  CHECK(rep.max_rel_error <= 1e-10);
}

TEST_CASE("reproduction check rejects bad inputs") {
  const IndexSet s = smolyak_set(2, 2);
  try {
    reproduction_check(s, 0, 1);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_params);
  }
  const IndexSet punctured = custom_set(2, {mi({0, 0}), mi({1, 1})});
  try {
    reproduction_check(punctured, 1, 1);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::not_solid);
  }
}

TEST_CASE("grid accounting matches hand counts") {
  // Per-axis sample counts are 3 at level 0 and 3*2^k + 2 above.
  const GridReport line1 = sampling_grid(smolyak_set(1, 1));
  CHECK(line1.multiset_count == 11);  // 3 + 8
  CHECK(line1.distinct_count == 7);   // thirds and fifths share only 0

  const GridReport line2 = sampling_grid(smolyak_set(1, 2));
  CHECK(line2.multiset_count == 25);  // 3 + 8 + 14
  CHECK(line2.distinct_count == 13);  // 1 + 2 + 4 + 6 new nodes per level

  const GridReport plane = sampling_grid(smolyak_set(2, 2));
  CHECK(plane.multiset_count == 205);
  // Axis unions are nested (3, 7, 13 nodes), so inclusion-exclusion over
  // U0 x U2, U1 x U1, U2 x U0 gives 39 + 49 + 39 - 21 - 9 - 21 + 9.
  CHECK(plane.distinct_count == 85);

  const IndexSet energy = energy_set(SmoothnessParams{2, 2.0, 0.0, 1.0, 0.0}, 4.0);
  const GridReport er = sampling_grid(energy);
  CHECK(er.multiset_count == 885);
  CHECK(er.distinct_count <= er.multiset_count);
  // The multiset stays under 2^{2d} times the dyadic block-count sum.
  CHECK(er.multiset_count <= 16 * dyadic_count_sum(energy));
}

TEST_CASE("distinct-grid accounting is capped at four dimensions") {
  try {
    sampling_grid(smolyak_set(5, 1));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::too_large);
  }
}

TEST_CASE("grid points are reduced fractions of the full circle") {
  const auto base = sampling_grid_points(custom_set(1, {mi({0})}));
  std::set<std::pair<std::int64_t, std::int64_t>> base_set;
  for (const auto& pt : base) base_set.insert(pt.at(0));
  CHECK(base_set == std::set<std::pair<std::int64_t, std::int64_t>>{
                        {0, 1}, {1, 3}, {2, 3}});

  const auto pts = sampling_grid_points(smolyak_set(1, 1));
  std::set<std::pair<std::int64_t, std::int64_t>> got;
  for (const auto& pt : pts) got.insert(pt.at(0));
  const std::set<std::pair<std::int64_t, std::int64_t>> want = {
      {0, 1}, {1, 3}, {2, 3}, {1, 5}, {2, 5}, {3, 5}, {4, 5}};
  CHECK(got == want);
  for (const auto& [num, den] : got) {
    CHECK(std::gcd(num, den) == 1);
    CHECK(num >= 0);
    CHECK(num < den);
  }
}

TEST_CASE("sampling norm of a single mode matches the block expansion") {
  SpectralFunction f(1);
  f.add({3}, 1.0);
  // Pieces of e^{3ix}: level 0 folds to frequency 0 (energy 1, weight 1),
  // level 1 is e^{-2ix} - 1 (energy 2, weight 4), level 2 restores the mode
  // and cancels the fold (energy 2, weight 16); total 41 * 2 pi.
  const double want = std::sqrt(41.0 * 2.0 * std::numbers::pi);
  CHECK(sampling_norm_plus(f, 1.0, 0.0) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("sampling norm requires weights above one half") {
  SpectralFunction f(1);
  f.add({1}, 1.0);
  for (auto [a, b] : {std::pair{0.5, 0.0}, std::pair{1.0, -0.6}}) {
    try {
      sampling_norm_plus(f, a, b);
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code() == errc::invalid_params);
    }
  }
}

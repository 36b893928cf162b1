#include <doctest.h>

#include "sgr/index_set.hpp"

using namespace sgr;

namespace {

MultiIndex mi(std::vector<int> v) { return MultiIndex(std::move(v)); }

}  // namespace

TEST_CASE("smolyak simplex has binomial cardinality") {
  // |{ k in N_0^d : |k|_1 <= m }| = binom(m+d, d)
  CHECK(smolyak_set(1, 0).size() == 1);
  CHECK(smolyak_set(1, 5).size() == 6);
  CHECK(smolyak_set(2, 3).size() == 10);
  CHECK(smolyak_set(3, 4).size() == 35);
  CHECK(smolyak_set(4, 2).size() == 15);
}

TEST_CASE("energy set at (2,0,1), xi=4 matches the hand enumeration") {
  SmoothnessParams p{2, 2.0, 0.0, 1.0, 0.0};
  const IndexSet s = energy_set(p, 4.0);
  // 2|k|_1 - |k|_inf <= 4, solved by hand.
  const std::vector<MultiIndex> want = {
      mi({0, 0}), mi({0, 1}), mi({0, 2}), mi({0, 3}), mi({0, 4}),
      mi({1, 0}), mi({1, 1}), mi({1, 2}),
      mi({2, 0}), mi({2, 1}),
      mi({3, 0}),
      mi({4, 0})};
  CHECK(s.members() == want);
  CHECK(s.max_level() == 4);
  CHECK(s.contains(mi({2, 1})));
  CHECK_FALSE(s.contains(mi({2, 2})));
  CHECK(dyadic_count_sum(s) == 81);
}

TEST_CASE("epsilon modification only enlarges the energy set") {
  for (double xi : {2.0, 4.5, 7.0}) {
    SmoothnessParams p{2, 2.0, 0.0, 1.0, 0.5};
    const IndexSet plain = energy_set(p, xi);
    const IndexSet mod = energy_set_eps(p, xi);
    for (const auto& k : plain.members()) CHECK(mod.contains(k));
  }
}

TEST_CASE("set constructors reject out-of-domain parameters") {
  SmoothnessParams flat{2, 1.0, 0.0, 1.0, 0.0};  // alpha == gamma - beta
  CHECK_THROWS_AS(energy_set(flat, 5.0), error);
  try {
    energy_set(flat, 5.0);
  } catch (const error& e) {
    CHECK(e.code() == errc::infinite_set);
  }

  SmoothnessParams neg{2, 2.0, 1.0, 0.5, 0.0};  // gamma - beta < 0
  try {
    energy_set(neg, 5.0);
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_params);
  }

  SmoothnessParams p{2, 2.0, 0.0, 1.0, 1.5};  // eps >= gamma - beta
  CHECK_THROWS_AS(energy_set_eps(p, 5.0), error);

  SmoothnessParams ok{2, 2.0, 0.0, 1.0, 0.0};
  CHECK_THROWS_AS(energy_set(ok, 0.0), error);  // xi must be positive
  CHECK_THROWS_AS(smolyak_set(2, -1), error);
  CHECK_THROWS_AS(smolyak_set(0, 3), error);
}

TEST_CASE("generated sets are solid, a punctured set is not") {
  SmoothnessParams p{3, 2.0, 0.0, 1.0, 0.25};
  CHECK(is_solid(energy_set(p, 6.0)));
  CHECK(is_solid(energy_set_eps(p, 6.0)));
  CHECK(is_solid(smolyak_set(2, 6)));

  const IndexSet punctured(2, SetFamily::Custom, SmoothnessParams{}, {}, {},
                           {mi({0, 0}), mi({1, 1})});
  CHECK_FALSE(is_solid(punctured));
}

TEST_CASE("custom sets are sorted, deduplicated, dimension checked") {
  const IndexSet s(2, SetFamily::Custom, SmoothnessParams{}, {}, {},
                   {mi({1, 0}), mi({0, 0}), mi({1, 0})});
  CHECK(s.size() == 2);
  CHECK(s.members().front() == mi({0, 0}));

  CHECK_THROWS_AS(IndexSet(2, SetFamily::Custom, SmoothnessParams{}, {}, {},
                           {mi({1, 2, 3})}),
                  error);
}

TEST_CASE("hyperbolic cross unions the blocks of all members") {
  // d=1, levels {0,1,2} cover exactly the frequencies -3..3.
  const FrequencySet cross1 = hyperbolic_cross(smolyak_set(1, 2));
  CHECK(cross1.size() == 7);
  for (int l = -3; l <= 3; ++l) CHECK(cross1.count({l}) == 1);

  // d=2, members {(0,0),(1,0)}: the constant block plus P_1 x P_0.
  const IndexSet s(2, SetFamily::Custom, SmoothnessParams{}, {}, {},
                   {mi({0, 0}), mi({1, 0})});
  const FrequencySet cross2 = hyperbolic_cross(s);
  const FrequencySet want = {{-1, 0}, {0, 0}, {1, 0}};
  CHECK(cross2 == want);
}

TEST_CASE("dyadic count sum adds tensor block sizes") {
  CHECK(dyadic_count_sum(smolyak_set(1, 4)) == 31);   // 1+2+4+8+16
  CHECK(dyadic_count_sum(smolyak_set(2, 2)) == 17);   // 1+2+2+4+4+4
  // Overflow guard: a single level-62 member is over the line.
  const IndexSet big(1, SetFamily::Custom, SmoothnessParams{}, {}, {},
                     {mi({62})});
  CHECK_THROWS_AS(dyadic_count_sum(big), error);
}

TEST_CASE("psi weight is linear in the level norms") {
  CHECK(weight_psi(mi({2, 1}), 1.0, 0.5) == doctest::Approx(4.0));
  CHECK(weight_psi(mi({3, 0, 0}), 2.0, -0.5) == doctest::Approx(4.5));
  CHECK_THROWS_AS(weight_psi(mi({1, 1}), 0.5, -0.5), error);
}

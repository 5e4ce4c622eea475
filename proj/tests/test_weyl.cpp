#include <algorithm>
#include <set>

#include "bbsuper/error.hpp"
#include "bbsuper/weyl.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bbsuper;
using namespace bbsuper::testing;

TEST_CASE("orbit_frontier") {
  SUBCASE("imaginary rank 1 has trivial W") {
    const auto orbit = orbit_frontier(neg2(), Weight::zero(1), 10);
    REQUIRE(orbit.size() == 1);
    CHECK(orbit[0].word.empty());
    CHECK(orbit[0].defect.is_zero());
  }
  SUBCASE("sl2 at 2Lambda") {
    const auto orbit = orbit_frontier(sl2(), lambda1(2), 4);
    REQUIRE(orbit.size() == 2);
    CHECK(orbit[0].sign == 1);
    CHECK(orbit[0].defect == q(0));
    CHECK(orbit[1].sign == -1);
    CHECK(orbit[1].defect == q(3));
    CHECK(orbit[1].word == std::vector<std::size_t>{0});
    CHECK(orbit_frontier(sl2(), lambda1(2), 2).size() == 1);
    CHECK(orbit_frontier(sl2(), lambda1(2), 3).size() == 2);
  }
  SUBCASE("A2 orbit of rho") {
    const auto orbit = orbit_frontier(a2(), Weight::zero(2), 4);
    std::vector<int> heights;
    for (const auto& w : orbit) heights.push_back(w.defect.height());
    CHECK(heights == std::vector<int>{0, 1, 1, 3, 3, 4});
    CHECK(orbit.back().sign == -1);
    CHECK(orbit_frontier(a2(), Weight::zero(2), 3).size() == 5);
  }
  CHECK_THROWS_AS(orbit_frontier(osp12(), lambda1(1), 3), Error);
  CHECK_THROWS_AS(orbit_frontier(sl2(), lambda1(-1), 3), Error);
}

TEST_CASE("orbit invariants") {
  const auto d = validate_datum({{2, -1, 0}, {-1, 2, -1}, {0, -1, -2}}, {1, 1, 1}, {});
  const Weight lambda = Weight::fundamental_weight(3, 0) + Weight::fundamental_weight(3, 2, 2);
  const Weight start = lambda + canonical_rho(d);
  const auto small = orbit_frontier(d, lambda, 4);
  const auto large = orbit_frontier(d, lambda, 7);
  std::set<std::vector<int>> seen;
  for (const auto& w : large) {
    CHECK(w.sign == (w.word.size() % 2 ? -1 : 1));
    CHECK(w.image == start - Weight::from_root(w.defect));
    Weight replay = start;
    for (auto i : w.word) replay = reflect(d, i, replay);
    CHECK(replay == w.image);
    CHECK(seen.insert({w.defect.coeffs().begin(), w.defect.coeffs().end()}).second);
  }
  for (const auto& w : small)
    CHECK(std::any_of(large.begin(), large.end(), [&](const OrbitElement& x) { return x.image == w.image; }));
}

TEST_CASE("act_on_root") {
  CHECK(act_on_root(a2(), {}, RootCombination{2, 5}) == RootCombination{2, 5});
  const std::vector<std::size_t> r1{0};
  CHECK(act_on_root(sl2(), r1, RootCombination{1}) == RootCombination{-1});
  CHECK(act_on_root(a2(), r1, RootCombination{0, 1}) == RootCombination{1, 1});
  const std::vector<std::size_t> w0{0, 1, 0};
  CHECK(act_on_root(a2(), w0, RootCombination{1, 0}) == RootCombination{0, -1});
}

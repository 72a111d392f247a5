#include <doctest.h>

#include <cmath>
#include <random>

#include "linevote/line_model.hpp"

using namespace linevote;

namespace {

const double kAlphaStar = (3.0 - std::sqrt(5.0)) / 2.0;
const std::vector<Position> kAlts{0, 4, 10};

}  // namespace

TEST_CASE("distance") {
  CHECK(distance(3, 3) == 0);
  CHECK(distance(0, 10) == 10);
  CHECK(distance(9, 4) == 5);
  CHECK(distance(4, 9) == 5);
}

TEST_CASE("favorite breaks exact ties by policy") {
  CHECK(favorite(2, kAlts, TiePolicy::Leftward) == 0);
  CHECK(favorite(2, kAlts, TiePolicy::Rightward) == 1);
  CHECK(favorite(9, kAlts, TiePolicy::Leftward) == 2);
  CHECK(favorite(9, kAlts, TiePolicy::Rightward) == 2);
}

TEST_CASE("favorite with co-located alternatives picks the smaller index") {
  const std::vector<Position> alts{1, 3, 3, 5};
  CHECK(favorite(3, alts, TiePolicy::Leftward) == 1);
  CHECK(favorite(3, alts, TiePolicy::Rightward) == 1);
  CHECK(favorite(4, alts, TiePolicy::Leftward) == 1);
  CHECK(favorite(4, alts, TiePolicy::Rightward) == 3);
}

TEST_CASE("preference_order") {
  CHECK(preference_order(2, kAlts, TiePolicy::Leftward) == std::vector<std::size_t>{0, 1, 2});
  CHECK(preference_order(10, kAlts, TiePolicy::Leftward) == std::vector<std::size_t>{2, 1, 0});
  CHECK(preference_order(2, kAlts, TiePolicy::Rightward) == std::vector<std::size_t>{1, 0, 2});
  CHECK(preference_order(5, std::vector<Position>{5}, TiePolicy::Rightward) ==
        std::vector<std::size_t>{0});
}

TEST_CASE("favorite and preference_order agree with brute force on random data") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(0, 12);
  std::uniform_int_distribution<int> size(1, 7);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Position> alts(size(rng));
    for (auto& x : alts) x = coord(rng);
    std::sort(alts.begin(), alts.end());
    const Position agent = coord(rng);
    for (auto tie : {TiePolicy::Leftward, TiePolicy::Rightward}) {
      const std::size_t fav = favorite(agent, alts, tie);
      double best = 1e300;
      for (double x : alts) best = std::min(best, distance(agent, x));
      REQUIRE(distance(agent, alts[fav]) == best);

      const auto order = preference_order(agent, alts, tie);
      REQUIRE(order.size() == alts.size());
      REQUIRE(order.front() == fav);
      auto sorted = order;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) REQUIRE(sorted[i] == i);
      for (std::size_t i = 1; i < order.size(); ++i) {
        REQUIRE(distance(agent, alts[order[i - 1]]) <= distance(agent, alts[order[i]]));
      }
    }
  }
}

TEST_CASE("quantile_index") {
  CHECK(quantile_index(0.0, 3) == 1);
  CHECK(quantile_index(kAlphaStar, 2) == 1);
  CHECK(quantile_index(kAlphaStar, 5) == 2);
  CHECK(quantile_index(1.0, 7) == 7);
  CHECK(quantile_index(0.5, 4) == 2);
  CHECK(quantile_index(0.5, 5) == 3);
  // 0.3 * 10 evaluates to 3.0000000000000004 in binary floating point
  CHECK(quantile_index(0.3, 10) == 3);
  CHECK(quantile_index(0.7, 10) == 7);

  SUBCASE("nondecreasing in alpha") {
    for (std::size_t m = 1; m <= 12; ++m) {
      std::size_t prev = 1;
      for (int i = 0; i <= 1000; ++i) {
        const std::size_t r = quantile_index(i / 1000.0, m);
        REQUIRE(r >= prev);
        REQUIRE(r >= 1);
        REQUIRE(r <= m);
        prev = r;
      }
      REQUIRE(quantile_index(1.0, m) == m);
    }
  }
}

TEST_CASE("validate_instance reports every violation") {
  SUBCASE("valid") {
    auto r = validate_instance({{0}, {{1}, {2}}});
    CHECK(r.ok());
    CHECK(r.instance().num_districts() == 2);
  }
  SUBCASE("empty district") {
    auto r = validate_instance({{0}, {{}}});
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0] == "district 0 empty");
  }
  SUBCASE("no alternatives") {
    auto r = validate_instance({{}, {{0}}});
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0] == "no alternatives");
  }
  SUBCASE("several at once") {
    auto r = validate_instance({{NAN}, {{1}, {}, {2, INFINITY}}});
    CHECK(r.violations == std::vector<std::string>{"alternative 0 not finite", "district 1 empty",
                                                   "district 2 agent 1 not finite"});
    CHECK_THROWS_AS(r.instance(), InvalidInstance);
  }
  SUBCASE("canonical sorting") {
    auto r = validate_instance({{10, 0, 4}, {{2, 0}, {10, 9}}});
    REQUIRE(r.ok());
    CHECK(r.alternatives == std::vector<Position>{0, 4, 10});
    CHECK(r.districts == std::vector<District>{{0, 2}, {9, 10}});
  }
}

TEST_CASE("Instance constructor throws with located violations") {
  try {
    Instance bad({}, {{1}, {}});
    FAIL("expected InvalidInstance");
  } catch (const InvalidInstance& e) {
    CHECK(e.violations().size() == 2);
    CHECK(std::string(e.what()).find("district 1 empty") != std::string::npos);
  }
}

TEST_CASE("transform") {
  const Instance inst({0, 4, 10}, {{0, 2}, {9, 10}});
  CHECK(transform(inst, 7, 1).alternatives() == std::vector<Position>{7, 11, 17});
  CHECK(transform(inst, 0, 2).district(0) == District{0, 4});
  CHECK(transform(inst, 0, 1) == inst);
  CHECK_THROWS_AS(transform(inst, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(transform(inst, 0, -1), std::invalid_argument);

  SUBCASE("favorite index is invariant") {
    for (double scale : {0.5, 1.0, 3.0}) {
      for (double shift : {-5.0, 0.0, 2.0}) {
        const Instance t = transform(inst, shift, scale);
        for (Position agent : {0.0, 2.0, 5.0, 7.0, 9.0}) {
          for (auto tie : {TiePolicy::Leftward, TiePolicy::Rightward}) {
            CHECK(favorite(scale * agent + shift, t.alternatives(), tie) ==
                  favorite(agent, inst.alternatives(), tie));
          }
        }
      }
    }
  }
}

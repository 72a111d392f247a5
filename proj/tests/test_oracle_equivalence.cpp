#include <doctest.h>

#include "linevote/distortion.hpp"
#include "support.hpp"

using namespace linevote;

TEST_CASE("worked example agrees with the brute-force oracle") {
  const oracle::Instance e1{{0, 4, 10}, {{0, 2}, {9, 10}}};
  const auto alr = oracle::evaluate(e1, oracle::Mechanism::ALR, support::kAlphaStar, true,
                                    oracle::Goal::AvgMax);
  CHECK(alr.outcome.winner == 0);
  CHECK(alr.optimal == 1);
  CHECK(alr.distortion == 1.2);
  const auto rol = oracle::evaluate(e1, oracle::Mechanism::ROL, support::kAlphaStar, true,
                                    oracle::Goal::MaxAvg);
  CHECK(rol.outcome.winner == 2);
  CHECK(rol.distortion == 18.0 / 11.0);
}

TEST_CASE("library matches the oracle on a small exhaustive family") {
  auto cfg = support::small_family();
  cfg.max_alternatives = 2;
  cfg.grid = 3;
  const auto family = support::exhaustive_family(cfg);
  for (const auto& inst : family) {
    const auto o = support::to_oracle(inst);
    for (bool leftward : {true, false}) {
      const TiePolicy tie = leftward ? TiePolicy::Leftward : TiePolicy::Rightward;
      for (auto preset : {Preset::ALR, Preset::ROL}) {
        const auto mech = preset == Preset::ALR ? oracle::Mechanism::ALR : oracle::Mechanism::ROL;
        const auto goal = preset == Preset::ALR ? oracle::Goal::AvgMax : oracle::Goal::MaxAvg;
        const auto expected = oracle::evaluate(o, mech, 0.5, leftward, goal);
        const auto run = run_mechanism(inst, make_preset(preset, 0.5, tie));
        const auto got = evaluate(inst, make_preset(preset, 0.5, tie), matching_objective(preset));
        REQUIRE(run.representatives == expected.outcome.representatives);
        REQUIRE(got.winner_index == expected.outcome.winner);
        REQUIRE(got.optimal_index == expected.optimal);
        REQUIRE(got.distortion == expected.distortion);
      }
    }
  }
}

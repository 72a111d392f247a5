#include "linevote/mechanisms.hpp"

#include <algorithm>
#include <stdexcept>

namespace linevote {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

}  // namespace

DistrictRule DistrictRule::alpha_quantile_agent(double alpha) {
  check_alpha(alpha);
  return DistrictRule(Kind::AlphaQuantileAgentFavorite, alpha);
}

WinnerRule WinnerRule::alpha_quantile_leftmost(double alpha) {
  check_alpha(alpha);
  return WinnerRule(Kind::AlphaQuantileLeftmost, alpha);
}

MechanismSpec preset_alr(double alpha, TiePolicy tie) {
  return {DistrictRule::rightmost_agent(), WinnerRule::alpha_quantile_leftmost(alpha), tie};
}

MechanismSpec preset_rol(double alpha, TiePolicy tie) {
  return {DistrictRule::alpha_quantile_agent(alpha), WinnerRule::rightmost(), tie};
}

std::string to_string(Preset preset) { return preset == Preset::ALR ? "alr" : "rol"; }

MechanismSpec make_preset(Preset preset, double alpha, TiePolicy tie) {
  return preset == Preset::ALR ? preset_alr(alpha, tie) : preset_rol(alpha, tie);
}

Objective matching_objective(Preset preset) {
  return preset == Preset::ALR ? Objective::AvgMax : Objective::MaxAvg;
}

std::size_t designated_agent(std::size_t district_size, const DistrictRule& rule) {
  switch (rule.kind()) {
    case DistrictRule::Kind::RightmostAgentFavorite: return district_size - 1;
    case DistrictRule::Kind::LeftmostAgentFavorite: return 0;
    case DistrictRule::Kind::AlphaQuantileAgentFavorite:
      return quantile_index(rule.alpha(), district_size) - 1;
  }
  return 0;
}

std::size_t district_representative(std::span<const Position> district,
                                    std::span<const Position> alternatives,
                                    const DistrictRule& rule, TiePolicy tie) {
  return favorite(district[designated_agent(district.size(), rule)], alternatives, tie);
}

std::size_t select_winner(std::span<const std::size_t> representatives,
                          std::span<const Position> alternatives, const WinnerRule& rule) {
  std::vector<std::size_t> ordered(representatives.begin(), representatives.end());
  std::sort(ordered.begin(), ordered.end(), [&](std::size_t a, std::size_t b) {
    if (alternatives[a] != alternatives[b]) return alternatives[a] < alternatives[b];
    return a < b;
  });

  switch (rule.kind()) {
    case WinnerRule::Kind::Leftmost: return ordered.front();
    case WinnerRule::Kind::Rightmost: {
      // smallest index among those at the maximum position
      const Position right = alternatives[ordered.back()];
      return *std::find_if(ordered.begin(), ordered.end(),
                           [&](std::size_t i) { return alternatives[i] == right; });
    }
    case WinnerRule::Kind::AlphaQuantileLeftmost:
      return ordered[quantile_index(rule.alpha(), ordered.size()) - 1];
  }
  return ordered.front();
}

MechanismRun run_mechanism(const Instance& inst, const MechanismSpec& spec) {
  MechanismRun run;
  run.representatives.reserve(inst.num_districts());
  for (const auto& agents : inst.districts()) {
    run.representatives.push_back(
        district_representative(agents, inst.alternatives(), spec.district_rule, spec.tie));
  }
  run.winner = select_winner(run.representatives, inst.alternatives(), spec.winner_rule);
  return run;
}

}  // namespace linevote

#include "linevote/objectives.hpp"

#include <algorithm>

namespace linevote {

std::string to_string(Objective obj) {
  switch (obj) {
    case Objective::AvgAvg: return "avg-avg";
    case Objective::MaxMax: return "max-max";
    case Objective::AvgMax: return "avg-max";
    case Objective::MaxAvg: return "max-avg";
  }
  return "?";
}

std::optional<Objective> parse_objective(std::string_view name) {
  for (auto obj : {Objective::AvgAvg, Objective::MaxMax, Objective::AvgMax,
                   Objective::MaxAvg}) {
    if (name == to_string(obj)) return obj;
  }
  return std::nullopt;
}

double district_avg(std::span<const Position> district, Position x) {
  double sum = 0.0;
  for (Position agent : district) sum += distance(agent, x);
  return sum / static_cast<double>(district.size());
}

double district_max(std::span<const Position> district, Position x) {
  double worst = 0.0;
  for (Position agent : district) worst = std::max(worst, distance(agent, x));
  return worst;
}

double cost(const Instance& inst, Position x, Objective obj) {
  const bool inner_avg = obj == Objective::AvgAvg || obj == Objective::MaxAvg;
  const bool outer_avg = obj == Objective::AvgAvg || obj == Objective::AvgMax;

  double acc = 0.0;
  for (const auto& agents : inst.districts()) {
    const double v = inner_avg ? district_avg(agents, x) : district_max(agents, x);
    acc = outer_avg ? acc + v : std::max(acc, v);
  }
  return outer_avg ? acc / static_cast<double>(inst.num_districts()) : acc;
}

OptimalAlternative optimal_alternative(const Instance& inst, Objective obj) {
  OptimalAlternative best{0, cost(inst, inst.alternative(0), obj)};
  for (std::size_t i = 1; i < inst.num_alternatives(); ++i) {
    const double c = cost(inst, inst.alternative(i), obj);
    if (c < best.cost) best = {i, c};
  }
  return best;
}

}  // namespace linevote

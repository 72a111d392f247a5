#pragma once

// The four composed social-cost objectives: an aggregator over districts
// applied to an aggregator within each district.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "linevote/line_model.hpp"

namespace linevote {

/// Named as <over districts><within district>.
enum class Objective { AvgAvg, MaxMax, AvgMax, MaxAvg };

std::string to_string(Objective obj);
std::optional<Objective> parse_objective(std::string_view name);

double district_avg(std::span<const Position> district, Position x);
double district_max(std::span<const Position> district, Position x);

/// Objective value of placing the outcome at x; x need not be an alternative.
double cost(const Instance& inst, Position x, Objective obj);

struct OptimalAlternative {
  std::size_t index = 0;
  double cost = 0.0;
};

/// Minimizer over the alternatives only; ties go to the smaller index.
OptimalAlternative optimal_alternative(const Instance& inst, Objective obj);

}  // namespace linevote

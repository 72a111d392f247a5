#include "linevote/line_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace linevote {

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
  std::string out = "invalid instance";
  for (std::size_t i = 0; i < violations.size(); ++i) {
    out += i == 0 ? ": " : "; ";
    out += violations[i];
  }
  return out;
}

// True when alternative a is preferred to alternative b by an agent at the
// given distances. Equal positions fall back to the smaller index.
bool preferred(double dist_a, Position pos_a, std::size_t a, double dist_b,
               Position pos_b, std::size_t b, TiePolicy tie) {
  if (dist_a != dist_b) return dist_a < dist_b;
  if (pos_a != pos_b) {
    return tie == TiePolicy::Leftward ? pos_a < pos_b : pos_a > pos_b;
  }
  return a < b;
}

}  // namespace

std::string to_string(TiePolicy tie) {
  return tie == TiePolicy::Leftward ? "left" : "right";
}

InvalidInstance::InvalidInstance(std::vector<std::string> violations)
    : std::invalid_argument(join_violations(violations)),
      violations_(std::move(violations)) {}

Instance::Instance(std::vector<Position> alternatives,
                   std::vector<District> districts) {
  auto checked = validate_instance({std::move(alternatives), std::move(districts)});
  if (!checked.ok()) throw InvalidInstance(std::move(checked.violations));
  alternatives_ = std::move(checked.alternatives);
  districts_ = std::move(checked.districts);
}

std::size_t Instance::num_agents() const {
  std::size_t n = 0;
  for (const auto& d : districts_) n += d.size();
  return n;
}

Instance ValidationResult::instance() const {
  if (!ok()) throw InvalidInstance(violations);
  return Instance(alternatives, districts);
}

ValidationResult validate_instance(const RawInstance& raw) {
  ValidationResult result;
  if (raw.alternatives.empty()) result.violations.push_back("no alternatives");
  for (std::size_t i = 0; i < raw.alternatives.size(); ++i) {
    if (!std::isfinite(raw.alternatives[i])) {
      result.violations.push_back("alternative " + std::to_string(i) + " not finite");
    }
  }
  if (raw.districts.empty()) result.violations.push_back("no districts");
  for (std::size_t d = 0; d < raw.districts.size(); ++d) {
    const auto& agents = raw.districts[d];
    if (agents.empty()) {
      result.violations.push_back("district " + std::to_string(d) + " empty");
    }
    for (std::size_t i = 0; i < agents.size(); ++i) {
      if (!std::isfinite(agents[i])) {
        result.violations.push_back("district " + std::to_string(d) + " agent " +
                                    std::to_string(i) + " not finite");
      }
    }
  }
  if (!result.ok()) return result;

  result.alternatives = raw.alternatives;
  std::sort(result.alternatives.begin(), result.alternatives.end());
  result.districts = raw.districts;
  for (auto& agents : result.districts) std::sort(agents.begin(), agents.end());
  return result;
}

std::size_t favorite(Position agent, std::span<const Position> alternatives,
                     TiePolicy tie) {
  std::size_t best = 0;
  double best_dist = distance(agent, alternatives[0]);
  for (std::size_t i = 1; i < alternatives.size(); ++i) {
    const double dist = distance(agent, alternatives[i]);
    if (preferred(dist, alternatives[i], i, best_dist, alternatives[best], best, tie)) {
      best = i;
      best_dist = dist;
    }
  }
  return best;
}

std::vector<std::size_t> preference_order(Position agent,
                                          std::span<const Position> alternatives,
                                          TiePolicy tie) {
  std::vector<std::size_t> order(alternatives.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return preferred(distance(agent, alternatives[a]), alternatives[a], a,
                     distance(agent, alternatives[b]), alternatives[b], b, tie);
  });
  return order;
}

std::size_t quantile_index(double alpha, std::size_t m) {
  constexpr double kSnap = 1e-9;
  const double raw = std::ceil(alpha * static_cast<double>(m) - kSnap);
  if (raw <= 1.0) return 1;
  if (raw >= static_cast<double>(m)) return m;
  return static_cast<std::size_t>(raw);
}

Instance transform(const Instance& inst, double shift, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("transform: scale must be positive");
  auto map = [&](Position p) { return scale * p + shift; };
  std::vector<Position> alternatives = inst.alternatives();
  std::transform(alternatives.begin(), alternatives.end(), alternatives.begin(), map);
  std::vector<District> districts = inst.districts();
  for (auto& agents : districts) {
    std::transform(agents.begin(), agents.end(), agents.begin(), map);
  }
  return Instance(std::move(alternatives), std::move(districts));
}

}  // namespace linevote

#pragma once

// Adversarial search for high-distortion instances on an integer grid:
// exhaustive enumeration of a bounded family, seeded random sampling, and
// random-restart hill climbing, plus an alpha sweep over any of these.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "linevote/distortion.hpp"
#include "linevote/line_model.hpp"
#include "linevote/mechanisms.hpp"
#include "linevote/objectives.hpp"

namespace linevote {

struct ExhaustiveMode {};

struct RandomMode {
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
};

struct HillClimbMode {
  std::uint64_t restarts = 10;
  std::uint64_t steps = 100;
  std::uint64_t seed = 1;
};

using SearchMode = std::variant<ExhaustiveMode, RandomMode, HillClimbMode>;

struct SearchConfig {
  std::size_t max_districts = 2;
  std::size_t max_agents_per_district = 2;
  std::size_t max_alternatives = 3;
  int grid = 5;  // coordinates range over 0..grid
  SearchMode mode = ExhaustiveMode{};
  Preset preset = Preset::ALR;
  double alpha = 0.5;
  Objective objective = Objective::AvgMax;
  TiePolicy tie = TiePolicy::Leftward;
  /// Upper limit on the number of instances exhaustive mode may enumerate.
  std::uint64_t budget = 5'000'000;
};

/// Throws std::invalid_argument for zero limits, a negative grid or alpha
/// outside [0, 1].
void validate_config(const SearchConfig& cfg);

struct SearchResult {
  Instance best_instance;
  EvalReport best_report;
  std::uint64_t instances_evaluated = 0;
  bool bound_violated = false;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(double count, std::uint64_t budget);
  double count() const { return count_; }

 private:
  double count_;
};

/// bound_curve(alpha), or +inf at alpha = 0 and alpha = 1.
double theoretical_bound(double alpha);

/// Key used for deterministic tie-breaking between equally bad instances:
/// the alternatives, then the districts sorted lexicographically.
using CanonicalKey = std::pair<std::vector<Position>, std::vector<District>>;
CanonicalKey canonical_key(const Instance& inst);

/// The same instance with districts sorted lexicographically.
Instance canonicalize(const Instance& inst);

/// Independent stream for draw/restart `index` under `seed`.
std::mt19937_64 derive_stream(std::uint64_t seed, std::uint64_t index);

/// Uniform k, district sizes, m and integer coordinates within cfg limits.
Instance random_instance(const SearchConfig& cfg, std::mt19937_64& stream);

/// Number of instances exhaustive_search would enumerate (as a double since
/// it can overflow 64 bits for large families).
double exhaustive_count(const SearchConfig& cfg);

/// Calls `visit` for every instance of the family in lexicographic order of
/// canonical key: alternative multisets and unordered collections of agent
/// multisets.
template <typename Visit>
void enumerate_family(const SearchConfig& cfg, Visit&& visit);

SearchResult exhaustive_search(const SearchConfig& cfg);
SearchResult random_search(const SearchConfig& cfg);
SearchResult hill_climb(const SearchConfig& cfg);

/// Dispatches on cfg.mode.
SearchResult run_search(const SearchConfig& cfg);

struct SweepRow {
  double alpha = 0.0;
  double theoretical_bound = 0.0;
  double empirical_max_distortion = 0.0;
  std::uint64_t instances_evaluated = 0;
};

/// One search per alpha with every other setting taken from `base`.
std::vector<SweepRow> sweep_alpha(const SearchConfig& base, const std::vector<double>& alphas);

// ---------------------------------------------------------------------------

namespace detail {

// All nondecreasing sequences of length `len` over 0..grid.
std::vector<std::vector<Position>> grid_multisets(std::size_t len, int grid);

}  // namespace detail

template <typename Visit>
void enumerate_family(const SearchConfig& cfg, Visit&& visit) {
  std::vector<std::vector<Position>> agent_sets;
  for (std::size_t n = 1; n <= cfg.max_agents_per_district; ++n) {
    for (auto& s : detail::grid_multisets(n, cfg.grid)) agent_sets.push_back(std::move(s));
  }
  std::sort(agent_sets.begin(), agent_sets.end());

  std::vector<std::vector<Position>> alternative_sets;
  for (std::size_t m = 1; m <= cfg.max_alternatives; ++m) {
    for (auto& s : detail::grid_multisets(m, cfg.grid)) alternative_sets.push_back(std::move(s));
  }
  std::sort(alternative_sets.begin(), alternative_sets.end());

  // Collections of districts: nondecreasing index sequences into agent_sets,
  // which is the same as sorted lists of districts.
  std::vector<std::vector<District>> collections;
  std::vector<std::size_t> picks;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (!picks.empty()) {
      std::vector<District> districts;
      districts.reserve(picks.size());
      for (std::size_t p : picks) districts.push_back(agent_sets[p]);
      collections.push_back(std::move(districts));
    }
    if (picks.size() == cfg.max_districts) return;
    for (std::size_t i = from; i < agent_sets.size(); ++i) {
      picks.push_back(i);
      self(self, i);
      picks.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(collections.begin(), collections.end());

  for (const auto& alternatives : alternative_sets) {
    for (const auto& districts : collections) {
      visit(Instance(alternatives, districts));
    }
  }
}

}  // namespace linevote

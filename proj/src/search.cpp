#include "linevote/search.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace linevote {

void validate_config(const SearchConfig& cfg) {
  if (cfg.max_districts == 0 || cfg.max_agents_per_district == 0 || cfg.max_alternatives == 0) {
    throw std::invalid_argument("search limits must be at least 1");
  }
  if (cfg.grid < 0) throw std::invalid_argument("grid must be nonnegative");
  if (!(cfg.alpha >= 0.0 && cfg.alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
}

BudgetExceeded::BudgetExceeded(double count, std::uint64_t budget)
    : std::runtime_error("exhaustive family has " + std::to_string(static_cast<long double>(count)) +
                         " instances, budget is " + std::to_string(budget)),
      count_(count) {}

double theoretical_bound(double alpha) {
  if (alpha <= 0.0 || alpha >= 1.0) return std::numeric_limits<double>::infinity();
  return bound_curve(alpha);
}

CanonicalKey canonical_key(const Instance& inst) {
  CanonicalKey key{inst.alternatives(), inst.districts()};
  std::sort(key.second.begin(), key.second.end());
  return key;
}

Instance canonicalize(const Instance& inst) {
  auto key = canonical_key(inst);
  return Instance(std::move(key.first), std::move(key.second));
}

std::mt19937_64 derive_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Instance random_instance(const SearchConfig& cfg, std::mt19937_64& stream) {
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(stream);
  };
  std::uniform_int_distribution<int> coord(0, cfg.grid);

  const std::size_t k = uniform(1, cfg.max_districts);
  std::vector<District> districts(k);
  for (auto& agents : districts) {
    agents.resize(uniform(1, cfg.max_agents_per_district));
    for (auto& a : agents) a = coord(stream);
  }
  std::vector<Position> alternatives(uniform(1, cfg.max_alternatives));
  for (auto& x : alternatives) x = coord(stream);
  return Instance(std::move(alternatives), std::move(districts));
}

namespace detail {

std::vector<std::vector<Position>> grid_multisets(std::size_t len, int grid) {
  std::vector<std::vector<Position>> out;
  std::vector<Position> current;
  auto fill = [&](auto&& self, int from) -> void {
    if (current.size() == len) {
      out.push_back(current);
      return;
    }
    for (int v = from; v <= grid; ++v) {
      current.push_back(v);
      self(self, v);
      current.pop_back();
    }
  };
  fill(fill, 0);
  return out;
}

}  // namespace detail

namespace {

// C(n + r - 1, r): multisets of size r drawn from n values.
double multichoose(double n, std::size_t r) {
  double c = 1.0;
  for (std::size_t i = 1; i <= r; ++i) c = c * (n + static_cast<double>(i) - 1.0) / static_cast<double>(i);
  return c;
}

struct Scored {
  Instance instance;
  EvalReport report;
};

// Higher distortion wins; equal distortions go to the smaller canonical key.
bool better(const Scored& a, const Scored& b) {
  if (a.report.distortion != b.report.distortion) return a.report.distortion > b.report.distortion;
  return canonical_key(a.instance) < canonical_key(b.instance);
}

class Evaluator {
 public:
  explicit Evaluator(const SearchConfig& cfg)
      : cfg_(cfg), spec_(make_preset(cfg.preset, cfg.alpha, cfg.tie)) {}

  Scored operator()(Instance inst) {
    ++evaluated_;
    EvalReport report = evaluate(inst, spec_, cfg_.objective);
    return {std::move(inst), report};
  }

  void offer(Scored candidate) {
    if (!best_ || better(candidate, *best_)) best_ = std::move(candidate);
  }

  SearchResult result() const {
    SearchResult out{best_->instance, best_->report, evaluated_, false};
    out.bound_violated =
        best_->report.distortion > theoretical_bound(cfg_.alpha) * (1.0 + 1e-9);
    return out;
  }

 private:
  const SearchConfig& cfg_;
  MechanismSpec spec_;
  std::uint64_t evaluated_ = 0;
  std::optional<Scored> best_;
};

// Single-coordinate +-1 moves and single-agent district reassignments.
std::vector<Instance> neighbors(const Instance& inst, const SearchConfig& cfg) {
  std::vector<Instance> out;
  const auto& alts = inst.alternatives();
  const auto& districts = inst.districts();
  auto in_grid = [&](Position p) { return p >= 0 && p <= cfg.grid; };

  for (std::size_t i = 0; i < alts.size(); ++i) {
    for (double step : {-1.0, 1.0}) {
      if (!in_grid(alts[i] + step)) continue;
      auto moved = alts;
      moved[i] += step;
      out.emplace_back(std::move(moved), districts);
    }
  }
  for (std::size_t d = 0; d < districts.size(); ++d) {
    for (std::size_t j = 0; j < districts[d].size(); ++j) {
      for (double step : {-1.0, 1.0}) {
        if (!in_grid(districts[d][j] + step)) continue;
        auto moved = districts;
        moved[d][j] += step;
        out.emplace_back(alts, std::move(moved));
      }
      if (districts[d].size() == 1) continue;
      for (std::size_t e = 0; e < districts.size(); ++e) {
        if (e == d || districts[e].size() >= cfg.max_agents_per_district) continue;
        auto moved = districts;
        moved[e].push_back(moved[d][j]);
        moved[d].erase(moved[d].begin() + static_cast<std::ptrdiff_t>(j));
        out.emplace_back(alts, std::move(moved));
      }
    }
  }
  return out;
}

}  // namespace

double exhaustive_count(const SearchConfig& cfg) {
  const double values = static_cast<double>(cfg.grid) + 1.0;
  double alternative_sets = 0.0;
  for (std::size_t m = 1; m <= cfg.max_alternatives; ++m) alternative_sets += multichoose(values, m);
  double agent_sets = 0.0;
  for (std::size_t n = 1; n <= cfg.max_agents_per_district; ++n) agent_sets += multichoose(values, n);
  double collections = 0.0;
  for (std::size_t k = 1; k <= cfg.max_districts; ++k) collections += multichoose(agent_sets, k);
  return alternative_sets * collections;
}

SearchResult exhaustive_search(const SearchConfig& cfg) {
  validate_config(cfg);
  const double count = exhaustive_count(cfg);
  if (count > static_cast<double>(cfg.budget)) throw BudgetExceeded(count, cfg.budget);

  Evaluator eval(cfg);
  enumerate_family(cfg, [&](Instance inst) { eval.offer(eval(std::move(inst))); });
  return eval.result();
}

SearchResult random_search(const SearchConfig& cfg) {
  validate_config(cfg);
  const auto& mode = std::get<RandomMode>(cfg.mode);
  if (mode.samples == 0) throw std::invalid_argument("random search needs at least one sample");

  Evaluator eval(cfg);
  for (std::uint64_t i = 0; i < mode.samples; ++i) {
    auto stream = derive_stream(mode.seed, i);
    eval.offer(eval(random_instance(cfg, stream)));
  }
  return eval.result();
}

SearchResult hill_climb(const SearchConfig& cfg) {
  validate_config(cfg);
  const auto& mode = std::get<HillClimbMode>(cfg.mode);
  if (mode.restarts == 0) throw std::invalid_argument("hill climbing needs at least one restart");

  Evaluator eval(cfg);
  for (std::uint64_t r = 0; r < mode.restarts; ++r) {
    auto stream = derive_stream(mode.seed, r);
    Scored current = eval(random_instance(cfg, stream));
    for (std::uint64_t step = 0; step < mode.steps; ++step) {
      std::optional<Scored> next;
      for (auto& candidate : neighbors(current.instance, cfg)) {
        Scored scored = eval(std::move(candidate));
        if (scored.report.distortion <= current.report.distortion) continue;
        if (!next || better(scored, *next)) next = std::move(scored);
      }
      if (!next) break;
      current = std::move(*next);
    }
    eval.offer(std::move(current));
  }
  return eval.result();
}

SearchResult run_search(const SearchConfig& cfg) {
  return std::visit(
      [&](const auto& mode) {
        using Mode = std::decay_t<decltype(mode)>;
        if constexpr (std::is_same_v<Mode, ExhaustiveMode>) return exhaustive_search(cfg);
        else if constexpr (std::is_same_v<Mode, RandomMode>) return random_search(cfg);
        else return hill_climb(cfg);
      },
      cfg.mode);
}

std::vector<SweepRow> sweep_alpha(const SearchConfig& base, const std::vector<double>& alphas) {
  std::vector<SweepRow> rows;
  rows.reserve(alphas.size());
  for (double alpha : alphas) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
      throw std::invalid_argument("sweep alphas must lie in (0, 1)");
    }
    SearchConfig cfg = base;
    cfg.alpha = alpha;
    const SearchResult result = run_search(cfg);
    rows.push_back({alpha, bound_curve(alpha), result.best_report.distortion,
                    result.instances_evaluated});
  }
  return rows;
}

}  // namespace linevote

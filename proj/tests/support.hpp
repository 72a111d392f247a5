#pragma once

// Shared helpers for the unit and acceptance suites.

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "linevote/line_model.hpp"
#include "linevote/mechanisms.hpp"
#include "linevote/search.hpp"
#include "oracle/brute_force.hpp"

namespace support {

inline const double kAlphaStar = (3.0 - std::sqrt(5.0)) / 2.0;

inline std::vector<double> tenth_alphas() {
  std::vector<double> out;
  for (int i = 1; i <= 9; ++i) out.push_back(i / 10.0);
  return out;
}

inline oracle::Instance to_oracle(const linevote::Instance& inst) {
  return {inst.alternatives(), inst.districts()};
}

/// k <= 6, n_d <= 5, m <= 6, grid [0, 20], seeded.
inline std::vector<linevote::Instance> random_corpus(std::size_t count, std::uint64_t seed) {
  linevote::SearchConfig cfg;
  cfg.max_districts = 6;
  cfg.max_agents_per_district = 5;
  cfg.max_alternatives = 6;
  cfg.grid = 20;
  std::vector<linevote::Instance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto stream = linevote::derive_stream(seed, i);
    out.push_back(linevote::random_instance(cfg, stream));
  }
  return out;
}

/// k <= 2, n_d <= 2, m <= 3, grid [0, 5].
inline linevote::SearchConfig small_family() {
  linevote::SearchConfig cfg;
  cfg.max_districts = 2;
  cfg.max_agents_per_district = 2;
  cfg.max_alternatives = 3;
  cfg.grid = 5;
  cfg.mode = linevote::ExhaustiveMode{};
  return cfg;
}

inline std::vector<linevote::Instance> exhaustive_family(const linevote::SearchConfig& cfg) {
  std::vector<linevote::Instance> out;
  linevote::enumerate_family(cfg, [&](linevote::Instance inst) { out.push_back(std::move(inst)); });
  return out;
}

/// Everything a mechanism may look at: each agent's full preference order,
/// in district order.
inline std::vector<std::vector<std::size_t>> ordinal_profile(const linevote::Instance& inst,
                                                             linevote::TiePolicy tie) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& d : inst.districts()) {
    for (double agent : d) out.push_back(linevote::preference_order(agent, inst.alternatives(), tie));
  }
  return out;
}

/// Moves every coordinate by less than a quarter of the smallest nonzero
/// gap among positions and among agent-alternative distance differences, so
/// no strict comparison flips. Returns nullopt when the draw breaks an exact
/// tie or reorders co-located points (the ordinal profile changes).
inline std::optional<linevote::Instance> sub_gap_perturbation(const linevote::Instance& inst,
                                                              linevote::TiePolicy tie,
                                                              std::mt19937_64& rng) {
  std::vector<double> points = inst.alternatives();
  for (const auto& d : inst.districts()) points.insert(points.end(), d.begin(), d.end());
  double gap = 1.0;
  for (double p : points) {
    for (double q : points) {
      if (p != q) gap = std::min(gap, std::fabs(p - q));
    }
  }
  for (const auto& d : inst.districts()) {
    for (double a : d) {
      for (double x : inst.alternatives()) {
        for (double y : inst.alternatives()) {
          const double diff = std::fabs(std::fabs(a - x) - std::fabs(a - y));
          if (diff > 0) gap = std::min(gap, diff);
        }
      }
    }
  }
  std::uniform_real_distribution<double> jitter(-gap / 4.1, gap / 4.1);

  std::vector<double> alts = inst.alternatives();
  for (auto& x : alts) x += jitter(rng);
  std::vector<linevote::District> districts = inst.districts();
  for (auto& d : districts) {
    for (auto& a : d) a += jitter(rng);
  }
  if (!std::is_sorted(alts.begin(), alts.end())) return std::nullopt;
  for (const auto& d : districts) {
    if (!std::is_sorted(d.begin(), d.end())) return std::nullopt;
  }
  linevote::Instance moved(std::move(alts), std::move(districts));
  if (ordinal_profile(moved, tie) != ordinal_profile(inst, tie)) return std::nullopt;
  return moved;
}

}  // namespace support

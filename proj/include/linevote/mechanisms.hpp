#pragma once

// Two-step distributed mechanisms: a district rule picks one representative
// alternative per district, then a winner rule picks one representative.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "linevote/line_model.hpp"
#include "linevote/objectives.hpp"

namespace linevote {

/// Which agent of a district names the representative (via its favorite).
class DistrictRule {
 public:
  enum class Kind { RightmostAgentFavorite, LeftmostAgentFavorite, AlphaQuantileAgentFavorite };

  static DistrictRule rightmost_agent() { return DistrictRule(Kind::RightmostAgentFavorite, 0.0); }
  static DistrictRule leftmost_agent() { return DistrictRule(Kind::LeftmostAgentFavorite, 0.0); }
  /// Throws std::invalid_argument unless 0 <= alpha <= 1.
  static DistrictRule alpha_quantile_agent(double alpha);

  Kind kind() const { return kind_; }
  /// Meaningful only for AlphaQuantileAgentFavorite.
  double alpha() const { return alpha_; }

  friend bool operator==(const DistrictRule&, const DistrictRule&) = default;

 private:
  DistrictRule(Kind kind, double alpha) : kind_(kind), alpha_(alpha) {}
  Kind kind_;
  double alpha_;
};

/// Which representative becomes the overall winner.
class WinnerRule {
 public:
  enum class Kind { Rightmost, Leftmost, AlphaQuantileLeftmost };

  static WinnerRule rightmost() { return WinnerRule(Kind::Rightmost, 0.0); }
  static WinnerRule leftmost() { return WinnerRule(Kind::Leftmost, 0.0); }
  /// Throws std::invalid_argument unless 0 <= alpha <= 1.
  static WinnerRule alpha_quantile_leftmost(double alpha);

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }

  friend bool operator==(const WinnerRule&, const WinnerRule&) = default;

 private:
  WinnerRule(Kind kind, double alpha) : kind_(kind), alpha_(alpha) {}
  Kind kind_;
  double alpha_;
};

struct MechanismSpec {
  DistrictRule district_rule;
  WinnerRule winner_rule;
  TiePolicy tie = TiePolicy::Leftward;
};

struct MechanismRun {
  std::vector<std::size_t> representatives;  // alternative index per district
  std::size_t winner = 0;                    // alternative index
};

/// alpha-Leftmost-of-Rightmost: each district is represented by its
/// rightmost agent's favorite; the winner is the ceil(alpha*k)-th leftmost
/// representative.
MechanismSpec preset_alr(double alpha, TiePolicy tie = TiePolicy::Leftward);

/// Rightmost-of-alpha-Leftmost: each district is represented by the
/// favorite of its ceil(alpha*n_d)-th leftmost agent; the winner is the
/// rightmost representative.
MechanismSpec preset_rol(double alpha, TiePolicy tie = TiePolicy::Leftward);

/// The two parameterized mechanisms, each paired with the objective its
/// distortion guarantee is stated for.
enum class Preset { ALR, ROL };

std::string to_string(Preset preset);
MechanismSpec make_preset(Preset preset, double alpha, TiePolicy tie = TiePolicy::Leftward);

/// AvgMax for ALR, MaxAvg for ROL.
Objective matching_objective(Preset preset);

/// 0-based position, within the sorted district, of the agent the rule
/// designates.
std::size_t designated_agent(std::size_t district_size, const DistrictRule& rule);

std::size_t district_representative(std::span<const Position> district,
                                    std::span<const Position> alternatives,
                                    const DistrictRule& rule, TiePolicy tie);

/// Applies the winner rule to a list of representative alternative indices.
/// Co-located representatives are ordered by alternative index and counted
/// with multiplicity.
std::size_t select_winner(std::span<const std::size_t> representatives,
                          std::span<const Position> alternatives, const WinnerRule& rule);

MechanismRun run_mechanism(const Instance& inst, const MechanismSpec& spec);

}  // namespace linevote

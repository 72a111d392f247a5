#pragma once

// Instances of the distributed voting problem on the real line: alternatives
// and district-partitioned agents are points, and every ordinal quantity a
// mechanism sees (favorites, preference orders, left-to-right ranks) is
// derived from those positions here.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace linevote {

using Position = double;
using District = std::vector<Position>;

/// Direction used to break exact distance ties between alternatives.
enum class TiePolicy { Leftward, Rightward };

std::string to_string(TiePolicy tie);

/// A validated instance. Alternatives and the agents of every district are
/// kept sorted nondecreasing; district order is preserved as given.
class Instance {
 public:
  /// Throws InvalidInstance listing every violated invariant.
  Instance(std::vector<Position> alternatives, std::vector<District> districts);

  const std::vector<Position>& alternatives() const { return alternatives_; }
  const std::vector<District>& districts() const { return districts_; }
  const District& district(std::size_t d) const { return districts_.at(d); }
  Position alternative(std::size_t index) const { return alternatives_.at(index); }

  std::size_t num_alternatives() const { return alternatives_.size(); }
  std::size_t num_districts() const { return districts_.size(); }
  std::size_t num_agents() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Position> alternatives_;
  std::vector<District> districts_;
};

class InvalidInstance : public std::invalid_argument {
 public:
  explicit InvalidInstance(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Decoded but unchecked instance data, as read from a file.
struct RawInstance {
  std::vector<Position> alternatives;
  std::vector<District> districts;
};

struct ValidationResult {
  std::vector<std::string> violations;
  std::vector<Position> alternatives;  // canonical (sorted) when valid
  std::vector<District> districts;

  bool ok() const { return violations.empty(); }
  Instance instance() const;
};

/// Checks every invariant and canonicalizes the lists. Violations are
/// reported as e.g. "no alternatives", "district 0 empty",
/// "district 1 agent 2 not finite", "alternative 3 not finite".
ValidationResult validate_instance(const RawInstance& raw);

inline double distance(Position p, Position q) { return p < q ? q - p : p - q; }

/// Index of the alternative closest to `agent`. Among exact ties Leftward
/// takes the smallest index; Rightward takes the largest tied position and,
/// among co-located alternatives there, the smallest index.
std::size_t favorite(Position agent, std::span<const Position> alternatives,
                     TiePolicy tie);

/// All alternative indices ordered from most to least preferred. The head
/// always equals favorite(agent, alternatives, tie).
std::vector<std::size_t> preference_order(Position agent,
                                          std::span<const Position> alternatives,
                                          TiePolicy tie);

/// 1-based rank of the alpha-quantile element of a sorted list of size m:
/// clamp(ceil(alpha * m), 1, m). Products within 1e-9 above an integer are
/// treated as that integer so that e.g. alpha = 0.3, m = 10 gives rank 3.
std::size_t quantile_index(double alpha, std::size_t m);

/// Maps every position p to scale * p + shift. Throws std::invalid_argument
/// unless scale > 0.
Instance transform(const Instance& inst, double shift, double scale);

}  // namespace linevote

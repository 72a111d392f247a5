#pragma once

// Distortion of a mechanism on one instance, the alpha-parameterized upper
// bound max{(3-a)/(1-a), 2/a - 1} with its minimizer, and a per-instance
// certificate that re-checks each inequality of the two upper-bound
// arguments with the instance's actual numbers.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linevote/line_model.hpp"
#include "linevote/mechanisms.hpp"
#include "linevote/objectives.hpp"

namespace linevote {

struct EvalReport {
  std::size_t winner_index = 0;
  double winner_cost = 0.0;
  std::size_t optimal_index = 0;
  double optimal_cost = 0.0;
  /// winner_cost / optimal_cost; 1 when both are zero, +inf when only the
  /// optimum is zero.
  double distortion = 1.0;
};

double distortion_ratio(double winner_cost, double optimal_cost);

EvalReport evaluate(const Instance& inst, const MechanismSpec& spec, Objective obj);

/// {(3 - alpha) / (1 - alpha), 2 / alpha - 1}. Throws std::domain_error
/// unless 0 < alpha < 1.
std::pair<double, double> bound_branches(double alpha);
double bound_curve(double alpha);

struct OptimalAlpha {
  double alpha = 0.0;
  double bound = 0.0;
};

/// The root of alpha^2 - 3 alpha + 1 in (0, 1), where both branches meet.
OptimalAlpha optimal_alpha();

enum class CertificateCase { OLeftOfW, WLeftOfO, Coincide };

std::string to_string(CertificateCase c);

struct CertificateCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

/// lhs <= rhs + 1e-9 * max(1, |rhs|).
bool within_tolerance(double lhs, double rhs);

struct Certificate {
  Preset preset = Preset::ALR;
  double alpha = 0.0;
  CertificateCase case_tag = CertificateCase::Coincide;
  Position winner_position = 0.0;
  Position optimal_position = 0.0;
  /// Size of the counted population: k for ALR, n_d of the district the
  /// argument is run on for ROL.
  std::size_t group_size = 0;
  /// District the ROL argument is run on (d_w or d*).
  std::optional<std::size_t> district;
  std::optional<std::size_t> set_s;
  std::optional<std::size_t> set_l;
  std::optional<std::size_t> set_r;
  std::vector<CertificateCheck> checks;

  bool passed() const;
};

/// Instantiates the upper-bound argument for `preset` on `inst`. Requires
/// 0 < alpha < 1. The objective defaults to the preset's matching one; any
/// other objective throws std::invalid_argument.
Certificate certify_run(const Instance& inst, Preset preset, double alpha, TiePolicy tie,
                        std::optional<Objective> obj = std::nullopt);

}  // namespace linevote

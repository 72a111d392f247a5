#include "linevote/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace linevote {

double distortion_ratio(double winner_cost, double optimal_cost) {
  if (optimal_cost > 0.0) return winner_cost / optimal_cost;
  return winner_cost == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
}

EvalReport evaluate(const Instance& inst, const MechanismSpec& spec, Objective obj) {
  const MechanismRun run = run_mechanism(inst, spec);
  const OptimalAlternative opt = optimal_alternative(inst, obj);
  EvalReport report;
  report.winner_index = run.winner;
  report.winner_cost = cost(inst, inst.alternative(run.winner), obj);
  report.optimal_index = opt.index;
  report.optimal_cost = opt.cost;
  report.distortion = distortion_ratio(report.winner_cost, report.optimal_cost);
  return report;
}

std::pair<double, double> bound_branches(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("bound requires 0 < alpha < 1");
  }
  return {(3.0 - alpha) / (1.0 - alpha), 2.0 / alpha - 1.0};
}

double bound_curve(double alpha) {
  const auto [increasing, decreasing] = bound_branches(alpha);
  return std::max(increasing, decreasing);
}

OptimalAlpha optimal_alpha() {
  // Smaller root of a^2 - 3a + 1, written as 2 / (3 + sqrt 5) to avoid
  // cancellation in (3 - sqrt 5) / 2.
  const double alpha = 2.0 / (3.0 + std::sqrt(5.0));
  return {alpha, bound_curve(alpha)};
}

std::string to_string(CertificateCase c) {
  switch (c) {
    case CertificateCase::OLeftOfW: return "o<w";
    case CertificateCase::WLeftOfO: return "w<o";
    case CertificateCase::Coincide: return "w=o";
  }
  return "?";
}

bool within_tolerance(double lhs, double rhs) {
  return lhs <= rhs + 1e-9 * std::max(1.0, std::abs(rhs));
}

bool Certificate::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CertificateCheck& c) { return c.pass; });
}

namespace {

class CheckList {
 public:
  explicit CheckList(std::vector<CertificateCheck>& out) : out_(out) {}
  void add(std::string name, double lhs, double rhs) {
    out_.push_back({std::move(name), lhs, rhs, within_tolerance(lhs, rhs)});
  }

 private:
  std::vector<CertificateCheck>& out_;
};

// Average-of-max argument for alpha-Leftmost-of-Rightmost. Districts are
// counted: S holds the districts whose representative is weakly right of w,
// L the first `rank` districts by representative position, R the rest.
void certify_alr(const Instance& inst, double alpha, TiePolicy tie, Certificate& cert) {
  const auto spec = preset_alr(alpha, tie);
  const auto run = run_mechanism(inst, spec);
  const auto opt = optimal_alternative(inst, Objective::AvgMax);
  const Position w = inst.alternative(run.winner);
  const Position o = inst.alternative(opt.index);
  const double cost_w = cost(inst, w, Objective::AvgMax);
  const double cost_o = opt.cost;
  const double gap = distance(w, o);
  const std::size_t k = inst.num_districts();
  const double kd = static_cast<double>(k);

  cert.winner_position = w;
  cert.optimal_position = o;
  cert.group_size = k;
  CheckList checks(cert.checks);

  if (w == o) {
    cert.case_tag = CertificateCase::Coincide;
    checks.add("bound", distortion_ratio(cost_w, cost_o), bound_curve(alpha));
    return;
  }

  const std::size_t rank = quantile_index(alpha, k);
  if (o < w) {
    cert.case_tag = CertificateCase::OLeftOfW;
    const auto s = static_cast<std::size_t>(
        std::count_if(run.representatives.begin(), run.representatives.end(),
                      [&](std::size_t y) { return inst.alternative(y) >= w; }));
    cert.set_s = s;
    const double sd = static_cast<double>(s);
    checks.add("AoM-1", cost_w, cost_o + gap);
    checks.add("AoM-2.size", (1.0 - alpha) * kd, sd);
    checks.add("AoM-2.count", sd * gap / (2.0 * kd), cost_o);
    checks.add("AoM-2", gap, 2.0 / (1.0 - alpha) * cost_o);
  } else {
    cert.case_tag = CertificateCase::WLeftOfO;
    const std::size_t l = rank;
    const std::size_t r = k - rank;
    cert.set_l = l;
    cert.set_r = r;
    const double ld = static_cast<double>(l);
    checks.add("AoM-3", cost_w, cost_o + static_cast<double>(r) / kd * gap);
    checks.add("AoM-4.size", alpha * kd, ld);
    checks.add("AoM-4.count", ld * gap / (2.0 * kd), cost_o);
    checks.add("AoM-4", gap, 2.0 * kd / ld * cost_o);
  }
  checks.add("bound", cost_w, bound_curve(alpha) * cost_o);
}

// Max-of-average argument for Rightmost-of-alpha-Leftmost. Agents are
// counted inside one district: S holds the agents of d_w weakly right of its
// designated agent; L the designated agent of d* and everyone left of it.
void certify_rol(const Instance& inst, double alpha, TiePolicy tie, Certificate& cert) {
  const auto spec = preset_rol(alpha, tie);
  const auto run = run_mechanism(inst, spec);
  const auto opt = optimal_alternative(inst, Objective::MaxAvg);
  const Position w = inst.alternative(run.winner);
  const Position o = inst.alternative(opt.index);
  const double cost_w = cost(inst, w, Objective::MaxAvg);
  const double cost_o = opt.cost;
  const double gap = distance(w, o);

  cert.winner_position = w;
  cert.optimal_position = o;
  CheckList checks(cert.checks);

  if (w == o) {
    cert.case_tag = CertificateCase::Coincide;
    checks.add("bound", distortion_ratio(cost_w, cost_o), bound_curve(alpha));
    return;
  }

  if (o < w) {
    cert.case_tag = CertificateCase::OLeftOfW;
    std::size_t dw = 0;
    while (inst.alternative(run.representatives[dw]) != w) ++dw;
    const auto& agents = inst.district(dw);
    const std::size_t n = agents.size();
    const double nd = static_cast<double>(n);
    const std::size_t s = n - designated_agent(n, spec.district_rule);
    cert.district = dw;
    cert.group_size = n;
    cert.set_s = s;
    const double sd = static_cast<double>(s);
    checks.add("MoA-1", cost_w, cost_o + gap);
    checks.add("MoA-2.size", (1.0 - alpha) * nd, sd);
    checks.add("MoA-2.count", sd * gap / (2.0 * nd), district_avg(agents, o));
    checks.add("MoA-2", gap, 2.0 / (1.0 - alpha) * cost_o);
  } else {
    cert.case_tag = CertificateCase::WLeftOfO;
    std::size_t dstar = 0;
    double worst = -1.0;
    for (std::size_t d = 0; d < inst.num_districts(); ++d) {
      const double v = district_avg(inst.district(d), w);
      if (v > worst) {
        worst = v;
        dstar = d;
      }
    }
    const auto& agents = inst.district(dstar);
    const std::size_t n = agents.size();
    const double nd = static_cast<double>(n);
    const std::size_t l = designated_agent(n, spec.district_rule) + 1;
    const std::size_t r = n - l;
    cert.district = dstar;
    cert.group_size = n;
    cert.set_l = l;
    cert.set_r = r;
    const double ld = static_cast<double>(l);
    checks.add("MoA-3", cost_w, cost_o + static_cast<double>(r) / nd * gap);
    checks.add("MoA-4.size", alpha * nd, ld);
    checks.add("MoA-4.count", ld * gap / (2.0 * nd), district_avg(agents, o));
    checks.add("MoA-4", gap, 2.0 * nd / ld * cost_o);
  }
  checks.add("bound", cost_w, bound_curve(alpha) * cost_o);
}

}  // namespace

Certificate certify_run(const Instance& inst, Preset preset, double alpha, TiePolicy tie,
                        std::optional<Objective> obj) {
  if (obj && *obj != matching_objective(preset)) {
    throw std::invalid_argument("certificate for " + to_string(preset) +
                                " is only defined for objective " +
                                to_string(matching_objective(preset)));
  }
  bound_branches(alpha);  // rejects alpha outside (0, 1)

  Certificate cert;
  cert.preset = preset;
  cert.alpha = alpha;
  if (preset == Preset::ALR) {
    certify_alr(inst, alpha, tie, cert);
  } else {
    certify_rol(inst, alpha, tie, cert);
  }
  return cert;
}

}  // namespace linevote

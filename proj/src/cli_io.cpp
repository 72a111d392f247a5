#include "linevote/cli_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "linevote/distortion.hpp"
#include "linevote/mechanisms.hpp"
#include "linevote/objectives.hpp"
#include "linevote/search.hpp"

namespace linevote {

namespace {

using nlohmann::json;

std::vector<Position> read_numbers(const json& array, const std::string& where) {
  if (!array.is_array()) throw ParseError(where + " must be an array");
  std::vector<Position> out;
  out.reserve(array.size());
  for (std::size_t i = 0; i < array.size(); ++i) {
    if (!array[i].is_number()) {
      throw ParseError(where + "[" + std::to_string(i) + "] is not a number");
    }
    out.push_back(array[i].get<double>());
  }
  return out;
}

std::string shortest(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string join_reals(const std::vector<Position>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += shortest(xs[i]);
  }
  return out + "]";
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "alternatives" && key != "districts") throw ParseError("unknown key \"" + key + "\"");
  }
  if (!doc.contains("alternatives")) throw ParseError("missing key \"alternatives\"");
  if (!doc.contains("districts")) throw ParseError("missing key \"districts\"");

  RawInstance raw;
  raw.alternatives = read_numbers(doc["alternatives"], "alternatives");
  const json& districts = doc["districts"];
  if (!districts.is_array()) throw ParseError("districts must be an array");
  for (std::size_t d = 0; d < districts.size(); ++d) {
    raw.districts.push_back(read_numbers(districts[d], "districts[" + std::to_string(d) + "]"));
  }
  return validate_instance(raw).instance();
}

std::string serialize_instance(const Instance& inst) {
  std::string out = "{\"alternatives\": " + join_reals(inst.alternatives()) + ", \"districts\": [";
  for (std::size_t d = 0; d < inst.num_districts(); ++d) {
    if (d) out += ", ";
    out += join_reals(inst.district(d));
  }
  return out + "]}";
}

std::string format_real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  int decimals = 12;
  const double mag = std::abs(x);
  if (mag > 0.0 && mag < 1.0) {
    decimals = std::max(12, 11 - static_cast<int>(std::floor(std::log10(mag))));
  }
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCertificate = 2;
constexpr int kExitBoundViolated = 3;

struct CommonFlags {
  std::string mechanism = "alr";
  std::string alpha = "star";
  std::string objective;
  std::string tie = "left";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_alpha(const std::string& text) {
  if (text == "star") return optimal_alpha().alpha;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !(value >= 0.0 && value <= 1.0)) {
    throw UsageError("alpha must be a number in [0, 1] or \"star\", got \"" + text + "\"");
  }
  return value;
}

Preset parse_preset(const std::string& text) {
  if (text == "alr") return Preset::ALR;
  if (text == "rol") return Preset::ROL;
  throw UsageError("mechanism must be alr or rol");
}

TiePolicy parse_tie(const std::string& text) {
  if (text == "left") return TiePolicy::Leftward;
  if (text == "right") return TiePolicy::Rightward;
  throw UsageError("tie must be left or right");
}

Objective resolve_objective(const std::string& text, Preset preset) {
  if (text.empty()) return matching_objective(preset);
  if (auto obj = parse_objective(text)) return *obj;
  throw UsageError("objective must be one of avg-avg, max-max, avg-max, max-avg");
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open instance file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_objective) {
  cmd->add_option("--mechanism", flags.mechanism, "alr or rol")->required();
  cmd->add_option("--alpha", flags.alpha, "number in [0, 1], or \"star\" for (3 - sqrt 5) / 2");
  if (with_objective) {
    cmd->add_option("--objective", flags.objective,
                    "avg-avg, max-max, avg-max or max-avg (default: the mechanism's own)");
  }
  cmd->add_option("--tie", flags.tie, "left or right");
}

struct SearchFlags {
  std::string mode = "random";
  std::size_t districts = 6;
  std::size_t agents = 5;
  std::size_t alts = 6;
  int grid = 20;
  std::uint64_t samples = 10000;
  std::uint64_t restarts = 20;
  std::uint64_t steps = 200;
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = SearchConfig{}.budget;
};

void add_search(CLI::App* cmd, SearchFlags& flags) {
  cmd->add_option("--mode", flags.mode, "exhaustive, random or hillclimb");
  cmd->add_option("--districts", flags.districts, "maximum number of districts");
  cmd->add_option("--agents", flags.agents, "maximum agents per district");
  cmd->add_option("--alts", flags.alts, "maximum number of alternatives");
  cmd->add_option("--grid", flags.grid, "coordinates range over 0..grid");
  cmd->add_option("--samples", flags.samples, "random mode sample count");
  cmd->add_option("--restarts", flags.restarts, "hill-climb restarts");
  cmd->add_option("--steps", flags.steps, "hill-climb step limit per restart");
  cmd->add_option("--seed", flags.seed, "random seed (env SEED when absent)");
  cmd->add_option("--budget", flags.budget, "exhaustive enumeration limit");
}

SearchConfig make_config(const CommonFlags& common, const SearchFlags& flags) {
  SearchConfig cfg;
  cfg.preset = parse_preset(common.mechanism);
  cfg.alpha = parse_alpha(common.alpha);
  cfg.objective = resolve_objective(common.objective, cfg.preset);
  cfg.tie = parse_tie(common.tie);
  cfg.max_districts = flags.districts;
  cfg.max_agents_per_district = flags.agents;
  cfg.max_alternatives = flags.alts;
  cfg.grid = flags.grid;
  cfg.budget = flags.budget;

  std::uint64_t seed = 1;
  if (flags.seed) {
    seed = *flags.seed;
  } else if (const char* env = std::getenv("SEED")) {
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw UsageError("SEED must be an unsigned integer");
    }
  }

  if (flags.mode == "exhaustive") {
    cfg.mode = ExhaustiveMode{};
  } else if (flags.mode == "random") {
    cfg.mode = RandomMode{flags.samples, seed};
  } else if (flags.mode == "hillclimb") {
    cfg.mode = HillClimbMode{flags.restarts, flags.steps, seed};
  } else {
    throw UsageError("mode must be exhaustive, random or hillclimb");
  }
  validate_config(cfg);
  return cfg;
}

std::vector<double> parse_alpha_list(const std::string& csv) {
  std::vector<double> alphas;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) alphas.push_back(parse_alpha(item));
  if (alphas.empty()) throw UsageError("--alphas needs at least one value");
  return alphas;
}

int cmd_eval(const std::string& path, const CommonFlags& flags, std::ostream& out) {
  const Instance inst = load_instance(path);
  const Preset preset = parse_preset(flags.mechanism);
  const double alpha = parse_alpha(flags.alpha);
  const Objective obj = resolve_objective(flags.objective, preset);
  const TiePolicy tie = parse_tie(flags.tie);
  const EvalReport r = evaluate(inst, make_preset(preset, alpha, tie), obj);

  out << "mechanism,alpha,objective,tie,winner_index,winner_position,winner_cost,"
         "optimal_index,optimal_position,optimal_cost,distortion\n";
  out << to_string(preset) << ',' << format_real(alpha) << ',' << to_string(obj) << ','
      << to_string(tie) << ',' << r.winner_index << ','
      << format_real(inst.alternative(r.winner_index)) << ',' << format_real(r.winner_cost) << ','
      << r.optimal_index << ',' << format_real(inst.alternative(r.optimal_index)) << ','
      << format_real(r.optimal_cost) << ',' << format_real(r.distortion) << '\n';
  return kExitOk;
}

std::string optional_count(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

int cmd_certify(const std::string& path, const CommonFlags& flags, std::ostream& out) {
  const Instance inst = load_instance(path);
  const Preset preset = parse_preset(flags.mechanism);
  const double alpha = parse_alpha(flags.alpha);
  if (!(alpha > 0.0 && alpha < 1.0)) throw UsageError("certify requires 0 < alpha < 1");
  const TiePolicy tie = parse_tie(flags.tie);
  const Certificate cert = certify_run(inst, preset, alpha, tie);

  out << "mechanism,alpha,tie,case,check,lhs,rhs,pass,group_size,S,L,R\n";
  for (const auto& check : cert.checks) {
    out << to_string(preset) << ',' << format_real(alpha) << ',' << to_string(tie) << ','
        << to_string(cert.case_tag) << ',' << check.name << ',' << format_real(check.lhs) << ','
        << format_real(check.rhs) << ',' << (check.pass ? "pass" : "FAIL") << ','
        << cert.group_size << ',' << optional_count(cert.set_s) << ','
        << optional_count(cert.set_l) << ',' << optional_count(cert.set_r) << '\n';
  }
  return cert.passed() ? kExitOk : kExitCertificate;
}

std::string mode_name(const SearchMode& mode) {
  if (std::holds_alternative<ExhaustiveMode>(mode)) return "exhaustive";
  if (std::holds_alternative<RandomMode>(mode)) return "random";
  return "hillclimb";
}

int cmd_search(const CommonFlags& common, const SearchFlags& flags, std::ostream& out) {
  const SearchConfig cfg = make_config(common, flags);
  const SearchResult result = run_search(cfg);
  const EvalReport& r = result.best_report;

  out << "mechanism,alpha,objective,tie,mode,instances_evaluated,winner_index,winner_cost,"
         "optimal_index,optimal_cost,best_distortion,theoretical_bound,bound_violated\n";
  out << to_string(cfg.preset) << ',' << format_real(cfg.alpha) << ','
      << to_string(cfg.objective) << ',' << to_string(cfg.tie) << ',' << mode_name(cfg.mode)
      << ',' << result.instances_evaluated << ',' << r.winner_index << ','
      << format_real(r.winner_cost) << ',' << r.optimal_index << ','
      << format_real(r.optimal_cost) << ',' << format_real(r.distortion) << ','
      << format_real(theoretical_bound(cfg.alpha)) << ','
      << (result.bound_violated ? "true" : "false") << '\n';
  out << serialize_instance(result.best_instance) << '\n';
  return result.bound_violated ? kExitBoundViolated : kExitOk;
}

int cmd_sweep(const std::string& alphas, const CommonFlags& common, const SearchFlags& flags,
              std::ostream& out) {
  const SearchConfig cfg = make_config(common, flags);
  const auto rows = sweep_alpha(cfg, parse_alpha_list(alphas));
  bool violated = false;
  out << "alpha,theoretical_bound,empirical_max_distortion,instances_evaluated\n";
  for (const auto& row : rows) {
    out << format_real(row.alpha) << ',' << format_real(row.theoretical_bound) << ','
        << format_real(row.empirical_max_distortion) << ',' << row.instances_evaluated << '\n';
    violated = violated || row.empirical_max_distortion > row.theoretical_bound * (1.0 + 1e-9);
  }
  return violated ? kExitBoundViolated : kExitOk;
}

int cmd_bound(const std::optional<std::string>& alpha, bool optimal, std::ostream& out) {
  if (optimal) {
    const OptimalAlpha opt = optimal_alpha();
    out << format_real(opt.alpha) << ", " << format_real(opt.bound) << '\n';
    return kExitOk;
  }
  if (!alpha) throw UsageError("bound needs --alpha or --optimal");
  const double a = parse_alpha(*alpha);
  if (!(a > 0.0 && a < 1.0)) throw UsageError("bound requires 0 < alpha < 1");
  out << format_real(bound_curve(a)) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distributed single-winner voting on a line: mechanisms, distortion and search"};
  app.name("linevote");
  app.require_subcommand(1);

  CommonFlags common;
  SearchFlags search_flags;
  std::string instance_path;
  std::string alphas;
  std::optional<std::string> bound_alpha;
  bool bound_optimal = false;

  auto* eval = app.add_subcommand("eval", "Evaluate one mechanism on an instance file");
  eval->add_option("--instance", instance_path, "instance JSON file")->required();
  add_common(eval, common, true);

  auto* certify = app.add_subcommand("certify", "Check the upper-bound inequalities on an instance");
  certify->add_option("--instance", instance_path, "instance JSON file")->required();
  add_common(certify, common, false);

  auto* search = app.add_subcommand("search", "Search for a worst-case instance");
  add_common(search, common, true);
  add_search(search, search_flags);

  auto* sweep = app.add_subcommand("sweep", "Run the search once per alpha");
  sweep->add_option("--alphas", alphas, "comma-separated alphas in (0, 1)")->required();
  add_common(sweep, common, true);
  add_search(sweep, search_flags);

  auto* bound = app.add_subcommand("bound", "Print the distortion bound for alpha");
  bound->add_option("--alpha", bound_alpha, "alpha in (0, 1)");
  bound->add_flag("--optimal", bound_optimal, "print the minimizing alpha and its bound");

  std::vector<const char*> argv{"linevote"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(instance_path, common, out);
    if (certify->parsed()) return cmd_certify(instance_path, common, out);
    if (search->parsed()) return cmd_search(common, search_flags, out);
    if (sweep->parsed()) return cmd_sweep(alphas, common, search_flags, out);
    return cmd_bound(bound_alpha, bound_optimal, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace linevote

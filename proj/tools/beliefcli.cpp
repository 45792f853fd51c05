// Command-line front end for the belief-functions library: combination,
// conflict reports, conflict-driven discounting, decisions, and a Monte
// Carlo rule-comparison harness. Data goes to stdout or --output;
// diagnostics go to stderr. Exit codes: 0 ok, 2 input error, 3
// computational error.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "beliefs/combine.hpp"
#include "beliefs/conflict.hpp"
#include "beliefs/decide.hpp"
#include "beliefs/json_io.hpp"
#include "beliefs/mass.hpp"
#include "beliefs/reliability.hpp"
#include "beliefs/rng.hpp"

namespace {

using namespace beliefs;

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

void write_text(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    throw validation_error("cannot write " + output_path);
  }
  out << text;
}

void write_json(const io::json& j, const std::string& output_path) {
  write_text(j.dump(2) + "\n", output_path);
}

std::vector<MassFunction> load_sources(const std::vector<std::string>& paths, double tolerance) {
  std::vector<MassFunction> sources;
  sources.reserve(paths.size());
  for (const auto& path : paths) {
    sources.push_back(io::load_mass(path, tolerance));
  }
  for (const auto& m : sources) {
    require_same_frame(m.frame(), sources.front().frame());
  }
  return sources;
}

bool is_conjunctive_family(RuleId rule) {
  switch (rule) {
    case RuleId::conjunctive:
    case RuleId::dempster:
    case RuleId::yager:
    case RuleId::dubois_prade:
    case RuleId::pcr6:
    case RuleId::florea:
      return true;
    default:
      return false;
  }
}

MixedDeltaPolicy delta_policy_from_string(const std::string& name) {
  if (name == "constant") return MixedDeltaPolicy::constant;
  if (name == "cardinality") return MixedDeltaPolicy::cardinality_ratio;
  if (name == "jaccard") return MixedDeltaPolicy::jaccard;
  throw validation_error("unknown delta policy: " + name);
}

std::string join_labels(const Subset& subset) {
  std::string out;
  for (const auto& label : subset.member_labels()) {
    if (!out.empty()) out += '|';
    out += label;
  }
  return out;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (const char c : text) {
    if (c == ',') {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

struct CombineOptions {
  std::vector<std::string> inputs;
  std::string rule = "conjunctive";
  std::string delta_policy = "jaccard";
  double delta2 = 0.5;
  std::string output;
  double tolerance = mass_sum_tolerance;
};

int run_combine(const CombineOptions& opt) {
  const auto sources = load_sources(opt.inputs, opt.tolerance);
  const RuleId rule = rule_from_string(opt.rule);
  RuleConfig config;
  config.delta_policy = delta_policy_from_string(opt.delta_policy);
  config.delta2 = opt.delta2;

  const MassFunction result = combine(rule, sources, config);
  if (is_conjunctive_family(rule) && sources.size() >= 2) {
    std::cerr << "kappa = " << format_double(global_conflict(sources)) << "\n";
  }
  write_json(io::to_json(result), opt.output);
  return 0;
}

struct ConflictOptions {
  std::vector<std::string> inputs;
  std::string measure = "inclusion-distance";
  std::string variant = "light";
  std::string method = "avg";
  std::string combiner = "mean";
  std::string output;
  double tolerance = mass_sum_tolerance;
};

int run_conflict(const ConflictOptions& opt) {
  const auto sources = load_sources(opt.inputs, opt.tolerance);
  MeasureConfig config;
  config.measure = conflict_measure_from_string(opt.measure);
  config.variant = inclusion_variant_from_string(opt.variant);
  const auto report = make_conflict_report(sources, config, source_method_from_string(opt.method),
                                           rule_from_string(opt.combiner));
  write_json(io::to_json(report), opt.output);
  return 0;
}

struct DiscountOptions {
  std::vector<std::string> inputs;
  double lambda = 2.0;
  std::string measure = "inclusion-distance";
  std::string variant = "light";
  std::string method = "avg";
  std::string combiner = "mean";
  std::string output_dir = ".";
  double tolerance = mass_sum_tolerance;
};

int run_discount(const DiscountOptions& opt) {
  const auto sources = load_sources(opt.inputs, opt.tolerance);
  DiscountConfig config;
  config.lambda = opt.lambda;
  config.measure.measure = conflict_measure_from_string(opt.measure);
  config.measure.variant = inclusion_variant_from_string(opt.variant);
  config.method = source_method_from_string(opt.method);
  config.combiner = rule_from_string(opt.combiner);

  const auto result = discount_by_conflict(sources, config);
  const std::filesystem::path dir(opt.output_dir);
  std::filesystem::create_directories(dir);
  for (std::size_t j = 0; j < result.discounted.size(); ++j) {
    io::save_mass(result.discounted[j], dir / ("discounted_" + std::to_string(j + 1) + ".json"));
  }
  io::save_json_file(io::to_json(result.profile), dir / "profile.json");
  return 0;
}

struct DecideOptions {
  std::string input;
  std::string config_path;
  std::string scheme;
  std::string functional;
  std::optional<double> rho;
  std::string output;
  double tolerance = mass_sum_tolerance;
};

int run_decide(const DecideOptions& opt) {
  const MassFunction m = io::load_mass(opt.input, opt.tolerance);
  DecisionConfig config;
  if (!opt.config_path.empty()) {
    config = io::decision_config_from_json(m.frame(), io::load_json_file(opt.config_path));
  }
  if (!opt.scheme.empty()) config.scheme = decision_scheme_from_string(opt.scheme);
  if (!opt.functional.empty()) config.functional = decision_functional_from_string(opt.functional);
  if (opt.rho) config.rho = *opt.rho;

  const DecisionResult result = decide(m, config);
  write_json(io::to_json(result), opt.output);
  return 0;
}

struct AutoConflictOptions {
  std::string input;
  std::size_t order = 5;
  std::string output;
  double tolerance = mass_sum_tolerance;
};

int run_autoconflict(const AutoConflictOptions& opt) {
  const MassFunction m = io::load_mass(opt.input, opt.tolerance);
  if (opt.order < 2) {
    throw validation_error("auto-conflict order must be at least 2");
  }
  std::ostringstream out;
  out << "order,autoconflict\n";
  for (std::size_t s = 2; s <= opt.order; ++s) {
    out << s << "," << format_double(auto_conflict(m, s)) << "\n";
  }
  write_text(out.str(), opt.output);
  return 0;
}

struct DistanceOptions {
  std::vector<std::string> inputs;
  std::string output;
  double tolerance = mass_sum_tolerance;
};

int run_distance(const DistanceOptions& opt) {
  const auto sources = load_sources(opt.inputs, opt.tolerance);
  write_text(format_double(jousselme_distance(sources[0], sources[1])) + "\n", opt.output);
  return 0;
}

struct SimulateOptions {
  std::size_t n = 3;
  std::string frame_path;
  std::size_t sources = 2;
  std::size_t focals = 2;
  std::size_t trials = 100;
  std::string rules = "conjunctive,dempster,disjunctive,yager,dubois-prade,mean,pcr6,florea";
  std::string functional = "betp";
  std::string scheme = "argmax";
  std::uint64_t seed = 0;
  bool timings = false;
  std::string output;
};

Frame simulate_frame(const SimulateOptions& opt) {
  if (!opt.frame_path.empty()) {
    return io::frame_from_json(io::load_json_file(opt.frame_path));
  }
  if (opt.n < 1 || opt.n > Frame::max_size) {
    throw validation_error("frame size must lie in [1,20]");
  }
  std::vector<std::string> labels;
  labels.reserve(opt.n);
  for (std::size_t i = 1; i <= opt.n; ++i) labels.push_back("w" + std::to_string(i));
  return Frame{labels};
}

int run_simulate(const SimulateOptions& opt) {
  if (opt.trials < 1) {
    throw validation_error("at least one trial is required");
  }
  if (opt.sources < 1) {
    throw validation_error("at least one source is required");
  }

  const Frame frame = simulate_frame(opt);
  if (opt.focals < 1 || opt.focals > frame.subset_count() - 1) {
    throw validation_error("focal count must lie in [1, 2^n - 1]");
  }

  std::vector<RuleId> rules;
  for (const auto& name : split_csv(opt.rules)) rules.push_back(rule_from_string(name));
  if (rules.empty()) {
    throw validation_error("at least one rule is required");
  }
  for (const RuleId rule : rules) {
    if (rule == RuleId::mixed && opt.sources != 2) {
      throw validation_error("mixed requires exactly two sources");
    }
  }

  DecisionConfig decision;
  decision.scheme = decision_scheme_from_string(opt.scheme);
  decision.functional = decision_functional_from_string(opt.functional);

  std::ostringstream out;
  out << "trial,rule,chosen_set,kappa";
  if (opt.timings) out << ",runtime_us";
  out << "\n";

  double kappa_sum = 0.0;
  double autoconflict_sum = 0.0;
  std::vector<std::vector<std::string>> decisions(rules.size());

  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    std::mt19937_64 gen(rng::mix(opt.seed, trial));
    std::vector<MassFunction> ms;
    ms.reserve(opt.sources);
    for (std::size_t s = 0; s < opt.sources; ++s) {
      ms.push_back(random_mass(frame, opt.focals, gen));
    }

    const double kappa = conjunctive(ms).mass_on_empty();
    kappa_sum += kappa;
    double trial_autoconflict = 0.0;
    for (const auto& m : ms) trial_autoconflict += auto_conflict(m, 2);
    autoconflict_sum += trial_autoconflict / static_cast<double>(ms.size());

    for (std::size_t r = 0; r < rules.size(); ++r) {
      const auto start = std::chrono::steady_clock::now();
      std::string chosen;
      try {
        const MassFunction combined = combine(rules[r], ms);
        chosen = join_labels(decide(combined, decision).chosen);
      } catch (const computation_error&) {
        chosen = "error";
      }
      const auto elapsed = std::chrono::steady_clock::now() - start;

      decisions[r].push_back(chosen);
      out << trial << "," << to_string(rules[r]) << "," << chosen << ","
          << format_double(kappa);
      if (opt.timings) {
        out << ","
            << std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count();
      }
      out << "\n";
    }
  }

  out << "# mean_kappa," << format_double(kappa_sum / static_cast<double>(opt.trials)) << "\n";
  out << "# mean_autoconflict,"
      << format_double(autoconflict_sum / static_cast<double>(opt.trials)) << "\n";
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      std::size_t both = 0;
      std::size_t agree = 0;
      for (std::size_t t = 0; t < opt.trials; ++t) {
        if (decisions[i][t] == "error" || decisions[j][t] == "error") continue;
        ++both;
        if (decisions[i][t] == decisions[j][t]) ++agree;
      }
      const double fraction =
          both == 0 ? 0.0 : static_cast<double>(agree) / static_cast<double>(both);
      out << "# agreement," << to_string(rules[i]) << "," << to_string(rules[j]) << ","
          << format_double(fraction) << "\n";
    }
  }

  write_text(out.str(), opt.output);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"belief-function combination, conflict and decision toolbox"};
  app.require_subcommand(1);

  CombineOptions combine_opt;
  auto* cmd_combine = app.add_subcommand("combine", "combine mass functions with a rule");
  cmd_combine->add_option("inputs", combine_opt.inputs, "mass-function JSON files")
      ->required()
      ->expected(-1);
  cmd_combine->add_option("--rule", combine_opt.rule, "combination rule");
  cmd_combine->add_option("--delta-policy", combine_opt.delta_policy,
                          "mixed rule policy: constant|cardinality|jaccard");
  cmd_combine->add_option("--delta2", combine_opt.delta2, "constant delta2 for the mixed rule");
  cmd_combine->add_option("--output,-o", combine_opt.output, "output file (default stdout)");
  cmd_combine->add_option("--tolerance", combine_opt.tolerance, "mass-sum tolerance");

  ConflictOptions conflict_opt;
  auto* cmd_conflict = app.add_subcommand("conflict", "pairwise and per-source conflict report");
  cmd_conflict->add_option("inputs", conflict_opt.inputs, "mass-function JSON files")
      ->required()
      ->expected(-1);
  cmd_conflict->add_option("--measure", conflict_opt.measure,
                           "distance|inclusion-distance|plausibility-cosine|global-kappa");
  cmd_conflict->add_option("--variant", conflict_opt.variant, "inclusion variant: strict|light");
  cmd_conflict->add_option("--method", conflict_opt.method, "per-source method: avg|combined");
  cmd_conflict->add_option("--combiner", conflict_opt.combiner, "rule for the combined method");
  cmd_conflict->add_option("--output,-o", conflict_opt.output, "output file (default stdout)");
  cmd_conflict->add_option("--tolerance", conflict_opt.tolerance, "mass-sum tolerance");

  DiscountOptions discount_opt;
  auto* cmd_discount = app.add_subcommand("discount", "discount sources by conflict-based reliability");
  cmd_discount->add_option("inputs", discount_opt.inputs, "mass-function JSON files")
      ->required()
      ->expected(-1);
  cmd_discount->add_option("--lambda", discount_opt.lambda, "reliability shape parameter");
  cmd_discount->add_option("--measure", discount_opt.measure, "conflict measure");
  cmd_discount->add_option("--variant", discount_opt.variant, "inclusion variant");
  cmd_discount->add_option("--method", discount_opt.method, "avg|combined");
  cmd_discount->add_option("--combiner", discount_opt.combiner, "rule for the combined method");
  cmd_discount->add_option("--output-dir", discount_opt.output_dir, "directory for the outputs");
  cmd_discount->add_option("--tolerance", discount_opt.tolerance, "mass-sum tolerance");

  DecideOptions decide_opt;
  auto* cmd_decide = app.add_subcommand("decide", "decide on a candidate subset");
  cmd_decide->add_option("input", decide_opt.input, "mass-function JSON file")->required();
  cmd_decide->add_option("--config", decide_opt.config_path, "decision config JSON file");
  cmd_decide->add_option("--scheme", decide_opt.scheme, "argmax|appriou|distance");
  cmd_decide->add_option("--fd", decide_opt.functional, "decision functional: bel|pl|betp");
  double rho_value = 0.0;
  auto* rho_option = cmd_decide->add_option("--rho", rho_value, "cardinality penalty in [0,1]");
  cmd_decide->add_option("--output,-o", decide_opt.output, "output file (default stdout)");
  cmd_decide->add_option("--tolerance", decide_opt.tolerance, "mass-sum tolerance");

  AutoConflictOptions autoconflict_opt;
  auto* cmd_autoconflict = app.add_subcommand("autoconflict", "auto-conflict of increasing order");
  cmd_autoconflict->add_option("input", autoconflict_opt.input, "mass-function JSON file")
      ->required();
  cmd_autoconflict->add_option("--order", autoconflict_opt.order, "largest order to report");
  cmd_autoconflict->add_option("--output,-o", autoconflict_opt.output, "output file");
  cmd_autoconflict->add_option("--tolerance", autoconflict_opt.tolerance, "mass-sum tolerance");

  DistanceOptions distance_opt;
  auto* cmd_distance = app.add_subcommand("distance", "Jousselme distance between two mass functions");
  cmd_distance->add_option("inputs", distance_opt.inputs, "two mass-function JSON files")
      ->required()
      ->expected(2);
  cmd_distance->add_option("--output,-o", distance_opt.output, "output file");
  cmd_distance->add_option("--tolerance", distance_opt.tolerance, "mass-sum tolerance");

  SimulateOptions simulate_opt;
  auto* cmd_simulate = app.add_subcommand("simulate", "Monte Carlo rule comparison on random masses");
  cmd_simulate->add_option("--n", simulate_opt.n, "frame size (labels w1..wn)");
  cmd_simulate->add_option("--frame", simulate_opt.frame_path, "frame JSON file (overrides --n)");
  cmd_simulate->add_option("--sources", simulate_opt.sources, "sources per trial");
  cmd_simulate->add_option("--focals", simulate_opt.focals, "focal elements per source");
  cmd_simulate->add_option("--trials", simulate_opt.trials, "number of trials");
  cmd_simulate->add_option("--rules", simulate_opt.rules, "comma-separated rule list");
  cmd_simulate->add_option("--fd", simulate_opt.functional, "decision functional");
  cmd_simulate->add_option("--scheme", simulate_opt.scheme, "decision scheme");
  cmd_simulate->add_option("--seed", simulate_opt.seed, "random seed");
  cmd_simulate->add_flag("--timings", simulate_opt.timings,
                         "append a runtime_us column (not reproducible run to run)");
  cmd_simulate->add_option("--output,-o", simulate_opt.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (cmd_combine->parsed()) return run_combine(combine_opt);
    if (cmd_conflict->parsed()) return run_conflict(conflict_opt);
    if (cmd_discount->parsed()) return run_discount(discount_opt);
    if (cmd_decide->parsed()) {
      if (rho_option->count() > 0) decide_opt.rho = rho_value;
      return run_decide(decide_opt);
    }
    if (cmd_autoconflict->parsed()) return run_autoconflict(autoconflict_opt);
    if (cmd_distance->parsed()) return run_distance(distance_opt);
    if (cmd_simulate->parsed()) return run_simulate(simulate_opt);
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const computation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#include "beliefs/combine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>

namespace beliefs {

namespace {

const Frame& check_sources(std::span<const MassFunction> sources, std::size_t min_count,
                           std::string_view rule) {
  if (sources.size() < min_count) {
    throw validation_error(std::string(rule) + " needs at least " + std::to_string(min_count) +
                           " mass function(s)");
  }
  const Frame& frame = sources.front().frame();
  for (const auto& m : sources.subspan(1)) {
    require_same_frame(m.frame(), frame);
  }
  return frame;
}

void check_no_empty_focal(std::span<const MassFunction> sources, std::string_view rule) {
  for (const auto& m : sources) {
    if (m.mass_on_empty() > 0.0) {
      throw validation_error(std::string(rule) + " requires inputs without mass on the empty set");
    }
  }
}

void check_non_dogmatic(std::span<const MassFunction> sources, std::string_view rule) {
  for (const auto& m : sources) {
    if (m.is_dogmatic()) {
      throw computation_error(std::string(rule) + " requires non-dogmatic inputs");
    }
  }
}

using FocalMap = std::map<std::uint32_t, double>;

template <typename Op>
FocalMap fold_products(std::span<const MassFunction> sources, Op op) {
  FocalMap acc = sources.front().focals();
  for (const auto& m : sources.subspan(1)) {
    FocalMap next;
    for (const auto& [a, va] : acc) {
      for (const auto& [b, vb] : m.focals()) {
        next[op(a, b)] += va * vb;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

FocalMap conjunctive_raw(std::span<const MassFunction> sources) {
  return fold_products(sources, [](std::uint32_t a, std::uint32_t b) { return a & b; });
}

FocalMap disjunctive_raw(std::span<const MassFunction> sources) {
  return fold_products(sources, [](std::uint32_t a, std::uint32_t b) { return a | b; });
}

// Visits every tuple of focal elements, one per source, carrying the running
// intersection, union and product mass.
void for_each_tuple(std::span<const MassFunction> sources,
                    std::vector<std::pair<std::uint32_t, double>>& chosen, std::size_t depth,
                    std::uint32_t inter, std::uint32_t uni, double product,
                    const std::function<void(std::uint32_t, std::uint32_t, double,
                                             const std::vector<std::pair<std::uint32_t, double>>&)>& visit) {
  if (depth == sources.size()) {
    visit(inter, uni, product, chosen);
    return;
  }
  for (const auto& [bits, mass] : sources[depth].focals()) {
    chosen[depth] = {bits, mass};
    for_each_tuple(sources, chosen, depth + 1, inter & bits, uni | bits, product * mass, visit);
  }
}

template <typename Visit>
void visit_tuples(std::span<const MassFunction> sources, Visit&& visit) {
  std::vector<std::pair<std::uint32_t, double>> chosen(sources.size());
  const auto full = sources.front().frame().full_bits();
  for_each_tuple(sources, chosen, 0, full, 0, 1.0, visit);
}

double delta2_for(const RuleConfig& config, std::uint32_t y1, std::uint32_t y2) {
  switch (config.delta_policy) {
    case MixedDeltaPolicy::constant:
      return config.delta2;
    case MixedDeltaPolicy::cardinality_ratio: {
      const auto denom = std::min(std::popcount(y1), std::popcount(y2));
      return denom == 0 ? 0.0
                        : static_cast<double>(std::popcount(y1 & y2)) / static_cast<double>(denom);
    }
    case MixedDeltaPolicy::jaccard: {
      const auto denom = std::popcount(y1 | y2);
      return denom == 0 ? 0.0
                        : static_cast<double>(std::popcount(y1 & y2)) / static_cast<double>(denom);
    }
  }
  throw validation_error("unknown delta policy");
}

} // namespace

std::string_view to_string(RuleId rule) {
  switch (rule) {
    case RuleId::conjunctive: return "conjunctive";
    case RuleId::dempster: return "dempster";
    case RuleId::disjunctive: return "disjunctive";
    case RuleId::yager: return "yager";
    case RuleId::dubois_prade: return "dubois-prade";
    case RuleId::mean: return "mean";
    case RuleId::pcr6: return "pcr6";
    case RuleId::florea: return "florea";
    case RuleId::mixed: return "mixed";
    case RuleId::cautious: return "cautious";
    case RuleId::lns: return "lns";
  }
  throw validation_error("unknown rule id");
}

RuleId rule_from_string(std::string_view name) {
  static constexpr std::pair<std::string_view, RuleId> table[] = {
      {"conjunctive", RuleId::conjunctive}, {"dempster", RuleId::dempster},
      {"disjunctive", RuleId::disjunctive}, {"yager", RuleId::yager},
      {"dubois-prade", RuleId::dubois_prade}, {"mean", RuleId::mean},
      {"pcr6", RuleId::pcr6}, {"florea", RuleId::florea},
      {"mixed", RuleId::mixed}, {"cautious", RuleId::cautious},
      {"lns", RuleId::lns},
  };
  for (const auto& [key, id] : table) {
    if (key == name) return id;
  }
  throw validation_error("unknown rule: " + std::string(name));
}

MassFunction conjunctive(std::span<const MassFunction> sources) {
  const Frame& frame = check_sources(sources, 1, "conjunctive");
  return MassFunction::from_focal_masses(frame, conjunctive_raw(sources));
}

MassFunction dempster(std::span<const MassFunction> sources) {
  const Frame& frame = check_sources(sources, 1, "dempster");
  check_no_empty_focal(sources, "dempster");
  FocalMap raw = conjunctive_raw(sources);
  raw.erase(0);
  double retained = 0.0;
  for (const auto& [bits, mass] : raw) retained += mass;
  if (retained <= 0.0) {
    throw computation_error("dempster undefined under total conflict");
  }
  for (auto& [bits, mass] : raw) mass /= retained;
  return MassFunction::from_focal_masses(frame, std::move(raw));
}

MassFunction disjunctive(std::span<const MassFunction> sources) {
  const Frame& frame = check_sources(sources, 1, "disjunctive");
  return MassFunction::from_focal_masses(frame, disjunctive_raw(sources));
}

MassFunction yager(std::span<const MassFunction> sources) {
  const Frame& frame = check_sources(sources, 1, "yager");
  FocalMap raw = conjunctive_raw(sources);
  const auto it = raw.find(0);
  if (it != raw.end()) {
    const double conflict = it->second;
    raw.erase(it);
    raw[frame.full_bits()] += conflict;
  }
  return MassFunction::from_focal_masses(frame, std::move(raw));
}

MassFunction dubois_prade(std::span<const MassFunction> sources) {
  const Frame& frame = check_sources(sources, 1, "dubois-prade");
  check_no_empty_focal(sources, "dubois-prade");
  FocalMap acc;
  visit_tuples(sources, [&](std::uint32_t inter, std::uint32_t uni, double product, const auto&) {
    acc[inter ? inter : uni] += product;
  });
  return MassFunction::from_focal_masses(frame, std::move(acc));
}

MassFunction average(std::span<const MassFunction> sources) {
  const Frame& frame = check_sources(sources, 1, "mean");
  const double share = 1.0 / static_cast<double>(sources.size());
  FocalMap acc;
  for (const auto& m : sources) {
    for (const auto& [bits, mass] : m.focals()) acc[bits] += share * mass;
  }
  return MassFunction::from_focal_masses(frame, std::move(acc));
}

MassFunction pcr6(std::span<const MassFunction> sources) {
  const Frame& frame = check_sources(sources, 2, "pcr6");
  check_no_empty_focal(sources, "pcr6");
  FocalMap acc;
  visit_tuples(sources, [&](std::uint32_t inter, std::uint32_t, double product,
                            const std::vector<std::pair<std::uint32_t, double>>& chosen) {
    if (inter) {
      acc[inter] += product;
      return;
    }
    double denom = 0.0;
    for (const auto& [bits, mass] : chosen) denom += mass;
    if (denom <= 0.0) return;
    for (const auto& [bits, mass] : chosen) {
      acc[bits] += product * mass / denom;
    }
  });
  return MassFunction::from_focal_masses(frame, std::move(acc));
}

MassFunction florea(std::span<const MassFunction> sources) {
  const Frame& frame = check_sources(sources, 1, "florea");
  check_no_empty_focal(sources, "florea");
  FocalMap conj = conjunctive_raw(sources);
  const FocalMap dis = disjunctive_raw(sources);

  double kappa = 0.0;
  if (const auto it = conj.find(0); it != conj.end()) {
    kappa = it->second;
    conj.erase(it);
  }
  const double denom = 1.0 - kappa + kappa * kappa;
  const double beta1 = kappa / denom;
  const double beta2 = (1.0 - kappa) / denom;

  FocalMap acc;
  for (const auto& [bits, mass] : dis) acc[bits] += beta1 * mass;
  for (const auto& [bits, mass] : conj) acc[bits] += beta2 * mass;
  return MassFunction::from_focal_masses(frame, std::move(acc));
}

MassFunction mixed(const MassFunction& m1, const MassFunction& m2, const RuleConfig& config) {
  require_same_frame(m1.frame(), m2.frame());
  if (config.delta_policy == MixedDeltaPolicy::constant &&
      (config.delta2 < 0.0 || config.delta2 > 1.0)) {
    throw validation_error("constant delta2 must lie in [0,1]");
  }
  FocalMap acc;
  for (const auto& [y1, v1] : m1.focals()) {
    for (const auto& [y2, v2] : m2.focals()) {
      const double product = v1 * v2;
      const double d2 = delta2_for(config, y1, y2);
      if (d2 > 0.0) acc[y1 & y2] += d2 * product;
      if (d2 < 1.0) acc[y1 | y2] += (1.0 - d2) * product;
    }
  }
  return MassFunction::from_focal_masses(m1.frame(), std::move(acc));
}

MassFunction cautious(std::span<const MassFunction> sources) {
  const Frame& frame = check_sources(sources, 1, "cautious");
  check_non_dogmatic(sources, "cautious");

  std::vector<WeightFunction> weights;
  weights.reserve(sources.size());
  for (const auto& m : sources) weights.push_back(canonical_decomposition(m));

  std::map<std::uint32_t, double> min_weights;
  for (const auto& w : weights) {
    for (const auto& [bits, value] : w.entries()) {
      min_weights.emplace(bits, std::numeric_limits<double>::infinity());
    }
  }
  // Sources without a stored entry contribute an implicit weight of 1, so
  // the minimum may sit above 1 only when every source's weight does.
  for (auto& [bits, value] : min_weights) {
    for (const auto& w : weights) {
      value = std::min(value, w.weight_bits(bits));
    }
  }
  return mass_from_weights(WeightFunction(frame, std::move(min_weights)));
}

MassFunction lns(std::span<const MassFunction> sources) {
  const Frame& frame = check_sources(sources, 1, "lns");
  check_non_dogmatic(sources, "lns");

  // Clusters of simple components, keyed by focal element; vacuous
  // components (weight 1) are not stored and so never count. The cluster
  // discount is only meaningful when every component is a proper simple
  // mass function, i.e. when each source is separable: a weight above one
  // would make the discounted recombination leave negative mass.
  std::map<std::uint32_t, std::vector<double>> clusters;
  for (const auto& m : sources) {
    const WeightFunction weights = canonical_decomposition(m);
    for (const auto& [bits, value] : weights.entries()) {
      if (value > 1.0 + 1e-9) {
        throw computation_error("lns requires separable inputs (canonical weights at most 1)");
      }
      clusters[bits].push_back(std::min(value, 1.0));
    }
  }
  std::size_t total = 0;
  for (const auto& [bits, members] : clusters) total += members.size();
  if (total == 0) {
    return MassFunction::vacuous(frame);
  }

  std::map<std::uint32_t, double> combined;
  for (const auto& [bits, members] : clusters) {
    const double alpha = static_cast<double>(members.size()) / static_cast<double>(total);
    double product = 1.0;
    for (const double w : members) product *= w;
    combined.emplace(bits, 1.0 - alpha + alpha * product);
  }
  return mass_from_weights(WeightFunction(frame, std::move(combined)));
}

MassFunction combine(RuleId rule, std::span<const MassFunction> sources, const RuleConfig& config) {
  switch (rule) {
    case RuleId::conjunctive: return conjunctive(sources);
    case RuleId::dempster: return dempster(sources);
    case RuleId::disjunctive: return disjunctive(sources);
    case RuleId::yager: return yager(sources);
    case RuleId::dubois_prade: return dubois_prade(sources);
    case RuleId::mean: return average(sources);
    case RuleId::pcr6: return pcr6(sources);
    case RuleId::florea: return florea(sources);
    case RuleId::mixed:
      if (sources.size() != 2) {
        throw validation_error("mixed combines exactly two mass functions");
      }
      return mixed(sources[0], sources[1], config);
    case RuleId::cautious: return cautious(sources);
    case RuleId::lns: return lns(sources);
  }
  throw validation_error("unknown rule id");
}

} // namespace beliefs

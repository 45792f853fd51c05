#pragma once

#include <span>
#include <string>
#include <string_view>

#include "beliefs/mass.hpp"

namespace beliefs {

enum class RuleId {
  conjunctive,
  dempster,
  disjunctive,
  yager,
  dubois_prade,
  mean,
  pcr6,
  florea,
  mixed,
  cautious,
  lns,
};

/// Stable identifiers used by files and the CLI.
std::string_view to_string(RuleId rule);
RuleId rule_from_string(std::string_view name);

/// How the mixed rule splits a product mass between the intersection and
/// the union of a focal pair.
enum class MixedDeltaPolicy {
  constant,          // fixed delta2
  cardinality_ratio, // |Y1 n Y2| / min(|Y1|, |Y2|)
  jaccard,           // |Y1 n Y2| / |Y1 u Y2|
};

struct RuleConfig {
  MixedDeltaPolicy delta_policy = MixedDeltaPolicy::jaccard;
  double delta2 = 0.5; // used by the constant policy only; delta1 = 1 - delta2
};

/// Non-normalized conjunctive rule; may leave mass on the empty set.
MassFunction conjunctive(std::span<const MassFunction> sources);

/// Conjunctive rule normalized by the retained mass. Requires inputs free
/// of mass on the empty set; fails on total conflict.
MassFunction dempster(std::span<const MassFunction> sources);

/// Disjunctive rule: product masses accumulate on unions.
MassFunction disjunctive(std::span<const MassFunction> sources);

/// Conjunctive rule with the conflict transferred to the full frame.
MassFunction yager(std::span<const MassFunction> sources);

/// Conjunctive rule with each partial conflict transferred to the union of
/// the focal elements that caused it. Requires inputs free of mass on the
/// empty set.
MassFunction dubois_prade(std::span<const MassFunction> sources);

/// Arithmetic mean of the masses, focal element by focal element.
MassFunction average(std::span<const MassFunction> sources);

/// Proportional conflict redistribution: each partial conflict goes back to
/// the focal elements that produced it, proportionally to their masses.
/// Needs at least two sources, all free of mass on the empty set.
MassFunction pcr6(std::span<const MassFunction> sources);

/// Conflict-weighted mix of the disjunctive and conjunctive rules with
/// weights kappa/(1-kappa+kappa^2) and (1-kappa)/(1-kappa+kappa^2).
/// Requires inputs free of mass on the empty set.
MassFunction florea(std::span<const MassFunction> sources);

/// Pairwise rule splitting each product mass between intersection and union
/// according to the configured delta policy.
MassFunction mixed(const MassFunction& m1, const MassFunction& m2, const RuleConfig& config = {});

/// Idempotent combination for dependent sources: per-subset minimum of the
/// canonical weights, recombined conjunctively. All inputs must be
/// non-dogmatic.
MassFunction cautious(std::span<const MassFunction> sources);

/// Combination for many sources: simple components are clustered by focal
/// element, each cluster's weight product is discounted by the cluster's
/// share of all components, and the results are recombined conjunctively.
/// Inputs must be non-dogmatic and separable (every canonical weight at
/// most one); otherwise the discounted recombination is not a mass
/// function.
MassFunction lns(std::span<const MassFunction> sources);

/// Dispatch by rule identifier. The config is consulted by the mixed rule
/// only; mixed requires exactly two sources.
MassFunction combine(RuleId rule, std::span<const MassFunction> sources,
                     const RuleConfig& config = {});

} // namespace beliefs

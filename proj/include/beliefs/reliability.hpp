#pragma once

#include <span>
#include <string>
#include <vector>

#include "beliefs/conflict.hpp"
#include "beliefs/mass.hpp"

namespace beliefs {

/// Maps a conflict value in [0,1] to a reliability in [0,1] via
/// (1 - conf^lambda)^(1/lambda). Decreasing in the conflict, with
/// alpha(0) = 1 and alpha(1) = 0.
double reliability_from_conflict(double conflict, double lambda);

struct ReliabilityProfile {
  double lambda = 2.0;
  std::vector<double> alphas;
  std::string provenance = "conflict-derived";
};

struct DiscountConfig {
  double lambda = 2.0;
  MeasureConfig measure{};
  SourceConflictMethod method = SourceConflictMethod::average;
  RuleId combiner = RuleId::mean; // for the combined method
};

struct DiscountResult {
  std::vector<MassFunction> discounted;
  ReliabilityProfile profile;
};

/// Estimates each source's reliability from its conflict with the others
/// and discounts it accordingly.
DiscountResult discount_by_conflict(std::span<const MassFunction> sources,
                                    const DiscountConfig& config = {});

/// Discount factor that best aligns the pignistic probability with full
/// support of one singleton: minimizes the squared gap between
/// alpha * BetP + (1 - alpha)/n and the support indicator over singletons.
/// Closed form of the quadratic objective, clamped to [0,1]; a constant
/// objective keeps the source (alpha = 1).
double estimate_alpha_pignistic(const MassFunction& m, const Subset& supported);

} // namespace beliefs
